"""
hyperspectra: спектры матриц смежности взвешенных гиперграфов,
соединения и короны, переключения и проверка замкнутых формул.
"""
from hyperspectra.core import (
    Hypergraph, new_hypergraph, adjacency_matrix, valency, is_uniform, is_regular,
    is_connected, codegree, induced_subhypergraph, is_isomorphic, HyperSpectraError, settings,
)

__version__ = "0.1.0"

__all__ = [
    "Hypergraph", "new_hypergraph", "adjacency_matrix", "valency", "is_uniform", "is_regular",
    "is_connected", "codegree", "induced_subhypergraph", "is_isomorphic", "HyperSpectraError",
    "settings", "__version__",
]
