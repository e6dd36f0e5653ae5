from .config import settings
from .exceptions import HyperSpectraError
from .hypergraph import (
    Hypergraph, new_hypergraph, adjacency_matrix, valency, is_uniform, is_regular,
    is_connected, codegree, induced_subhypergraph, is_isomorphic, iter_isomorphisms,
)
from .rational import RationalMatrix, parse_rational, format_rational

__all__ = [
    "settings", "HyperSpectraError", "Hypergraph", "new_hypergraph", "adjacency_matrix",
    "valency", "is_uniform", "is_regular", "is_connected", "codegree", "induced_subhypergraph",
    "is_isomorphic", "iter_isomorphisms", "RationalMatrix", "parse_rational", "format_rational",
]
