from .eigen import (
    EigenvalueEntry, SpectrumReport, group_eigenvalues, jacobi_eigh, eig_sym,
    hypergraph_spectrum, max_deviation, perron, perron_is_simple,
)
from .polynomials import (
    RationalPoly, charpoly_exact, multipartite_charpoly, squarefree_decomposition,
    isolate_real_roots, exact_roots, exact_roots_report, real_poly_roots,
)

__all__ = [
    "EigenvalueEntry", "SpectrumReport", "group_eigenvalues", "jacobi_eigh", "eig_sym",
    "hypergraph_spectrum", "max_deviation", "perron", "perron_is_simple",
    "RationalPoly", "charpoly_exact", "multipartite_charpoly", "squarefree_decomposition",
    "isolate_real_roots", "exact_roots", "exact_roots_report", "real_poly_roots",
]
