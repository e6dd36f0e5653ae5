import math

from hyperspectra.core.hypergraph import is_connected
from hyperspectra.generators import cycle_graph, path_graph
from hyperspectra.reports import build_report
from hyperspectra.spectra.eigen import hypergraph_spectrum, max_deviation, perron_is_simple
from hyperspectra.spectra.polynomials import charpoly_exact, exact_roots

THEOREM_ID = "eigensolver"
THEOREM_NAME = "Базовая проверка собственного решателя"
THEOREM_DESC = (
    "Пути и циклы против 2cos(pi i/(l+1)) и 2cos(2pi i/n), простота перронова корня "
    "и согласие точных корней характеристического многочлена с численным спектром."
)
TOLERANCE = 1e-10

PARAMS_SCHEMA = [
    {"name": "max_order", "type": "int", "label": "Наибольший порядок пути/цикла", "default": 12},
    {"name": "instances", "type": "hypergraphs", "label": "Связные экземпляры для проверки Перрона",
     "default": "multipartite:3:1,1,1;multipartite:3:2,2,2;loose-path:3:1:2;loose-cycle:3:1:3;"
                "complete-uniform:3:4;example3-h0"},
]


def verify(params, include_paper_constants=False):
    deviation = 0.0
    for order in range(2, params["max_order"] + 1):
        path = [2 * math.cos(math.pi * i / (order + 1)) for i in range(1, order + 1)]
        deviation = max(deviation, max_deviation(path, hypergraph_spectrum(path_graph(order))))
        if order >= 3:
            cycle = [2 * math.cos(2 * math.pi * i / order) for i in range(1, order + 1)]
            deviation = max(deviation, max_deviation(cycle, hypergraph_spectrum(cycle_graph(order))))
    checks = {}
    for idx, h in enumerate(params["instances"], start=1):
        name = h.label or f"#{idx}"
        if is_connected(h):
            checks[f"perron_simple[{name}]"] = perron_is_simple(h)
        if h.n <= 12:
            roots = exact_roots(charpoly_exact(h.adjacency))
            checks[f"exact_roots_match[{name}]"] = max_deviation(roots, hypergraph_spectrum(h)) <= 1e-8
    return build_report(THEOREM_ID, params, tolerance=TOLERANCE, checks=checks, deviation=deviation,
                        include_paper_constants=include_paper_constants)
