from hyperspectra.core.hypergraph import is_uniform
from hyperspectra.corona import (
    CoronaGeometry, compare_constants, constants_from_corona, corona_constants_paper, vertex_corona,
)
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import vertex_corona_reduced_spectrum
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "thm4"
THEOREM_NAME = "Обобщённая вершинная корона H_0 ∘^k_p H_i"
THEOREM_DESC = (
    "Спектр сводится к симметричной матрице порядка n+k, rho кратности k(p-1) "
    "и lambda - c кратности kp(n_1-1)."
)
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "h0", "type": "hypergraph", "label": "База H_0", "default": "example3-h1"},
    {"name": "members", "type": "hypergraphs", "label": "H_1..H_k (через ;)",
     "default": "empty:3:2;empty:3:2;empty:3:2"},
    {"name": "p", "type": "int", "label": "Размер ячейки p", "default": 2},
]


def verify(params, include_paper_constants=False):
    h0, members, p = params["h0"], params["members"], params["p"]
    corona = vertex_corona(h0, len(members), p, members)
    constants = constants_from_corona("vertex", h0, members, corona, p=p)
    geometry = CoronaGeometry.for_vertex(is_uniform(h0), len(members), p, members[0].n)
    return build_report(
        THEOREM_ID, params,
        predicted=vertex_corona_reduced_spectrum(h0, members, p, constants).values(),
        observed=hypergraph_spectrum(corona),
        tolerance=TOLERANCE,
        constants=compare_constants(constants, corona_constants_paper(geometry)),
        notes=[f"a = {constants.a}, b = {constants.b}, c = {constants.c} (по матрице смежности короны)"],
        include_paper_constants=include_paper_constants,
    )
