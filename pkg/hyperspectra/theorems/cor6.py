from hyperspectra.core.hypergraph import is_uniform
from hyperspectra.corona import (
    CoronaGeometry, compare_constants, constants_from_corona, corona_constants_paper, edge_corona,
)
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import edge_corona_spectrum
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "cor6"
THEOREM_NAME = "Рёберная корона регулярного гиперграфа"
THEOREM_DESC = (
    "rho кратности k-n, lambda - c и beta^± = (rho + alpha mu ± sqrt((rho - alpha mu)^2 "
    "+ 4 b^2 n_1 ((m-1) mu + r)))/2, alpha = 1 + (m-1)a."
)
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "h0", "type": "hypergraph", "label": "База H_0", "default": "complete-uniform:3:4"},
    {"name": "attach", "type": "hypergraph", "label": "Присоединяемый к каждому ребру H_i", "default": "empty:3:2"},
]


def verify(params, include_paper_constants=False):
    h0, attach = params["h0"], params["attach"]
    members = [attach] * h0.edge_count
    corona = edge_corona(h0, members)
    constants = constants_from_corona("edge", h0, members, corona)
    geometry = CoronaGeometry.for_edge(is_uniform(h0), h0, attach.n)
    alpha = 1 + (is_uniform(h0) - 1) * constants.a
    return build_report(
        THEOREM_ID, params,
        predicted=edge_corona_spectrum(h0, members, constants).values(),
        observed=hypergraph_spectrum(corona),
        tolerance=TOLERANCE,
        constants=compare_constants(constants, corona_constants_paper(geometry)),
        notes=[f"Базовый блок: {alpha} A_H0; a: приращение на одно общее ребро"],
        include_paper_constants=include_paper_constants,
    )
