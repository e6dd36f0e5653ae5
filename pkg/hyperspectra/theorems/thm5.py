from hyperspectra.core.hypergraph import is_regular, is_uniform
from hyperspectra.corona import (
    CoronaGeometry, compare_constants, constants_from_corona, corona_constants_paper, edge_corona,
)
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import edge_corona_polynomial_spectrum
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "thm5"
THEOREM_NAME = "Рёберная корона нерегулярного гиперграфа"
THEOREM_DESC = "Точный многочлен непростой части спектра рёберной короны для произвольной однородной базы."
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "h0", "type": "hypergraph", "label": "База H_0", "default": "loose-path:3:1:2"},
    {"name": "attach", "type": "hypergraph", "label": "Присоединяемый к каждому ребру H_i", "default": "empty:3:2"},
]


def verify(params, include_paper_constants=False):
    h0, attach = params["h0"], params["attach"]
    members = [attach] * h0.edge_count
    corona = edge_corona(h0, members)
    constants = constants_from_corona("edge", h0, members, corona)
    geometry = CoronaGeometry.for_edge(is_uniform(h0), h0, attach.n)
    notes = [] if is_regular(h0) is None else ["База регулярна; явная форма даёт тот же спектр (cor6)"]
    return build_report(
        THEOREM_ID, params,
        predicted=edge_corona_polynomial_spectrum(h0, members, constants).values(),
        observed=hypergraph_spectrum(corona),
        tolerance=TOLERANCE,
        constants=compare_constants(constants, corona_constants_paper(geometry)),
        notes=notes,
        include_paper_constants=include_paper_constants,
    )
