from hyperspectra.core.hypergraph import is_uniform
from hyperspectra.corona import (
    CoronaGeometry, compare_constants, constants_from_corona, corona_constants_paper, vertex_corona,
)
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import vertex_corona_cor4_spectrum, vertex_corona_reduced_spectrum
from hyperspectra.spectra.eigen import hypergraph_spectrum, max_deviation

THEOREM_ID = "cor4"
THEOREM_NAME = "Вершинная корона с одной ячейкой (k = 1)"
THEOREM_DESC = (
    "H_0 r_0-регулярен, ко всему V_0 присоединены n копий H_1: rho кратности n-1, lambda - c кратности n, "
    "mu - a для неперроновых mu и alpha^±."
)
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "h0", "type": "hypergraph", "label": "База H_0", "default": "complete-uniform:3:4"},
    {"name": "attach", "type": "hypergraph", "label": "Присоединяемый H_1", "default": "empty:3:1"},
]


def verify(params, include_paper_constants=False):
    h0, attach = params["h0"], params["attach"]
    n = h0.n
    corona = vertex_corona(h0, 1, n, [attach])
    constants = constants_from_corona("vertex", h0, [attach], corona, p=n)
    predicted = vertex_corona_cor4_spectrum(h0, attach, constants).values()
    reduced = vertex_corona_reduced_spectrum(h0, [attach], n, constants).values()
    geometry = CoronaGeometry.for_vertex(is_uniform(h0), 1, n, attach.n)
    return build_report(
        THEOREM_ID, params, predicted, hypergraph_spectrum(corona), TOLERANCE,
        checks={"reduced_form_agrees": max_deviation(predicted, reduced) <= TOLERANCE},
        constants=compare_constants(constants, corona_constants_paper(geometry)),
        notes=["Неперроновы значения базы сдвигаются на -a, копий на -c"],
        include_paper_constants=include_paper_constants,
    )
