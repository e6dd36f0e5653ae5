from hyperspectra.core.hypergraph import is_uniform
from hyperspectra.corona import (
    CoronaGeometry, compare_constants, constants_from_corona, corona_constants_oracle, corona_constants_paper,
    vertex_corona,
)
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import vertex_corona_cor3_spectrum
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "cor3"
THEOREM_NAME = "Вершинная корона H_0 ∘ H_i (p = 1)"
THEOREM_DESC = "lambda - c для неперроновых lambda копий и alpha^± = (rho + mu ± sqrt((rho - mu)^2 + 4 b^2 n_1))/2."
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "h0", "type": "hypergraph", "label": "База H_0", "default": "multipartite:3:1,1,1"},
    {"name": "attach", "type": "hypergraph", "label": "Присоединяемый H_i", "default": "empty:3:1"},
]


def verify(params, include_paper_constants=False):
    h0, attach = params["h0"], params["attach"]
    members = [attach] * h0.n
    corona = vertex_corona(h0, h0.n, 1, members)
    constants = constants_from_corona("vertex", h0, members, corona, p=1)
    geometry = CoronaGeometry.for_vertex(is_uniform(h0), h0.n, 1, attach.n)
    canonical = corona_constants_oracle(geometry)
    checks = {"oracle_independent_of_instance": (constants.a, constants.b, constants.c)
              == (canonical.a, canonical.b, canonical.c)}
    rows = compare_constants(constants, corona_constants_paper(geometry))
    notes = [f"Вырожденные константы: {', '.join(sorted(constants.vacuous))}"] if constants.vacuous else []
    return build_report(
        THEOREM_ID, params,
        predicted=vertex_corona_cor3_spectrum(h0, members, constants).values(),
        observed=hypergraph_spectrum(corona),
        tolerance=TOLERANCE, checks=checks, constants=rows, notes=notes,
        include_paper_constants=include_paper_constants,
    )
