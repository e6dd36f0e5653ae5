from hyperspectra.core.hypergraph import is_regular
from hyperspectra.corona import constants_from_corona, edge_corona
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import (
    edge_corona_polynomial, edge_corona_polynomial_spectrum, edge_corona_spectrum,
)
from hyperspectra.spectra.eigen import hypergraph_spectrum, max_deviation

THEOREM_ID = "cor5"
THEOREM_NAME = "Рёберная корона: определительная форма"
THEOREM_DESC = (
    "f(x) = (rho - x)^{k-n} det(beta_1(x) A_{H_0} - b^2 n_1 D + beta_2(x) I) prod(lambda - c - x); "
    "на регулярной базе сверяется с явными beta^±."
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
    predicted = edge_corona_polynomial_spectrum(h0, members, constants).values()
    checks = {}
    if is_regular(h0) is not None:
        explicit = edge_corona_spectrum(h0, members, constants).values()
        checks["explicit_roots_agree"] = max_deviation(predicted, explicit) <= TOLERANCE
    poly = edge_corona_polynomial(h0, members, constants)
    return build_report(THEOREM_ID, params, predicted, hypergraph_spectrum(corona), TOLERANCE,
                        checks=checks, notes=[f"Многочлен степени {poly.degree}: {poly}"],
                        include_paper_constants=include_paper_constants)
