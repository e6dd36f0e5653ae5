from hyperspectra.generators import complete_multipartite
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import complete_multipartite_equal_spectrum, equal_blocks_spectrum
from hyperspectra.spectra.eigen import hypergraph_spectrum, max_deviation

THEOREM_ID = "note-two-block"
THEOREM_NAME = "Многодольный гиперграф с двумя размерами долей"
THEOREM_DESC = "l_1 долей размера n_1 и l_2 долей размера n_2: -s_i/(m-1), a^±/(m-1) и нули."
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "m", "type": "int", "label": "Однородность m = l_1 + l_2", "default": 3},
    {"name": "n1", "type": "int", "label": "n_1", "default": 1},
    {"name": "l1", "type": "int", "label": "l_1", "default": 2},
    {"name": "n2", "type": "int", "label": "n_2", "default": 2},
    {"name": "l2", "type": "int", "label": "l_2", "default": 1},
]


def verify(params, include_paper_constants=False):
    m, n1, l1, n2, l2 = (params[key] for key in ("m", "n1", "l1", "n2", "l2"))
    predicted = equal_blocks_spectrum(m, n1, l1, n2, l2).values()
    observed = hypergraph_spectrum(complete_multipartite(m, [n1] * l1 + [n2] * l2))
    checks = {"trace_zero": abs(sum(predicted)) < 1e-9 * max(1.0, max(abs(v) for v in predicted))}
    if n1 == n2:
        equal = complete_multipartite_equal_spectrum(m, n1).values()
        checks["degenerates_to_equal_parts"] = max_deviation(predicted, equal) <= TOLERANCE
    return build_report(THEOREM_ID, params, predicted, observed, TOLERANCE, checks=checks,
                        include_paper_constants=include_paper_constants)
