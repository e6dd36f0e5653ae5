from hyperspectra.generators import complete_multipartite
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import complete_multipartite_equal_spectrum
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "remark1"
THEOREM_NAME = "Спектр K^m_{n,...,n}"
THEOREM_DESC = "n^{m-1} (x1), -n^{m-1}/(m-1) (x(m-1)) и 0 (x(nm-m)) против численного спектра."
TOLERANCE = 1e-10

PARAMS_SCHEMA = [
    {"name": "m", "type": "int", "label": "Однородность m", "default": 3},
    {"name": "n", "type": "int", "label": "Размер каждой доли", "default": 1},
]


def verify(params, include_paper_constants=False):
    m, n = params["m"], params["n"]
    predicted = complete_multipartite_equal_spectrum(m, n).values()
    observed = hypergraph_spectrum(complete_multipartite(m, [n] * m))
    return build_report(THEOREM_ID, params, predicted, observed, TOLERANCE,
                        include_paper_constants=include_paper_constants)
