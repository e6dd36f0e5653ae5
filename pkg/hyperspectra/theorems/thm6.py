from hyperspectra.generators import complete_graph, cycle_graph, loose_cycle
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import edge_corona_spectrum, loose_cycle_spectrum
from hyperspectra.spectra.eigen import SpectrumReport, hypergraph_spectrum, max_deviation

THEOREM_ID = "thm6"
THEOREM_NAME = "Спектр s-свободного цикла"
THEOREM_DESC = (
    "m = 2s: -2/(2s-1) кратности n(s-1) и (2/(2s-1))(s-1+s cos 2pi i/n); "
    "m >= 2s+1: -1/(m-1), -2/(m-1) и корни квадратных трёхчленов, делённые на m-1."
)
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "m", "type": "int", "label": "Однородность m", "default": 3},
    {"name": "s", "type": "int", "label": "Пересечение соседних рёбер s", "default": 1},
    {"name": "n", "type": "int", "label": "Число рёбер n", "default": 3},
]


def verify(params, include_paper_constants=False):
    m, s, n = params["m"], params["s"], params["n"]
    predicted = loose_cycle_spectrum(m, s, n).values()
    observed = hypergraph_spectrum(loose_cycle(m, s, n))
    seen = SpectrumReport.from_values(observed)
    checks = {}
    notes = []
    if m == 2 * s:
        checks["multiplicity_minus_2_over_2s_minus_1"] = seen.multiplicity_of(-2 / (2 * s - 1)) >= n * (s - 1)
    else:
        notes.append("Корни трёхчленов x^2 - (m-3+2s cos)x - 2(m-s-1+s cos) делятся на m-1")
        if m - 2 * s - 1:
            checks["multiplicity_minus_1_over_m_minus_1"] = seen.multiplicity_of(-1 / (m - 1)) >= n * (m - 2 * s - 1)
        if s > 1:
            checks["multiplicity_minus_2_over_m_minus_1"] = seen.multiplicity_of(-2 / (m - 1)) >= n * (s - 1)
    if s == 1 and m >= 3 and n >= 3:
        # граф G = рёберная корона C_n и K_{m-2}, A_H = A_G/(m-1)
        corona = edge_corona_spectrum(cycle_graph(n), [complete_graph(m - 2)] * n).values()
        checks["edge_corona_agrees"] = max_deviation([v / (m - 1) for v in corona], predicted) <= TOLERANCE
    return build_report(THEOREM_ID, params, predicted, observed, TOLERANCE, checks=checks, notes=notes,
                        include_paper_constants=include_paper_constants)
