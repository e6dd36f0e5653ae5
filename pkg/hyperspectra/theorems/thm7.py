from hyperspectra.generators import loose_path
from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import double_root_residual, loose_path_s1_spectrum, loose_path_spectrum
from hyperspectra.spectra.eigen import SpectrumReport, hypergraph_spectrum, max_deviation

THEOREM_ID = "thm7"
THEOREM_NAME = "Спектр s-свободного пути"
THEOREM_DESC = (
    "-1/(m-1) и -2/(m-1) с явными кратностями плюс корни многочлена из f_1, f_2, f_3 "
    "(или t_1, t_2, t_3 при m = 2s), делённые на m-1."
)
TOLERANCE = 1e-6

PARAMS_SCHEMA = [
    {"name": "m", "type": "int", "label": "Однородность m", "default": 3},
    {"name": "s", "type": "int", "label": "Пересечение соседних рёбер s", "default": 1},
    {"name": "n", "type": "int", "label": "Число рёбер n", "default": 2},
]


def verify(params, include_paper_constants=False):
    m, s, n = params["m"], params["s"], params["n"]
    predicted = loose_path_spectrum(m, s, n).values()
    observed = hypergraph_spectrum(loose_path(m, s, n))
    seen = SpectrumReport.from_values(observed)
    ones = 2 * (s - 1) if m == 2 * s else n * (m - 1) - 2 * s * (n - 1)
    checks = {
        "multiplicity_minus_1_over_m_minus_1": seen.multiplicity_of(-1 / (m - 1)) >= ones,
        "multiplicity_minus_2_over_m_minus_1": seen.multiplicity_of(-2 / (m - 1)) >= (n - 1) * (s - 1),
    }
    notes = ["Квадратный множитель f_j: x^2 - (m-3+2s cos)x - 2(m-s-1+s cos); при n = 2 слагаемое с f_3 равно нулю"]
    if s == 1 and m >= 3 and n >= 2:
        checks["s1_path_agrees"] = max_deviation(loose_path_s1_spectrum(m, n).values(), predicted) <= TOLERANCE
        residual = double_root_residual(m, n)
        checks["double_root_at_minus_1"] = residual < 1e-8
        notes.append(f"(x+1)^2 | g: невязка {residual:.2e}; множитель u = -(1+x)")
    return build_report(THEOREM_ID, params, predicted, observed, TOLERANCE, checks=checks, notes=notes,
                        include_paper_constants=include_paper_constants)
