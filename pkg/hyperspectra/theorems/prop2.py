from hyperspectra.generators import complete_multipartite
from hyperspectra.reports import build_report
from hyperspectra.spectra.eigen import hypergraph_spectrum
from hyperspectra.spectra.polynomials import charpoly_exact, exact_roots, multipartite_charpoly

THEOREM_ID = "prop2"
THEOREM_NAME = "Характеристический многочлен K^m_{n_1..n_m}"
THEOREM_DESC = "Сравнивает формулу x^{n-m}(x^m - sum ...) с точным многочленом построенной матрицы смежности."
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "m", "type": "int", "label": "Однородность m", "default": 3},
    {"name": "sizes", "type": "ints", "label": "Размеры долей", "default": "2,2,2"},
    {"name": "batch", "type": "json", "label": "Дополнительные наборы [[m, [n_1..n_m]], ...]", "default": None},
]


def _matches(m, sizes):
    formula = multipartite_charpoly(m, sizes)
    exact = charpoly_exact(complete_multipartite(m, sizes).adjacency)
    return formula, formula == exact


def verify(params, include_paper_constants=False):
    m, sizes = params["m"], params["sizes"]
    formula, equal = _matches(m, sizes)
    n = sum(sizes)
    lowest = next(i for i, c in enumerate(formula.coeffs) if c != 0)
    checks = {"formula_equals_exact": equal, "zero_multiplicity_is_n_minus_m": lowest == n - m}
    notes = [f"f(x) = {formula}"]
    for entry_m, entry_sizes in params.get("batch") or []:
        _, ok = _matches(int(entry_m), [int(v) for v in entry_sizes])
        checks[f"formula_equals_exact[{entry_m};{','.join(map(str, entry_sizes))}]"] = ok
    return build_report(
        THEOREM_ID, params,
        predicted=exact_roots(formula),
        observed=hypergraph_spectrum(complete_multipartite(m, sizes)),
        tolerance=TOLERANCE, checks=checks, notes=notes,
        include_paper_constants=include_paper_constants,
    )
