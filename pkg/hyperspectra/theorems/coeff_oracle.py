from itertools import product

from hyperspectra.joins import join_coeff_oracle, join_coeff_pp, join_coeff_pq
from hyperspectra.reports import build_report

THEOREM_ID = "coeff-oracle"
THEOREM_NAME = "Коэффициенты соединения против перебора"
THEOREM_DESC = "d_pp и d_pq по формулам совпадают с прямым перебором m-подмножеств для всех малых наборов."
TOLERANCE = 0.0

PARAMS_SCHEMA = [
    {"name": "max_m", "type": "int", "label": "Наибольшее m", "default": 5},
    {"name": "max_total", "type": "int", "label": "Наибольшая сумма размеров", "default": 10},
]


def _size_vectors(k, max_total):
    for sizes in product(range(1, max_total + 1), repeat=k):
        if sum(sizes) <= max_total:
            yield list(sizes)


def verify(params, include_paper_constants=False):
    mismatches, compared = [], 0
    for m in range(2, params["max_m"] + 1):
        for k in range(1, m + 1):
            for sizes in _size_vectors(k, params["max_total"]):
                for p in range(1, k + 1):
                    if sizes[p - 1] >= 2:
                        compared += 1
                        if join_coeff_pp(sizes, m, p) != join_coeff_oracle(sizes, m, p):
                            mismatches.append(f"pp m={m} sizes={sizes} p={p}")
                    for q in range(p + 1, k + 1):
                        compared += 1
                        if join_coeff_pq(sizes, m, p, q) != join_coeff_oracle(sizes, m, p, q):
                            mismatches.append(f"pq m={m} sizes={sizes} p={p} q={q}")
    notes = [f"Сравнено коэффициентов: {compared}"] + mismatches[:20]
    return build_report(THEOREM_ID, params, tolerance=TOLERANCE, checks={"zero_mismatches": not mismatches},
                        notes=notes, deviation=0.0, include_paper_constants=include_paper_constants)
