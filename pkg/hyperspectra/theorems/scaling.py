from hyperspectra.reports import build_report
from hyperspectra.spectra.closed_forms import scaling_deviation

THEOREM_ID = "scaling"
THEOREM_NAME = "Масштабирование ненулевого спектра"
THEOREM_DESC = "alpha ≠ 0 в спектре K^m_{n_i} тогда и только тогда, когда r^{m-1} alpha в спектре K^m_{r n_i}."
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "m", "type": "int", "label": "Однородность m", "default": 3},
    {"name": "r", "type": "int", "label": "Множитель r", "default": 2},
    {"name": "triples", "type": "json", "label": "Наборы размеров долей",
     "default": [[1, 1, 2], [1, 2, 3], [2, 2, 3], [1, 3, 4], [2, 3, 4]]},
]


def verify(params, include_paper_constants=False):
    m, r = params["m"], params["r"]
    deviations = {tuple(sizes): scaling_deviation(m, sizes, r) for sizes in params["triples"]}
    notes = [f"{list(sizes)}: относительное отклонение {dev:.2e}" for sizes, dev in deviations.items()]
    return build_report(THEOREM_ID, params, tolerance=TOLERANCE, notes=notes,
                        deviation=max(deviations.values(), default=0.0),
                        include_paper_constants=include_paper_constants)
