from hyperspectra.core.rational import parse_rational
from hyperspectra.joins import BackbonePlan, join_on_backbone_nonuniform, predicted_join_spectrum
from hyperspectra.reports import build_report, join_checks
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "thm3"
THEOREM_NAME = "Неоднородное соединение по остову"
THEOREM_DESC = (
    "Для каждого ребра остова новые рёбра всех мощностей из T_e с весами w_m; "
    "сдвиг на sum_e sum_{m in T_e} w_m d_pp и соответствующая фактор-матрица."
)
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "backbone", "type": "hypergraph", "label": "Остов", "default": "complete-graph:2"},
    {"name": "participants", "type": "hypergraphs", "label": "Участники (через ;)",
     "default": "empty:2:2;empty:2:2"},
    {"name": "cardinalities", "type": "json", "label": "T_e для каждого ребра остова", "default": [[2, 3]]},
    {"name": "weights", "type": "json", "label": "Веса w_m по мощностям", "default": {"2": "1", "3": "1"}},
]


def verify(params, include_paper_constants=False):
    plan = BackbonePlan(
        params["backbone"],
        tuple(params["participants"]),
        tuple(frozenset(int(size) for size in sizes) for sizes in params["cardinalities"]),
        {int(size): parse_rational(weight) for size, weight in params["weights"].items()},
    )
    h = join_on_backbone_nonuniform(plan)
    observed = hypergraph_spectrum(h)
    checks = join_checks(plan, h, None, observed)
    notes = [f"{h.edge_count} рёбер, размеры: {sorted({len(edge) for edge, _ in h.edges})}"]
    return build_report(THEOREM_ID, params, predicted_join_spectrum(plan).values(), observed,
                        TOLERANCE, checks=checks, notes=notes, include_paper_constants=include_paper_constants)
