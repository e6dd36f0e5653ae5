from hyperspectra.joins import BackbonePlan, join_on_backbone, predicted_join_spectrum
from hyperspectra.reports import build_report, join_checks
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "cor2"
THEOREM_NAME = "Соединение по взвешенному графу-остову"
THEOREM_DESC = "Остов является графом; сдвиг на sum w_pq d_pp по рёбрам остова, содержащим p."
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "backbone", "type": "hypergraph", "label": "Граф-остов", "default": "path:3"},
    {"name": "participants", "type": "hypergraphs", "label": "Участники (через ;)",
     "default": "complete-uniform:3:3;empty:3:2;complete-uniform:3:4"},
    {"name": "m", "type": "int", "label": "Однородность m", "default": 3},
]


def verify(params, include_paper_constants=False):
    backbone = params["backbone"]
    plan = BackbonePlan(backbone, tuple(params["participants"]))
    m = params["m"]
    h = join_on_backbone(plan, m)
    observed = hypergraph_spectrum(h)
    checks = join_checks(plan, h, m, observed)
    checks["backbone_is_graph"] = all(len(edge) == 2 for edge, _ in backbone.edges)
    return build_report(THEOREM_ID, params, predicted_join_spectrum(plan, m).values(), observed,
                        TOLERANCE, checks=checks, include_paper_constants=include_paper_constants)
