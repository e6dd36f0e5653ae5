from hyperspectra.joins import BackbonePlan, join_on_backbone, predicted_join_spectrum
from hyperspectra.reports import build_report, join_checks
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "thm1"
THEOREM_NAME = "Соединение по остову: сдвинутые собственные значения"
THEOREM_DESC = (
    "Для регулярных участников lambda - sum W_b(e) d_pp принадлежит спектру соединения "
    "с кратностью не меньше кратности lambda; остальные значения дают фактор-матрицу B."
)
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "backbone", "type": "hypergraph", "label": "Остов", "default": "complete-uniform:3:3"},
    {"name": "participants", "type": "hypergraphs", "label": "Участники (через ;)",
     "default": "empty:3:2;empty:3:3;empty:3:4"},
    {"name": "m", "type": "int", "label": "Однородность m", "default": 3},
    {"name": "require_connected", "type": "bool", "label": "Требовать связность участников", "default": False},
]


def verify(params, include_paper_constants=False):
    plan = BackbonePlan(params["backbone"], tuple(params["participants"]))
    m = params["m"]
    h = join_on_backbone(plan, m)
    observed = hypergraph_spectrum(h)
    checks = join_checks(plan, h, m, observed, require_connected=params["require_connected"])
    return build_report(THEOREM_ID, params, predicted_join_spectrum(plan, m).values(), observed,
                        TOLERANCE, checks=checks, include_paper_constants=include_paper_constants)
