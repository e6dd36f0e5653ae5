from hyperspectra.generators import complete_multipartite
from hyperspectra.joins import JoinFamily, join_set, predicted_join_spectrum
from hyperspectra.reports import build_report, join_checks
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "cor1"
THEOREM_NAME = "Взвешенное соединение семейства"
THEOREM_DESC = "lambda - w_s d_pp для неперроновых lambda участников и фактор-матрица соединения с весом w_s."
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "members", "type": "hypergraphs", "label": "Участники (через ;)",
     "default": "empty:3:2;empty:3:3;empty:3:4"},
    {"name": "m", "type": "int", "label": "Однородность m", "default": 3},
    {"name": "ws", "type": "rational", "label": "Вес новых рёбер w_s", "default": "1"},
]


def verify(params, include_paper_constants=False):
    family = JoinFamily(tuple(params["members"]), m=params["m"], ws=params["ws"])
    h = join_set(family)
    observed = hypergraph_spectrum(h)
    checks = join_checks(family.as_plan(), h, family.m, observed)
    notes = []
    if params["ws"] == 1 and all(member.edge_count == 0 for member in family.members):
        # соединение пустых гиперграфов с весом 1 есть слабый полный многодольный
        sizes = [member.n for member in family.members]
        checks["equals_weak_multipartite"] = h.edges == complete_multipartite(family.m, sizes).edges
        notes.append(f"Соединение совпадает с K^{family.m}_{{{','.join(map(str, sizes))}}}")
    return build_report(THEOREM_ID, params, predicted_join_spectrum(family).values(), observed,
                        TOLERANCE, checks=checks, notes=notes, include_paper_constants=include_paper_constants)
