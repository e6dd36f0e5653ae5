from hyperspectra.core.hypergraph import is_isomorphic
from hyperspectra.cospectral import SwitchingPartition, are_cospectral, build_switch_seed, gm_switch
from hyperspectra.reports import build_report
from hyperspectra.spectra.eigen import hypergraph_spectrum

THEOREM_ID = "prop3"
THEOREM_NAME = "Переключение сохраняет спектр"
THEOREM_DESC = "H = (V_1 ∪ D, E_1 ∪ E_2) и H_rho = (V_1 ∪ D, E_1 ∪ E_3) коспектральны; проверка точным многочленом."
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "h1", "type": "hypergraph", "label": "Регулярный H_1 на 2t вершинах", "default": "example3-h1"},
    {"name": "v2", "type": "ints", "label": "V_2 (t вершин)", "default": "3,4,5"},
    {"name": "expect_non_isomorphic", "type": "bool", "label": "Ожидать неизоморфную пару", "default": True},
]


def verify(params, include_paper_constants=False):
    h1, v2 = params["h1"], params["v2"]
    h, h_rho = build_switch_seed(h1, v2)
    d = tuple(range(h1.n + 1, h.n + 1))
    rho = SwitchingPartition.of([h1.vertices], d)
    switched = gm_switch(h, rho)
    checks = {
        "exact_charpoly_equal": are_cospectral(h, h_rho, mode="exact"),
        "switch_maps_edge_for_edge": switched.edges == h_rho.edges,
        "switch_is_involution": gm_switch(switched, rho).edges == h.edges,
    }
    if params["expect_non_isomorphic"]:
        checks["non_isomorphic"] = not is_isomorphic(h, h_rho)
    return build_report(THEOREM_ID, params, hypergraph_spectrum(h), hypergraph_spectrum(h_rho), TOLERANCE,
                        checks=checks, include_paper_constants=include_paper_constants)
