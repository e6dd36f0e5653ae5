from hyperspectra.cospectral import corona_cospectral_family
from hyperspectra.reports import build_report
from hyperspectra.spectra.eigen import hypergraph_spectrum, max_deviation

THEOREM_ID = "family"
THEOREM_NAME = "Бесконечное семейство коспектральных пар"
THEOREM_DESC = "Вершинная корона с p = 1 переводит коспектральную пару в коспектральную пару."
TOLERANCE = 1e-8

PARAMS_SCHEMA = [
    {"name": "h0", "type": "hypergraph", "label": "H_0", "default": "example3-h0"},
    {"name": "g0", "type": "hypergraph", "label": "G_0", "default": "example3-g0"},
    {"name": "attach", "type": "hypergraph", "label": "Регулярный присоединяемый гиперграф", "default": "empty:3:2"},
    {"name": "depth", "type": "int", "label": "Глубина", "default": 2},
]


def verify(params, include_paper_constants=False):
    depth = params["depth"]
    pairs = corona_cospectral_family(params["h0"], params["g0"], params["attach"], depth)
    notes = [f"{pair.order} вершин: сертификат {pair.certificate}, {pair.isomorphism}" for pair in pairs]
    checks = {"pair_count": len(pairs) == depth + 1}
    checks.update({f"exact_where_small[{pair.order}]": pair.certificate == "exact"
                   for pair in pairs if pair.order <= 40})
    spectra = [(hypergraph_spectrum(pair.h), hypergraph_spectrum(pair.g)) for pair in pairs]
    return build_report(THEOREM_ID, params, spectra[-1][0], spectra[-1][1], TOLERANCE,
                        checks=checks, notes=notes, include_paper_constants=include_paper_constants,
                        deviation=max(max_deviation(h_values, g_values) for h_values, g_values in spectra))
