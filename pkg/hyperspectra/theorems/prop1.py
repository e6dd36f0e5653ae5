from hyperspectra.partitions import coarsest_equitable_partition, is_equitable, orbit_partition, refines
from hyperspectra.reports import build_report

THEOREM_ID = "prop1"
THEOREM_NAME = "Орбиты автоморфизмов образуют равномерное разбиение"
THEOREM_DESC = "orbit_partition проходит is_equitable и измельчает грубейшее равномерное разбиение."
TOLERANCE = 0.0

PARAMS_SCHEMA = [
    {"name": "hypergraphs", "type": "hypergraphs", "label": "Гиперграфы (через ;), n <= 8",
     "default": "multipartite:3:1,1,2;loose-path:3:1:2;loose-cycle:3:1:2;example3-h0;example3-g0;"
                "complete-uniform:3:5;cycle:6;loose-path:4:2:2"},
]


def verify(params, include_paper_constants=False):
    checks, notes = {}, []
    for idx, h in enumerate(params["hypergraphs"], start=1):
        name = h.label or f"#{idx}"
        orbits = orbit_partition(h)
        coarsest = coarsest_equitable_partition(h)
        checks[f"orbits_equitable[{name}]"] = bool(is_equitable(h, orbits))
        checks[f"orbits_refine_coarsest[{name}]"] = refines(orbits, coarsest)
        notes.append(f"{name}: орбиты {orbits.as_lists()}, грубейшее {coarsest.as_lists()}")
    return build_report(THEOREM_ID, params, tolerance=TOLERANCE, checks=checks, notes=notes, deviation=0.0,
                        include_paper_constants=include_paper_constants)
