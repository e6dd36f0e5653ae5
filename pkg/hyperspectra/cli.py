"""
Командная строка hyperspectra.

JSON на stdout, ошибки на stderr в виде {"error": code, "message": ...}.
Коды выхода: 0 успех/PASS, 1 ошибка ввода, 2 FAIL, 3 отказ по лимиту перебора.
"""
import argparse
import json
import logging
import sys
from dataclasses import asdict
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import FormatError, HyperSpectraError, UsageError
from hyperspectra.core.hypergraph import is_isomorphic, is_regular, is_uniform
from hyperspectra.core.log import setup_logging
from hyperspectra.core.rational import parse_rational
from hyperspectra.corona import (
    CoronaGeometry, compare_constants, corona_constants_oracle, corona_constants_paper,
    edge_corona, vertex_corona,
)
from hyperspectra.cospectral import (
    SwitchingPartition, are_cospectral, certificate_mode, corona_cospectral_family, gm_switch,
)
from hyperspectra.generators import (
    complete_graph, complete_multipartite, complete_uniform, cycle_graph, empty_uniform,
    loose_cycle, loose_path, path_graph,
)
from hyperspectra.io import hypergraph_to_dict, read_json, resolve_hypergraph, resolve_hypergraphs, write_json
from hyperspectra.joins import BackbonePlan, JoinFamily, join_on_backbone, join_on_backbone_nonuniform, join_set, join_set_nonuniform
from hyperspectra.partitions import Partition, coarsest_equitable_partition, is_equitable, orbit_partition, quotient_matrix
from hyperspectra.registry import describe_theorems, run_suite, run_theorem
from hyperspectra.reports import join_checks, summary_rows
from hyperspectra.spectra.closed_forms import (
    edge_corona_polynomial_spectrum, edge_corona_spectrum, vertex_corona_spectrum,
)
from hyperspectra.spectra.eigen import SpectrumReport, hypergraph_spectrum, max_deviation
from hyperspectra.spectra.polynomials import charpoly_exact, exact_roots_report

logger = logging.getLogger("hyperspectra")

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_GUARD = 0, 1, 2, 3


class CliParser(argparse.ArgumentParser):
    """argparse с UsageError вместо sys.exit(2) и без сокращений опций."""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message)


# ==============================================================================
# Вывод
# ==============================================================================

def _emit(data: Any, fmt: str, rows: Optional[List[Dict[str, Any]]] = None):
    """json: документ целиком; table: строки rows через pandas (если их нет, то JSON)."""
    if fmt == "table" and rows is not None:
        frame = pd.DataFrame(rows)
        print(frame.to_string(index=False) if not frame.empty else "(empty)")
        return
    print(json.dumps(data, indent=2, ensure_ascii=False))


def _spectrum_rows(report: SpectrumReport) -> List[Dict[str, Any]]:
    return [{"eigenvalue": e.value, "multiplicity": e.multiplicity} for e in report.eigenvalues]


def _output_hypergraph(h, args):
    data = hypergraph_to_dict(h)
    if getattr(args, "out", None):
        write_json(args.out, data)
        logger.info(f"Гиперграф записан в {args.out}")
        return
    _emit(data, "json")


def _many(items: Sequence[str]):
    result = []
    for item in items:
        result.extend(resolve_hypergraphs(item))
    return result


def _read_cells(value: str) -> List[List[int]]:
    text = value.strip()
    data = json.loads(text) if text.startswith("[") else read_json(text)
    if isinstance(data, dict):
        data = data.get("cells", [])
    if not isinstance(data, list) or not all(isinstance(cell, list) for cell in data):
        raise FormatError("Cells must be a JSON list of vertex lists")
    return data


def _ints(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise FormatError(f"Expected comma separated integers, got {text!r}") from exc


# ==============================================================================
# Команды
# ==============================================================================

GENERATORS = {
    "complete-uniform": lambda a: complete_uniform(a.m, a.n, parse_rational(a.w)),
    "empty": lambda a: empty_uniform(a.m, a.n),
    "multipartite": lambda a: complete_multipartite(a.m, _ints(a.sizes or ""), a.mode),
    "loose-path": lambda a: loose_path(a.m, a.s, a.n),
    "loose-cycle": lambda a: loose_cycle(a.m, a.s, a.n),
    "path": lambda a: path_graph(a.n),
    "cycle": lambda a: cycle_graph(a.n),
    "complete-graph": lambda a: complete_graph(a.n, parse_rational(a.w)),
}


def cmd_gen(args) -> int:
    try:
        h = GENERATORS[args.kind](args)
    except TypeError as exc:
        raise UsageError(f"gen {args.kind}: missing parameter ({exc})") from exc
    _output_hypergraph(h, args)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    h = resolve_hypergraph(args.input)
    if args.exact:
        report = exact_roots_report(charpoly_exact(h.adjacency))
    else:
        report = SpectrumReport.from_values(hypergraph_spectrum(h), tolerance=args.tol)
    data = {"label": h.label, "n": h.n, **report.model_dump()}
    _emit(data, args.format, _spectrum_rows(report))
    return EXIT_OK


def cmd_charpoly(args) -> int:
    h = resolve_hypergraph(args.input)
    poly = charpoly_exact(h.adjacency)
    data = {"label": h.label, "n": h.n, "degree": poly.degree,
            "coefficients": poly.to_strings(), "polynomial": str(poly)}
    rows = [{"power": power, "coefficient": c} for power, c in enumerate(poly.to_strings())]
    _emit(data, args.format, rows)
    return EXIT_OK


def cmd_partition(args) -> int:
    h = resolve_hypergraph(args.input)
    if args.check:
        partition = Partition.of(_read_cells(args.check), h.n)
    elif args.orbits:
        partition = orbit_partition(h)
    else:
        seed = Partition.of(_read_cells(args.seed), h.n) if args.seed else None
        partition = coarsest_equitable_partition(h, seed)
    check = is_equitable(h, partition)
    data: Dict[str, Any] = {"cells": partition.as_lists(), "equitable": check.equitable}
    if check:
        data["B"] = quotient_matrix(h, partition).B.to_strings()
    else:
        data["witness"] = list(check.witness)
    rows = [{"cell": idx + 1, "size": len(cell), "vertices": ",".join(map(str, cell))}
            for idx, cell in enumerate(partition.cells)]
    _emit(data, args.format, rows)
    return EXIT_OK


def _join_weights(text: Optional[str]):
    if not text:
        return None
    data = json.loads(text) if text.strip().startswith("{") else read_json(text)
    return {int(size): parse_rational(weight) for size, weight in data.items()}


def cmd_join(args) -> int:
    if bool(args.members) == bool(args.backbone):
        raise UsageError("join needs either --members or --backbone with --participants")
    cardinalities = frozenset(_ints(args.cardinalities)) if args.cardinalities else None
    weights = _join_weights(args.weights)
    if args.members:
        family = JoinFamily(tuple(_many(args.members)), args.m, parse_rational(args.ws),
                            cardinalities, weights)
        h = join_set_nonuniform(family) if cardinalities else join_set(family)
        plan = family.as_plan()
    else:
        backbone = resolve_hypergraph(args.backbone)
        participants = tuple(_many(args.participants or []))
        if cardinalities:
            plan = BackbonePlan(backbone, participants, (cardinalities,) * backbone.edge_count, weights)
            h = join_on_backbone_nonuniform(plan)
        else:
            plan = BackbonePlan(backbone, participants)
            h = join_on_backbone(plan, args.m)
    if not args.check_formula:
        _output_hypergraph(h, args)
        return EXIT_OK
    checks = join_checks(plan, h, None if cardinalities else args.m, hypergraph_spectrum(h))
    verdict = "PASS" if all(checks.values()) else "FAIL"
    rows = [{"property": name, "result": "PASS" if ok else "FAIL"} for name, ok in checks.items()]
    _emit({"n": h.n, "edges": h.edge_count, "checks": checks, "verdict": verdict}, args.format, rows)
    return EXIT_OK if verdict == "PASS" else EXIT_FAIL


def _prediction(h, predicted: SpectrumReport, fmt: str) -> int:
    observed = hypergraph_spectrum(h)
    deviation = max_deviation(predicted.values(), observed)
    data = {"n": h.n, "predicted": predicted.values(), "observed": observed,
            "max_deviation": deviation if deviation != float("inf") else 1e300}
    rows = [{"predicted": p, "observed": o} for p, o in zip(sorted(predicted.values()), observed)]
    _emit(data, fmt, rows)
    return EXIT_OK if deviation <= 1e-8 else EXIT_FAIL


def cmd_corona(args) -> int:
    if args.kind == "constants":
        return _corona_constants(args)
    base = resolve_hypergraph(args.base)
    members = _many(args.members)
    if args.kind == "vertex":
        h = vertex_corona(base, len(members), args.p, members)
        if args.predict:
            return _prediction(h, vertex_corona_spectrum(base, members, args.p, method=args.method), args.format)
    else:
        h = edge_corona(base, members)
        if args.predict:
            closed_form = edge_corona_spectrum if is_regular(base) is not None else edge_corona_polynomial_spectrum
            return _prediction(h, closed_form(base, members), args.format)
    _output_hypergraph(h, args)
    return EXIT_OK


def _corona_constants(args) -> int:
    if args.kind_of == "edge":
        if not args.base:
            raise UsageError("corona constants --kind edge needs --base")
        base = resolve_hypergraph(args.base)
        geometry = CoronaGeometry.for_edge(args.m or is_uniform(base), base, args.n1)
    else:
        if args.base:
            base = resolve_hypergraph(args.base)
            k = args.k or max(base.n // args.p, 1)
        else:
            k = args.k or 1
        geometry = CoronaGeometry.for_vertex(args.m, k, args.p, args.n1)
    rows = [row.model_dump() for row in compare_constants(corona_constants_oracle(geometry),
                                                          corona_constants_paper(geometry))]
    _emit({"geometry": asdict(geometry), "constants": rows}, args.format, rows)
    return EXIT_OK


def cmd_switch(args) -> int:
    h = resolve_hypergraph(args.input)
    rho = SwitchingPartition.of(_read_cells(args.cells), _ints(args.d))
    _output_hypergraph(gm_switch(h, rho), args)
    return EXIT_OK


def cmd_cospectral(args) -> int:
    if args.action == "family":
        if not (args.h0 and args.g0 and args.attach):
            raise UsageError("cospectral family needs --h0, --g0 and --attach")
        pairs = corona_cospectral_family(resolve_hypergraph(args.h0), resolve_hypergraph(args.g0),
                                         resolve_hypergraph(args.attach), args.depth)
        rows = [{"level": level, "order": pair.order, "certificate": pair.certificate,
                 "isomorphism": pair.isomorphism} for level, pair in enumerate(pairs)]
        _emit({"pairs": rows}, args.format, rows)
        return EXIT_OK
    if not (args.a and args.b):
        raise UsageError("cospectral needs --a and --b")
    h1, h2 = resolve_hypergraph(args.a), resolve_hypergraph(args.b)
    if args.exact and args.numeric:
        raise UsageError("--exact and --numeric are mutually exclusive")
    mode = "exact" if args.exact else "numeric" if args.numeric else certificate_mode(h1.n)
    data = {"cospectral": are_cospectral(h1, h2, mode=mode, tol=args.tol), "mode": mode}
    if h1.n <= settings.ISO_MAX_N:
        data["isomorphic"] = is_isomorphic(h1, h2)
    _emit(data, args.format, [data])
    return EXIT_OK


def _parse_theorem_params(extra: Sequence[str], pairs: Sequence[str]) -> Dict[str, str]:
    """--key value, --key=value и --param key=value."""
    params: Dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {pair!r}")
        params[key.strip()] = value
    items = list(extra)
    while items:
        token = items.pop(0)
        if not token.startswith("--"):
            raise UsageError(f"Unexpected argument {token!r}")
        key, sep, value = token[2:].partition("=")
        if not sep:
            if not items:
                raise UsageError(f"Missing value for --{key}")
            value = items.pop(0)
        params[key.replace("-", "_")] = value
    return params


def cmd_verify(args, extra: Sequence[str]) -> int:
    params = _parse_theorem_params(extra, args.param or [])
    report = run_theorem(args.theorem_id, params, include_paper_constants=args.include_paper_constants)
    rows = [{"check": name, "ok": ok} for name, ok in report.checks.items()]
    rows.append({"check": "verdict", "ok": report.verdict})
    _emit(report.model_dump(), args.format, rows)
    return EXIT_FAIL if report.verdict == "FAIL" else EXIT_OK


def cmd_verify_all(args) -> int:
    reports = run_suite(args.only, args.include_paper_constants, args.suite, progress=True)
    path = settings.ensure_reports_dir() / "verify-all.json"
    write_json(path, [r.model_dump() for r in reports])
    failed = sum(r.verdict == "FAIL" for r in reports)
    summary = {"total": len(reports), "failed": failed, "report": str(path), "results": summary_rows(reports)}
    _emit(summary, args.format, summary["results"])
    return EXIT_FAIL if failed else EXIT_OK


def cmd_theorems(args) -> int:
    items = describe_theorems()
    rows = [{"id": t["id"], "name": t["name"], "tolerance": t["tolerance"]} for t in items]
    _emit(items, args.format, rows)
    return EXIT_OK


# ==============================================================================
# Парсер
# ==============================================================================

def build_parser() -> CliParser:
    parser = CliParser(prog="hyperspectra", description="Spectra of weighted hypergraph adjacency matrices")
    parser.add_argument("--format", choices=["json", "table"], default="json")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING (по умолчанию LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Построить стандартный гиперграф")
    gen.add_argument("kind", choices=sorted(GENERATORS))
    gen.add_argument("--m", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--s", type=int)
    gen.add_argument("--sizes")
    gen.add_argument("--mode", choices=["weak", "strong"], default="weak")
    gen.add_argument("--w", default="1")
    gen.add_argument("--out")

    spectrum = sub.add_parser("spectrum", help="Спектр A_H")
    spectrum.add_argument("--in", dest="input", required=True)
    spectrum.add_argument("--exact", action="store_true")
    spectrum.add_argument("--tol", type=float, default=settings.GROUP_TOL)

    charpoly = sub.add_parser("charpoly", help="Точный характеристический многочлен")
    charpoly.add_argument("--in", dest="input", required=True)

    partition = sub.add_parser("partition", help="Справедливые разбиения и фактор-матрица")
    partition.add_argument("--in", dest="input", required=True)
    partition.add_argument("--seed")
    partition.add_argument("--orbits", action="store_true")
    partition.add_argument("--check", help="Проверить заданное разбиение (JSON-файл или список)")

    join = sub.add_parser("join", help="Соединение семейства или по остову")
    join.add_argument("--members", nargs="+")
    join.add_argument("--backbone")
    join.add_argument("--participants", nargs="+")
    join.add_argument("--m", type=int)
    join.add_argument("--ws", default="1")
    join.add_argument("--cardinalities", help="T для неоднородного соединения, например 2,3")
    join.add_argument("--weights", help='Веса по мощностям: {"2": "1", "3": "1/2"}')
    join.add_argument("--check-formula", action="store_true")
    join.add_argument("--out")

    corona = sub.add_parser("corona", help="Вершинная и рёберная короны")
    corona.add_argument("kind", choices=["vertex", "edge", "constants"])
    corona.add_argument("--base")
    corona.add_argument("--members", nargs="+", default=[])
    corona.add_argument("--p", type=int, default=1)
    corona.add_argument("--k", type=int)
    corona.add_argument("--m", type=int)
    corona.add_argument("--n1", type=int, default=1)
    corona.add_argument("--kind", dest="kind_of", choices=["vertex", "edge"], default="vertex")
    corona.add_argument("--method", choices=["auto", "cor3", "cor4", "reduced"], default="auto")
    corona.add_argument("--predict", action="store_true", help="Сравнить замкнутую формулу со спектром")
    corona.add_argument("--out")

    switch = sub.add_parser("switch", help="Переключение по разбиению {V_1..V_k, D}")
    switch.add_argument("--in", dest="input", required=True)
    switch.add_argument("--cells", required=True)
    switch.add_argument("--d", required=True)
    switch.add_argument("--out")

    cospectral = sub.add_parser("cospectral", help="Проверка коспектральности и семейства пар")
    cospectral.add_argument("action", nargs="?", choices=["check", "family"], default="check")
    cospectral.add_argument("--a")
    cospectral.add_argument("--b")
    cospectral.add_argument("--exact", action="store_true", help="Только точный сертификат (ограничен порядком)")
    cospectral.add_argument("--numeric", action="store_true", help="Сравнить численные спектры")
    cospectral.add_argument("--tol", type=float, default=1e-8)
    cospectral.add_argument("--h0")
    cospectral.add_argument("--g0")
    cospectral.add_argument("--attach")
    cospectral.add_argument("--depth", type=int, default=2)

    verify = sub.add_parser("verify", help="Проверить одну теорему: verify <id> --key value ...")
    verify.add_argument("theorem_id")
    verify.add_argument("--param", action="append", help="key=value")
    verify.add_argument("--include-paper-constants", action="store_true")

    verify_all_parser = sub.add_parser("verify-all", help="Прогнать набор приёмочных проверок")
    verify_all_parser.add_argument("--only", nargs="+")
    verify_all_parser.add_argument("--include-paper-constants", action="store_true")
    verify_all_parser.add_argument("--suite", help="Путь к альтернативному набору")

    sub.add_parser("theorems", help="Список зарегистрированных проверок")
    return parser


COMMANDS = {
    "gen": cmd_gen,
    "spectrum": cmd_spectrum,
    "charpoly": cmd_charpoly,
    "partition": cmd_partition,
    "join": cmd_join,
    "corona": cmd_corona,
    "switch": cmd_switch,
    "cospectral": cmd_cospectral,
    "verify-all": cmd_verify_all,
    "theorems": cmd_theorems,
}


def _report_error(exc: HyperSpectraError) -> int:
    print(json.dumps({"error": exc.code, "message": str(exc)}, ensure_ascii=False), file=sys.stderr)
    return exc.exit_code


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        setup_logging(args.log_level)
        if args.command == "verify":
            return cmd_verify(args, extra)
        if extra:
            raise UsageError(f"Unrecognized arguments: {' '.join(extra)}")
        return COMMANDS[args.command](args)
    except HyperSpectraError as exc:
        return _report_error(exc)
    except json.JSONDecodeError as exc:
        return _report_error(FormatError(f"Malformed JSON argument: {exc}"))


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
