"""
Реестр плагинов проверки теорем: каждый файл hyperspectra/theorems/*.py с verify и THEOREM_ID.
"""
import importlib.util
import json
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from tqdm import tqdm

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import FormatError, HyperSpectraError, UnknownTheoremError
from hyperspectra.core.rational import parse_rational
from hyperspectra.io import read_json, resolve_hypergraph, resolve_hypergraphs
from hyperspectra.schemas import VerifyReport

logger = logging.getLogger("hyperspectra")

THEOREM_REGISTRY: Dict[str, Dict[str, Any]] = {}


def load_theorems(force: bool = False) -> Dict[str, Dict[str, Any]]:
    if THEOREM_REGISTRY and not force:
        return THEOREM_REGISTRY
    THEOREM_REGISTRY.clear()
    if not settings.THEOREMS_DIR.exists():
        return THEOREM_REGISTRY
    for filename in sorted(os.listdir(settings.THEOREMS_DIR)):
        if not filename.endswith(".py") or filename == "__init__.py":
            continue
        try:
            spec = importlib.util.spec_from_file_location(f"hyperspectra.theorems.{filename[:-3]}",
                                                          settings.THEOREMS_DIR / filename)
            if spec and spec.loader:
                module = importlib.util.module_from_spec(spec)
                spec.loader.exec_module(module)
                if hasattr(module, "verify") and hasattr(module, "THEOREM_ID"):
                    THEOREM_REGISTRY[module.THEOREM_ID] = {
                        "id": module.THEOREM_ID,
                        "name": getattr(module, "THEOREM_NAME", module.THEOREM_ID),
                        "description": getattr(module, "THEOREM_DESC", ""),
                        "tolerance": getattr(module, "TOLERANCE", 1e-8),
                        "params_schema": getattr(module, "PARAMS_SCHEMA", []),
                        "verify": module.verify,
                        "module": module,
                    }
                else:
                    logger.error(f"Плагин {filename} не содержит verify/THEOREM_ID, пропущен")
        except Exception as e:
            logger.error(f"Error loading theorem plugin from {filename}: {e}", exc_info=True)
    return THEOREM_REGISTRY


def get_theorem(theorem_id: str) -> Dict[str, Any]:
    registry = load_theorems()
    if theorem_id not in registry:
        raise UnknownTheoremError(f"Unknown theorem id {theorem_id!r}; known: {', '.join(sorted(registry))}")
    return registry[theorem_id]


def _as_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off", ""):
        return False
    raise FormatError(f"Not a boolean: {value!r}")


def _as_ints(value: Any) -> List[int]:
    if isinstance(value, (list, tuple)):
        return [int(v) for v in value]
    return [int(v) for v in str(value).replace(" ", "").split(",") if v]


def _as_json(value: Any) -> Any:
    if isinstance(value, str):
        try:
            return json.loads(value)
        except json.JSONDecodeError as exc:
            raise FormatError(f"Malformed JSON parameter: {exc}") from exc
    return value


COERCERS: Dict[str, Callable[[Any], Any]] = {
    "int": int,
    "ints": _as_ints,
    "rational": parse_rational,
    "str": str,
    "bool": _as_bool,
    "hypergraph": resolve_hypergraph,
    "hypergraphs": resolve_hypergraphs,
    "json": _as_json,
}


def coerce_params(schema: List[Dict[str, Any]], params: Optional[Dict[str, Any]]) -> Dict[str, Any]:
    """Значения по умолчанию и разбор строк по типам схемы; неизвестные ключи отклоняются."""
    params = dict(params or {})
    known = {item["name"] for item in schema}
    unknown = sorted(set(params) - known)
    if unknown:
        raise FormatError(f"Unknown parameters: {', '.join(unknown)}")
    result = {}
    for item in schema:
        value = params.get(item["name"], item.get("default"))
        if value is None:
            result[item["name"]] = None
            continue
        try:
            result[item["name"]] = COERCERS[item["type"]](value)
        except (TypeError, ValueError) as exc:
            raise FormatError(f"Parameter {item['name']}: cannot read {value!r} as {item['type']}") from exc
    return result


def run_theorem(theorem_id: str, params: Optional[Dict[str, Any]] = None,
                include_paper_constants: bool = False) -> VerifyReport:
    theorem = get_theorem(theorem_id)
    coerced = coerce_params(theorem["params_schema"], params)
    return theorem["verify"](coerced, include_paper_constants=include_paper_constants)


def load_suite(path=None) -> List[Dict[str, Any]]:
    data = read_json(path or settings.SUITE_PATH)
    if not isinstance(data, list):
        raise FormatError("Acceptance suite must be a JSON list of {id, params}")
    return data


def describe_theorems() -> List[Dict[str, Any]]:
    return [
        {key: entry[key] for key in ("id", "name", "description", "tolerance", "params_schema")}
        for entry in sorted(load_theorems().values(), key=lambda e: e["id"])
    ]


def failed_report(entry: Dict[str, Any], exc: HyperSpectraError) -> VerifyReport:
    return VerifyReport(theorem_id=entry["id"], parameters=entry.get("params") or {}, verdict="FAIL",
                        notes=[f"{exc.code}: {exc}"], max_deviation=1e300)


def run_suite(only: Optional[Sequence[str]] = None, include_paper_constants: bool = False,
              suite_path=None, progress: bool = False, on_report: Optional[Callable] = None) -> List[VerifyReport]:
    """
    Прогон набора приёмочных проверок в порядке файла.
    Ошибка отдельной проверки становится FAIL-записью; on_report(index, total, report) нужен для статуса.
    """
    entries = [entry for entry in load_suite(suite_path) if not only or entry["id"] in only]
    reports: List[VerifyReport] = []
    for index, entry in enumerate(tqdm(entries, desc="verify-all", file=sys.stderr, disable=not progress), 1):
        try:
            report = run_theorem(entry["id"], entry.get("params"), include_paper_constants)
        except HyperSpectraError as exc:
            logger.error(f"{entry['id']}: {exc.code}: {exc}")
            report = failed_report(entry, exc)
        reports.append(report)
        if on_report is not None:
            on_report(index, len(entries), report)
    return reports
