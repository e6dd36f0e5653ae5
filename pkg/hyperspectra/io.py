"""Чтение и запись гиперграфов в JSON-формате проводного представления."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import ValidationError

from hyperspectra.core.exceptions import FormatError
from hyperspectra.core.guards import InputPaths
from hyperspectra.core.hypergraph import Hypergraph
from hyperspectra.generators import BUILDERS, from_spec
from hyperspectra.schemas import HypergraphModel

logger = logging.getLogger("hyperspectra")


def read_json(path: Union[str, Path]) -> Any:
    file_path = InputPaths.existing_file(str(path))
    try:
        return json.loads(file_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"Malformed JSON in {path}: {exc}") from exc


def write_json(path: Union[str, Path], data: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, ensure_ascii=False), encoding="utf-8")
    return path


def hypergraph_from_dict(data: Dict[str, Any]) -> Hypergraph:
    try:
        return HypergraphModel.model_validate(data).to_hypergraph()
    except ValidationError as exc:
        raise FormatError(f"Not a hypergraph document: {exc.errors()[0]['msg']}") from exc


def hypergraph_to_dict(h: Hypergraph) -> Dict[str, Any]:
    return HypergraphModel.from_hypergraph(h).model_dump(exclude_none=True)


def load_hypergraph(path: Union[str, Path]) -> Hypergraph:
    data = read_json(path)
    if not isinstance(data, dict):
        raise FormatError(f"{path}: expected a JSON object with 'n' and 'edges'")
    return hypergraph_from_dict(data)


def dump_hypergraph(h: Hypergraph, path: Union[str, Path]) -> Path:
    return write_json(path, hypergraph_to_dict(h))


def resolve_hypergraph(value: Union[str, Dict[str, Any], Hypergraph]) -> Hypergraph:
    """Гиперграф из строки-генератора, пути к .json, JSON-текста или словаря."""
    if isinstance(value, Hypergraph):
        return value
    if isinstance(value, dict):
        return hypergraph_from_dict(value)
    if not isinstance(value, str):
        raise FormatError(f"Cannot read a hypergraph from {type(value).__name__}")
    text = value.strip()
    if text.startswith("{"):
        try:
            return hypergraph_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"Malformed inline hypergraph JSON: {exc}") from exc
    if text.split(":", 1)[0] in BUILDERS:
        return from_spec(text)
    return load_hypergraph(text)


def resolve_hypergraphs(value: Union[str, List[Any]]) -> List[Hypergraph]:
    # ',' занята аргументами генераторов, поэтому разделитель ';'
    if isinstance(value, list):
        return [resolve_hypergraph(item) for item in value]
    return [resolve_hypergraph(item) for item in value.split(";") if item.strip()]
