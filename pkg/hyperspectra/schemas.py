"""
Pydantic-модели: JSON-формат гиперграфа и отчёты проверки теорем.

Рациональные числа на проводе передаются строками "p/q" (или целые), десятичные дроби отклоняются.
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, model_validator

from hyperspectra.core.exceptions import FormatError
from hyperspectra.core.hypergraph import Hypergraph
from hyperspectra.core.rational import format_rational, parse_rational

Verdict = Literal["PASS", "FAIL", "DISCREPANCY-DOCUMENTED"]


class EdgeModel(BaseModel):
    v: List[int]
    w: Any = "1"

    @model_validator(mode="before")
    @classmethod
    def accept_bare_list(cls, values):
        # [1, 2, 3] как ребро веса 1
        if isinstance(values, (list, tuple)):
            return {"v": list(values)}
        return values


class HypergraphModel(BaseModel):
    n: int
    edges: List[EdgeModel] = []
    label: Optional[str] = None
    uniformity: Optional[int] = None

    def to_hypergraph(self) -> Hypergraph:
        edges = []
        for edge in self.edges:
            if isinstance(edge.w, float):
                raise FormatError(f"Weight {edge.w!r} is a float; write it as 'p/q'")
            edges.append((tuple(edge.v), parse_rational(edge.w)))
        return Hypergraph(self.n, tuple(edges), label=self.label, uniformity=self.uniformity)

    @classmethod
    def from_hypergraph(cls, h: Hypergraph) -> "HypergraphModel":
        return cls(
            n=h.n,
            edges=[EdgeModel(v=list(edge), w=format_rational(w)) for edge, w in h.edges],
            label=h.label,
            uniformity=h.uniformity,
        )


class ConstantComparison(BaseModel):
    """Константа короны: значение оракула против напечатанной формулы."""
    name: str
    oracle: str
    paper: str
    match: bool
    vacuous: bool = False


class VerifyReport(BaseModel):
    theorem_id: str
    parameters: Dict[str, Any] = {}
    predicted: List[float] = []
    observed: List[float] = []
    max_deviation: float = 0.0
    tolerance: float = 1e-8
    checks: Dict[str, bool] = {}
    constants: List[ConstantComparison] = []
    notes: List[str] = []
    verdict: Verdict = "PASS"


class VerifyRequest(BaseModel):
    params: Dict[str, Any] = {}
    include_paper_constants: bool = False


class VerifyAllRequest(BaseModel):
    only: Optional[List[str]] = None
    include_paper_constants: bool = False


# --- HTTP API ---

class SpectrumRequest(BaseModel):
    hypergraph: HypergraphModel
    exact: bool = False
    tol: Optional[float] = None


class HypergraphRequest(BaseModel):
    hypergraph: HypergraphModel


class PartitionRequest(BaseModel):
    hypergraph: HypergraphModel
    seed: Optional[List[List[int]]] = None
    orbits: bool = False


class CharpolyResponse(BaseModel):
    n: int
    degree: int
    coefficients: List[str]


class PartitionResponse(BaseModel):
    cells: List[List[int]]
    equitable: bool
    B: Optional[List[List[str]]] = None


class VerifyAllStatus(BaseModel):
    is_running: bool
    current_theorem: str = ""
    processed: int = 0
    total: int = 0
    percentage: float = 0.0
    failed: int = 0
    message: str = ""
    reports: List[VerifyReport] = []
