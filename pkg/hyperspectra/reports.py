"""Сборка VerifyReport и вычисление вердикта."""
import logging
import math
from typing import Any, Dict, Iterable, List, Optional, Sequence

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import NotEquitableError
from hyperspectra.core.hypergraph import Hypergraph
from hyperspectra.io import hypergraph_to_dict
from hyperspectra.joins import (
    BackbonePlan, block_formula_adjacency, predicted_shifted_eigenvalues, quotient_from_regular_join,
)
from hyperspectra.partitions import quotient_matrix, quotient_spectrum
from hyperspectra.schemas import ConstantComparison, VerifyReport
from hyperspectra.spectra.eigen import SpectrumReport, max_deviation

logger = logging.getLogger("hyperspectra")


def verdict_for(deviation: float, tolerance: float, checks: Dict[str, bool],
                constants: Sequence[ConstantComparison], include_paper_constants: bool) -> str:
    if not all(checks.values()) or math.isnan(deviation) or deviation > tolerance:
        return "FAIL"
    if include_paper_constants and any(not row.match for row in constants):
        return "DISCREPANCY-DOCUMENTED"
    return "PASS"


def build_report(theorem_id: str, parameters: Dict[str, Any], predicted: Sequence[float] = (),
                 observed: Sequence[float] = (), tolerance: float = 1e-8,
                 checks: Optional[Dict[str, bool]] = None,
                 constants: Iterable[ConstantComparison] = (), notes: Iterable[str] = (),
                 include_paper_constants: bool = False, deviation: Optional[float] = None) -> VerifyReport:
    """
    Отчёт по одной проверке. Если deviation не задан, берётся максимальное отклонение
    отсортированных predicted/observed (inf при разной длине).
    """
    predicted, observed = sorted(float(v) for v in predicted), sorted(float(v) for v in observed)
    if deviation is None:
        deviation = max_deviation(predicted, observed)
    checks = {name: bool(value) for name, value in (checks or {}).items()}
    constants = list(constants) if include_paper_constants else []
    verdict = verdict_for(deviation, tolerance, checks, constants, include_paper_constants)
    report = VerifyReport(
        theorem_id=theorem_id,
        parameters=_jsonable(parameters),
        predicted=predicted,
        observed=observed,
        # JSON не переносит inf, поэтому отсутствие сопоставления кодируется большим числом
        max_deviation=deviation if math.isfinite(deviation) else 1e300,
        tolerance=tolerance,
        checks=checks,
        constants=constants,
        notes=list(notes),
        verdict=verdict,
    )
    logger.info(f"{theorem_id}: {verdict} (отклонение {deviation:.3e}, допуск {tolerance:.1e})")
    return report


def _jsonable(value: Any) -> Any:
    if isinstance(value, Hypergraph):
        return hypergraph_to_dict(value)
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return str(value)


def summary_rows(reports: List[VerifyReport]) -> List[Dict[str, Any]]:
    return [
        {"theorem": r.theorem_id, "verdict": r.verdict, "max_deviation": r.max_deviation,
         "tolerance": r.tolerance, "failed_checks": ",".join(k for k, v in r.checks.items() if not v)}
        for r in reports
    ]


def join_checks(plan: BackbonePlan, h: Hypergraph, m: Optional[int], observed: Sequence[float],
                require_connected: bool = False) -> Dict[str, bool]:
    """Блочная формула, A P = P B, кратности сдвинутых значений и вложение spec(B) в spec(A)."""
    observed_report = SpectrumReport.from_values(observed)
    checks = {"block_formula_equals_adjacency": block_formula_adjacency(plan, m) == h.adjacency}
    expected_b = quotient_from_regular_join(plan, m)
    try:
        checks["quotient_AP_equals_PB"] = quotient_matrix(h, plan.partition()).B == expected_b
    except NotEquitableError:
        checks["quotient_AP_equals_PB"] = False
    shifted = predicted_shifted_eigenvalues(plan, m, require_connected=require_connected)
    checks["shifted_multiplicities"] = all(
        observed_report.multiplicity_of(value, settings.GROUP_TOL) >= mult for value, mult in shifted
    )
    checks["quotient_spectrum_contained"] = all(
        any(abs(value - seen) <= 1e-8 for seen in observed)
        for value in quotient_spectrum(expected_b, plan.sizes)
    )
    return checks
