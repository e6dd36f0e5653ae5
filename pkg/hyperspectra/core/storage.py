import asyncio
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional


def _now() -> datetime:
    return datetime.now(timezone.utc)


@dataclass
class VerifyRunStatus:
    """Статус фонового прогона verify-all"""
    is_running: bool = False
    current_theorem: str = ""
    processed: int = 0
    total: int = 0
    percentage: float = 0.0
    failed: int = 0
    message: str = ""
    reports: List[Dict[str, Any]] = field(default_factory=list)
    started_at: Optional[datetime] = None
    updated_at: Optional[datetime] = None

    @property
    def never_started(self) -> bool:
        return self.started_at is None and not self.is_running


class StatusStorage:
    """
    Статусы прогонов под asyncio.Lock.

    Все изменения идут через методы хранилища; get_status отдаёт копию,
    которую можно сериализовать, пока прогон продолжается.
    """

    def __init__(self):
        self._storage: Dict[str, VerifyRunStatus] = {}
        self._lock = asyncio.Lock()

    async def get_status(self, run_id: str) -> VerifyRunStatus:
        async with self._lock:
            status = self._storage.get(run_id, VerifyRunStatus())
            return VerifyRunStatus(**{**status.__dict__, "reports": list(status.reports)})

    async def try_start(self, run_id: str, total: int, message: str = "Запуск проверки...") -> bool:
        """Атомарно занимает run_id; False, если прогон уже идёт."""
        async with self._lock:
            current = self._storage.get(run_id)
            if current is not None and current.is_running:
                return False
            self._storage[run_id] = VerifyRunStatus(is_running=True, total=total, message=message,
                                                    started_at=_now(), updated_at=_now())
            return True

    async def set_current(self, run_id: str, theorem_id: str):
        async with self._lock:
            status = self._storage[run_id]
            status.current_theorem = theorem_id
            status.updated_at = _now()

    async def record_report(self, run_id: str, index: int, report: Dict[str, Any]) -> VerifyRunStatus:
        async with self._lock:
            status = self._storage[run_id]
            status.reports.append(report)
            status.processed = index
            status.failed += report.get("verdict") == "FAIL"
            status.percentage = round(100.0 * index / status.total, 1) if status.total else 100.0
            status.updated_at = _now()
            return status

    async def finish(self, run_id: str, message: str) -> List[Dict[str, Any]]:
        async with self._lock:
            status = self._storage[run_id]
            status.is_running = False
            status.current_theorem = ""
            status.percentage = 100.0
            status.message = message
            status.updated_at = _now()
            return list(status.reports)


# Глобальный экземпляр хранилища
status_storage = StatusStorage()
