import asyncio
import logging
import os
from dataclasses import asdict
from functools import partial
from typing import Any, Dict, List

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import GuardError, HyperSpectraError
from hyperspectra.core.log import setup_logging
from hyperspectra.core.storage import status_storage
from hyperspectra.io import write_json
from hyperspectra.partitions import Partition, coarsest_equitable_partition, is_equitable, orbit_partition, quotient_matrix
from hyperspectra.registry import describe_theorems, failed_report, load_suite, load_theorems, run_theorem
from hyperspectra.schemas import (
    CharpolyResponse, HypergraphRequest, PartitionRequest, PartitionResponse, SpectrumRequest,
    VerifyAllRequest, VerifyAllStatus, VerifyReport, VerifyRequest,
)
from hyperspectra.spectra.eigen import SpectrumReport, hypergraph_spectrum
from hyperspectra.spectra.polynomials import charpoly_exact, exact_roots_report

logger = logging.getLogger("hyperspectra")

app = FastAPI(title="hyperspectra")

VERIFY_ALL_RUN = "verify-all"
# Ссылки на фоновые задачи, чтобы их не собрал сборщик мусора
_BACKGROUND_TASKS = set()


# Обработчик ошибок
@app.exception_handler(HyperSpectraError)
async def hyperspectra_exception_handler(request, exc: HyperSpectraError):
    status_code = 413 if isinstance(exc, GuardError) else 400
    logger.error(f"Ошибка приложения: {exc.code}: {exc}", exc_info=status_code == 400)
    return JSONResponse(status_code=status_code, content={"detail": str(exc), "error": exc.code})


@app.on_event("startup")
async def startup_event():
    # Сервис по умолчанию пишет INFO, CLI только WARNING
    setup_logging(os.getenv("LOG_LEVEL", "INFO"))
    logger.info("=== Запуск hyperspectra ===")
    registry = load_theorems()
    logger.info(f"Загружено проверок теорем: {len(registry)}")


@app.get("/")
async def read_root():
    return {"message": "hyperspectra API is running"}


@app.get("/api/theorems")
async def get_theorems():
    return describe_theorems()


# --- Спектры и разбиения ---

@app.post("/api/spectrum", response_model=SpectrumReport)
async def compute_spectrum(request: SpectrumRequest):
    h = request.hypergraph.to_hypergraph()
    if request.exact:
        return exact_roots_report(charpoly_exact(h.adjacency))
    return SpectrumReport.from_values(hypergraph_spectrum(h), tolerance=request.tol)


@app.post("/api/charpoly", response_model=CharpolyResponse)
async def compute_charpoly(request: HypergraphRequest):
    h = request.hypergraph.to_hypergraph()
    poly = charpoly_exact(h.adjacency)
    return CharpolyResponse(n=h.n, degree=poly.degree, coefficients=poly.to_strings())


@app.post("/api/partition", response_model=PartitionResponse)
async def compute_partition(request: PartitionRequest):
    h = request.hypergraph.to_hypergraph()
    if request.orbits:
        partition = orbit_partition(h)
    else:
        seed = Partition.of(request.seed, h.n) if request.seed else None
        partition = coarsest_equitable_partition(h, seed)
    equitable = is_equitable(h, partition).equitable
    b = quotient_matrix(h, partition).B.to_strings() if equitable else None
    return PartitionResponse(cells=partition.as_lists(), equitable=equitable, B=b)


# --- Проверка теорем ---

@app.post("/api/verify/{theorem_id}", response_model=VerifyReport)
async def verify_theorem(theorem_id: str, request: VerifyRequest):
    return run_theorem(theorem_id, request.params, include_paper_constants=request.include_paper_constants)


async def _run_verify_all_async(entries: List[Dict[str, Any]], include_paper_constants: bool):
    """Фоновый прогон: каждая проверка в пуле потоков, статус обновляется после каждой."""
    loop = asyncio.get_running_loop()
    reports: List[Dict[str, Any]] = []
    failed = 0
    for index, entry in enumerate(entries, start=1):
        await status_storage.set_current(VERIFY_ALL_RUN, entry["id"])
        try:
            report = await loop.run_in_executor(
                None, partial(run_theorem, entry["id"], entry.get("params"), include_paper_constants))
        except HyperSpectraError as exc:
            logger.error(f"[{VERIFY_ALL_RUN}] {entry['id']}: {exc.code}: {exc}")
            report = failed_report(entry, exc)
        except Exception as exc:
            logger.error(f"[{VERIFY_ALL_RUN}] {entry['id']}: непредвиденная ошибка: {exc}", exc_info=True)
            report = VerifyReport(theorem_id=entry["id"], verdict="FAIL", notes=[str(exc)], max_deviation=1e300)
        reports.append(report.model_dump())
        failed += report.verdict == "FAIL"
        await status_storage.record_report(VERIFY_ALL_RUN, index, reports[-1])

    try:
        write_json(settings.ensure_reports_dir() / "verify-all.json", reports)
    except OSError as e:
        logger.error(f"[{VERIFY_ALL_RUN}] Не удалось сохранить файл отчёта: {e}", exc_info=True)

    await status_storage.finish(VERIFY_ALL_RUN, f"Проверка завершена, FAIL: {failed}.")


@app.post("/api/verify-all")
async def start_verify_all(request: VerifyAllRequest):
    """Запускает прогон набора в фоне и сразу возвращает начальное состояние."""
    entries = [e for e in load_suite() if not request.only or e["id"] in request.only]
    if not await status_storage.try_start(VERIFY_ALL_RUN, total=len(entries)):
        raise HTTPException(status_code=409, detail="verify-all is already running")

    task = asyncio.create_task(_run_verify_all_async(entries, request.include_paper_constants))
    _BACKGROUND_TASKS.add(task)
    task.add_done_callback(_BACKGROUND_TASKS.discard)
    return {"status": "started", "total": len(entries)}


@app.get("/api/verify-all/status", response_model=VerifyAllStatus)
async def get_verify_all_status():
    status = await status_storage.get_status(VERIFY_ALL_RUN)
    if status.never_started:
        return VerifyAllStatus(is_running=False, message="Проверка не запущена.")
    data = asdict(status)
    data.pop("started_at", None)
    data.pop("updated_at", None)
    return VerifyAllStatus(**data)
