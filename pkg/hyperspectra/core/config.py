from pathlib import Path
from typing import Optional
import os


class Settings:
    """Конфигурация приложения"""

    # Базовая директория пакета
    BASE_DIR: Path = Path(__file__).resolve().parent.parent

    # Плагины теорем и набор приёмочных проверок
    THEOREMS_DIR: Path = BASE_DIR / "theorems"
    SUITE_PATH: Path = BASE_DIR / "acceptance_suite.json"

    # Отчёты verify-all
    REPORTS_DIR: Path = Path(os.getenv("HYPERSPECTRA_REPORTS_DIR", "reports"))

    # Ограничения перебора
    MAX_ENUM: int = int(os.getenv("HYPERSPECTRA_MAX_ENUM", "20"))
    ORACLE_MAX_N: int = 14
    ISO_MAX_N: int = 10
    ORBIT_MAX_N: int = 8
    CHARPOLY_MAX_ORDER: int = 40

    # Допуски
    GROUP_TOL: float = 1e-7
    PREDICTION_TOL: float = 1e-9
    JACOBI_TOL: float = 1e-13
    JACOBI_MAX_SWEEPS: int = 100

    # Логирование
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    LOG_DIR: Optional[Path] = Path(os.environ["HYPERSPECTRA_LOG_DIR"]) if os.getenv("HYPERSPECTRA_LOG_DIR") else None

    def ensure_reports_dir(self) -> Path:
        # Создаём каталог отчётов только при записи
        self.REPORTS_DIR.mkdir(parents=True, exist_ok=True)
        return self.REPORTS_DIR


# Глобальный экземпляр настроек
settings = Settings()
