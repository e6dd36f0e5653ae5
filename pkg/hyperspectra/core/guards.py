import logging
from pathlib import Path

from .config import settings
from .exceptions import TooLargeError, FileNotFoundProcessingError

logger = logging.getLogger("hyperspectra")


class SizeGuard:
    """Проверка размеров перед экспоненциальным перебором"""

    @classmethod
    def check_enumeration(cls, n: int, what: str = "enumeration", limit: int = None) -> int:
        """Перебор подмножеств n-элементного множества; лимит по умолчанию HYPERSPECTRA_MAX_ENUM."""
        limit = settings.MAX_ENUM if limit is None else limit
        if n > limit:
            logger.warning(f"{what}: отказ, {n} вершин > лимита {limit}")
            raise TooLargeError(
                f"{what} over {n} vertices exceeds the limit {limit} "
                f"(raise HYPERSPECTRA_MAX_ENUM to override)"
            )
        return n

    @classmethod
    def check_order(cls, n: int, limit: int, what: str) -> int:
        """Жёсткий лимит порядка (факториальный поиск, Фаддеев–Леверье)."""
        if n > limit:
            logger.warning(f"{what}: отказ, порядок {n} > {limit}")
            raise TooLargeError(f"{what} is limited to order {limit}, got {n}")
        return n


class InputPaths:
    """Проверка входных путей CLI"""

    @classmethod
    def existing_file(cls, path: str) -> Path:
        result = Path(path)
        if not result.is_file():
            raise FileNotFoundProcessingError(f"File not found: {path}")
        return result
