import pytest

from hyperspectra.core.config import settings
from hyperspectra.core.log import setup_logging
from hyperspectra.generators import example3_pair


@pytest.fixture(scope="session", autouse=True)
def configured_logging():
    # Обработчик создаётся до capsys, иначе он держит закрытый поток
    return setup_logging("WARNING")


@pytest.fixture
def reports_dir(tmp_path, monkeypatch):
    target = tmp_path / "reports"
    monkeypatch.setattr(settings, "REPORTS_DIR", target)
    return target


@pytest.fixture
def example3():
    """Коспектральная неизоморфная пара (H_0, G_0) на 8 вершинах."""
    return example3_pair()
