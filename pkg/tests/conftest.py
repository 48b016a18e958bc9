from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from app.derive import clear_cache
from app.pydanticConfig.settings import settings

FIXTURES = Path(__file__).parent / "fixtures"

# exact arithmetic on object arrays is slow enough to trip the default deadline
hypothesis_settings.register_profile("default", max_examples=60, deadline=None,
                                     suppress_health_check=[HealthCheck.too_slow])
hypothesis_settings.register_profile("ci", max_examples=200, deadline=None,
                                     suppress_health_check=[HealthCheck.too_slow])
hypothesis_settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def _log_to_tmp(tmp_path_factory):
    settings.LOG_DIR = str(tmp_path_factory.mktemp("logs"))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def fresh_resolutions():
    clear_cache()
    yield
    clear_cache()


@pytest.fixture
def acceptance_path() -> Path:
    return Path(__file__).parent.parent / "app" / "inputconfig" / "config.yml"
