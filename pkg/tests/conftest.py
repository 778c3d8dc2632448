import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from nafaba.cli import golden_dir
from nafaba.formats import parse

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", max_examples=150, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


def load_golden(name):
    path = golden_dir() / name
    return parse(path.read_text(), path.suffix.lstrip("."))


@pytest.fixture
def golden():
    return load_golden


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        passed, detail = RESULTS[key]
        terminalreporter.write_line(f"ACCEPTANCE {key}: {'PASS' if passed else 'FAIL'} {detail}")
