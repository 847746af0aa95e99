import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toricasci.family import FamilyParameters, build_family  # noqa: E402

EXAMPLE = FamilyParameters(3, 3, 2)
FAMILY_INSTANCES = [(3, 3, 2), (3, 4, 3), (4, 4, 3), (4, 5, 4)]


@pytest.fixture
def example_config():
    return build_family(EXAMPLE)


@pytest.fixture
def configs_dir():
    return Path(__file__).parent.parent / "configs"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
