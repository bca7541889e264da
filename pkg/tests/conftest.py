import json
from pathlib import Path

import pytest

from mobilehook.mobile import HangingPoset, MobilePoset

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "mobilehook" / "fixtures"


def load_fixture(name):
    return json.loads((FIXTURES / name).read_text())


@pytest.fixture
def major_mobile():
    return MobilePoset.from_json(load_fixture("example_major.json"))


@pytest.fixture
def inversion_mobile():
    return MobilePoset.from_json(load_fixture("example_inversion.json"))


@pytest.fixture
def v_mobile():
    return MobilePoset.of([2, 2], [1])


def mobile(lam, mu=(), *hangings):
    return MobilePoset.of(lam, mu, tuple(hangings))


def chain(k):
    return HangingPoset.chain(k)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
