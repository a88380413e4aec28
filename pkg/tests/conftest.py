import sys

import pytest

from revcond.structures import get_structure


@pytest.fixture
def div():
    return get_structure("divisibility")


@pytest.fixture
def fs():
    return get_structure("finite-sets")


@pytest.fixture
def zz():
    return get_structure("zxz")


@pytest.fixture
def qq():
    return get_structure("qxq")


@pytest.fixture
def fn():
    return get_structure("fn-omega")


def enc_set(s, xs):
    return {s.encode(x) for x in xs}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
