import sys

import pytest

from iboxchain.cartan import finite_type_cartan, standard_involution
from iboxchain.ibox import chain_from_pair
from iboxchain.iword import hat_w0_window

A3_W0 = [1, 2, 3, 1, 2, 1]


@pytest.fixture(scope="session")
def a3():
    return finite_type_cartan("A", 3)


@pytest.fixture(scope="session")
def a3_word(a3):
    """The window [-3,4] of the extended longest-element word in type A3."""
    return hat_w0_window(A3_W0, standard_involution("A", 3), (-3, 4), a3)


@pytest.fixture(scope="session")
def chain_c(a3_word):
    return chain_from_pair(a3_word, 4, "LLLLLLL")


@pytest.fixture(scope="session")
def chain_c1(a3_word):
    return chain_from_pair(a3_word, 3, "RLLLLLL")


@pytest.fixture(scope="session")
def chain_ct(a3_word):
    return chain_from_pair(a3_word, 3, "LLLLLLR")


def spans(chain):
    return [(bx.a, bx.b, bx.color) for bx in chain.boxes]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines.items()):
            terminalreporter.write_line(line)
