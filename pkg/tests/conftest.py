import pytest

from semiring_ideals.core import gallery, gallery_by_name, mask_of
from semiring_ideals.ideals import Ideal


GALLERY = gallery()
NAMES = [S.name for S in GALLERY]


def G(name):
    return gallery_by_name()[name]


def ideal(S, *names):
    """Ideal with exactly the named members (caller guarantees closure)."""
    return Ideal(S, mask_of(S.index_of(x) for x in names))


def el(S, name):
    return S.index_of(name)


@pytest.fixture(params=GALLERY, ids=NAMES)
def semiring(request):
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
