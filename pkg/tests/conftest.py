import pytest

from termspace.corpus import enumerate_commutative_monoids, make_family
from termspace.monoid import FiniteMonoid


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance(request):
    """Call with (criterion, ok, detail) to log one pass/fail line in the summary."""
    def record(criterion, ok, detail=""):
        request.config._acceptance_lines.append(
            f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    return record


@pytest.fixture(scope="session")
def z4():
    return make_family("z_mult(4)")


@pytest.fixture(scope="session")
def z6():
    return make_family("z_mult(6)")


@pytest.fixture(scope="session")
def boolean():
    return make_family("boolean")


@pytest.fixture(scope="session")
def trivial():
    return FiniteMonoid.from_table([[0]])


@pytest.fixture(scope="session")
def corpus4():
    """Every commutative monoid of order <= 4 up to isomorphism."""
    return [m for n in range(1, 5) for m in enumerate_commutative_monoids(n)]
