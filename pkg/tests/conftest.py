import mpmath
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "zetaforge", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("zetaforge")


@pytest.fixture(autouse=True)
def _mpmath_global_untouched():
    # the library works in a private context and must leave mpmath.mp alone
    before = mpmath.mp.prec
    yield
    assert mpmath.mp.prec == before


_DETAILS = {}


@pytest.fixture
def criterion(request):
    """Record a one-line detail for an acceptance criterion."""
    def record(detail):
        _DETAILS[request.node.nodeid] = detail
    return record


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            name = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in name or rep.when not in ("call", "setup"):
                continue
            if rep.when == "setup" and outcome == "passed":
                continue
            number = int(name.split("test_criterion_")[1].split("_")[0])
            verdict = "PASS" if outcome == "passed" else "FAIL"
            lines.append((number, f"criterion {number}: {verdict}  {_DETAILS.get(name, '')}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
