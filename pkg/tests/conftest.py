import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    state = {}

    def report(label, passed, detail=""):
        state["line"] = f"{'PASS' if passed else 'FAIL'} {label}" + (f" ({detail})" if detail else "")
        assert passed, state["line"]

    yield report
    if "line" not in state:
        rep = getattr(request.node, "rep_call", None)
        state["line"] = f"FAIL {request.node.name} (raised before reporting)" if rep and rep.failed else None
    if state["line"]:
        _ACCEPTANCE_LINES.append(state["line"])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def partitions_of(n, largest=None):
    """All weakly decreasing partitions of n (test oracle)."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest
