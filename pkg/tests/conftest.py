import pytest


@pytest.fixture
def criterion(request):
    """Label the running test as an acceptance criterion."""

    def start(label):
        request.node.criterion_label = label

    return start


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = getattr(item, "criterion_label", None)
    if label is not None and (rep.when == "call" or rep.failed):
        item.config.stash.setdefault(_RESULTS, {})[label] = rep.passed


_RESULTS = pytest.StashKey[dict]()


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in results.items():
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")
