import pytest

from semigroup_census.tree_oracle import genus_counts

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def oracle_counts():
    """Tree-walk totals for every genus up to 32."""
    return genus_counts(32, threads=1)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        status = "PASS" if rep.passed else "SKIP" if rep.skipped else "FAIL"
        _acceptance_lines.append(f"[{status}] {marker.args[0]}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
