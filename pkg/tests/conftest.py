import pytest
from hypothesis import settings, strategies as st

from spechtblock.partition import Partition, partitions_of

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def partitions_up_to(n):
    for s in range(n + 1):
        yield from partitions_of(s)


small_partitions = st.lists(st.integers(1, 9), max_size=9).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)
primes = st.sampled_from([2, 3, 5, 7])


# -- one PASS/FAIL line per acceptance criterion -------------------------------

_criteria = {}
_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criteria[item.nodeid] = mark.args


def pytest_runtest_logreport(report):
    if report.nodeid in _criteria and (report.when == "call" or report.failed):
        if report.failed or report.nodeid not in _outcomes:
            _outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (number, title) in sorted(_criteria.items(), key=lambda kv: (int(str(kv[1][0]).rstrip('ab')), str(kv[1][0]))):
        outcome = _outcomes.get(nodeid)
        if outcome is None:
            continue
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {str(number):>3} {status}: {title}")
