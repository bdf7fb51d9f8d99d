import os

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_criteria = {}


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run long exhaustive sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow") or os.environ.get("PERMEXT_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow sweep; pass --runslow or set PERMEXT_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call" and not (call.when == "setup" and call.excinfo):
        return
    number, text = marker.args
    ok = call.excinfo is None
    prev = _criteria.get(number, (True, text))
    _criteria[number] = (prev[0] and ok, text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        ok, text = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}")
