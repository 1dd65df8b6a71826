import re
import zlib

import numpy as np
import pytest

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes = {}


@pytest.fixture
def rng(request):
    # stable per-test seed (str hash is salted per process, crc32 is not)
    return np.random.default_rng(zlib.crc32(request.node.name.encode()))


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        prev = _outcomes.get(key)
        if prev != "FAIL":
            _outcomes[key] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), status in sorted(_outcomes.items()):
        terminalreporter.write_line(f"criterion {num:2d} {name}: {status}")
