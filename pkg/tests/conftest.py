import sys

import numpy as np
import pytest

from cosgrass import reference_cases

MATRIX = reference_cases()


@pytest.fixture(params=MATRIX, ids=lambda c: c.label())
def case(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    report = getattr(mod, "REPORT", None)
    if not report:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(report):
        terminalreporter.write_line(report[num])
