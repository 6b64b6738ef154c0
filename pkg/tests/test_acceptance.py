"""The ten acceptance criteria at their stated tolerances and runtime limits.

Each test records one PASS/FAIL line, printed together in an "acceptance
criteria" section at the end of the pytest run, and asserts the criterion. Criteria 4 and 6 fail as stated;
see the README for the analysis.
"""

import pytest

from conftest import ACCEPTANCE_LINES
from mirrorbounce.verify import CHECKS


@pytest.mark.parametrize("check", CHECKS, ids=[c.__name__.removeprefix("check_") for c in CHECKS])
def test_criterion(check):
    result = check(quick=False)
    ACCEPTANCE_LINES.append(result.line())
    assert result.passed, result.line()
