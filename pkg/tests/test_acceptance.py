"""Acceptance criteria 1-9 at full size, exact (tolerance zero).

Each test prints one PASS/FAIL line, visible even when output is captured.
"""

import pytest

from gpfusion.verify import CHECKS, run_checks


@pytest.mark.slow
@pytest.mark.parametrize("key", [k for k, _, _ in CHECKS])
def test_criterion(key, capsys):
    (result,) = run_checks("full", only=[key])
    with capsys.disabled():
        print("\n" + result.line() + ("" if not result.passed else f" [{result.detail}]"))
    assert result.passed, result.detail


def test_negative_control_fails():
    (result,) = run_checks("quick", corrupt=True, only=["2-"])
    assert not result.passed
    assert "offending degree 2" in result.detail
