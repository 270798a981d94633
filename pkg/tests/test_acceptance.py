"""The acceptance gate: one test per criterion, one printed line per run.

Criterion 3 is a known negative (the tableau image loses injectivity from
n = 4 on); its test fails by design and the analysis lives in
reports/gyt_injectivity.md.  Run with ``-v`` to see the per-criterion lines.
"""

import pytest

from coxlinks import acceptance

_IDS = [f"{number:02d}-{name}" for number, name, _, _ in acceptance.CRITERIA]


@pytest.mark.parametrize(
    "number", [number for number, _, _, _ in acceptance.CRITERIA], ids=_IDS
)
def test_criterion(number):
    result = acceptance.run_criterion(number, seed=0)
    print(result.line())
    assert result.passed, result.detail


def test_quick_level_is_the_all_green_subset():
    assert 3 not in acceptance.QUICK_NUMBERS
    results = acceptance.run("quick", seed=0)
    assert all(result.passed for result in results)


def test_result_lines_are_well_formed():
    result = acceptance.run_criterion(1, seed=0)
    line = result.line()
    assert line.startswith("PASS")
    assert " 1  chart-count" in line
    assert "[bound 10 s]" in line
