"""One test per acceptance criterion; the terminal summary lists a pass/fail line for each."""
import pytest

from cornerminors.acceptance import CRITERIA, run


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA],
                         ids=[f"{c[0]:02d}-{c[1].replace(' ', '-')}" for c in CRITERIA])
def test_criterion(number, acceptance_log):
    result = run(number, seed=0)
    acceptance_log.append(result.line())
    print(result.line())
    detail = {k: v for k, v in result.detail.items() if k not in ("rows", "cases", "suite")}
    assert result.passed, detail
