"""One test per acceptance criterion; each prints its PASS/FAIL line."""

import pytest

from arrgr import acceptance


@pytest.mark.parametrize("criterion", acceptance.ALL_CRITERIA,
                         ids=[f"criterion_{i}" for i in
                              range(1, len(acceptance.ALL_CRITERIA) + 1)])
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.ok, result.detail


def test_paper_suite_deterministic(capsys):
    from arrgr.cli import main

    assert main(["paper-suite"]) == 0
    first = capsys.readouterr().out
    assert main(["paper-suite"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.count("PASS") == len(acceptance.ALL_CRITERIA)
