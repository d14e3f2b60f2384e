"""Run the library's docstring examples."""

import doctest

import pytest

from hurwitznum import branchdata, formulas, perm, witnesses


@pytest.mark.parametrize("module", [perm, branchdata, formulas, witnesses])
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.attempted > 0, module.__name__
    assert result.failed == 0
