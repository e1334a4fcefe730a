from fractions import Fraction

import pytest

from isotropy.oracle import (
    SearchBudget,
    brute_search,
    bqf_class_group_oracle,
    local_solubility_scan,
)
from isotropy.places import DiagonalForm


def form(*coeffs):
    return DiagonalForm(tuple(Fraction(c) for c in coeffs))


def test_brute_search_examples():
    assert brute_search(form(1, 1, -2), SearchBudget(2)) == (1, 1, 1)
    assert brute_search(form(1, 1), SearchBudget(100)) is None
    assert brute_search(form(1, 1, 1, -7), SearchBudget(50)) is None


def test_brute_search_zero_value():
    f = form(2, 3, -5)
    v = brute_search(f, SearchBudget(4))
    assert v is not None
    assert f.evaluate(v) == 0
    assert any(v)


def test_brute_search_primitive():
    f = form(1, -4)
    v = brute_search(f, SearchBudget(10))
    assert v == (2, 1)


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(0)


def test_scan_examples():
    assert local_solubility_scan(-1, -1, 2, 5) == -1
    assert local_solubility_scan(2, 7, 7, 3) == 1
    assert local_solubility_scan(1, 1, 3, 3) == 1


def test_scan_precision_guard():
    with pytest.raises(ValueError):
        local_solubility_scan(3, 3, 3, 2)
    with pytest.raises(ValueError):
        local_solubility_scan(1, 1, 2, 2)


def test_bqf_oracle_examples():
    assert bqf_class_group_oracle(-4) == 1
    assert bqf_class_group_oracle(-20) == 2
    assert bqf_class_group_oracle(-23) == 3
    # h(-47) = 5 and h(-163) = 1 are classical checks.
    assert bqf_class_group_oracle(-47) == 5
    assert bqf_class_group_oracle(-163) == 1


def test_bqf_oracle_range():
    with pytest.raises(ValueError):
        bqf_class_group_oracle(-10**5)
    with pytest.raises(ValueError):
        bqf_class_group_oracle(-5)
