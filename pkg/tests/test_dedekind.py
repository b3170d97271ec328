import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbcalc.cyclotomic import CyclotomicElement, root_of_unity
from orbcalc.dedekind import (
    FLOAT_ORACLE_MAX_ORDER,
    DedekindInput,
    dedekind_sum,
    dedekind_sum_float_oracle,
    sigma,
)

REGRESSION_VALUES = [
    (4, (1, 1), 2, Fraction(1, 16)),
    (4, (1, 1), 0, Fraction(1, 16)),
    (8, (1, 3), 4, Fraction(5, 32)),
    (8, (1, 3), 0, Fraction(5, 32)),
    (9, (1, 2), 6, Fraction(2, 27)),
    (9, (1, 2), 0, Fraction(2, 27)),
]


@pytest.mark.parametrize("r, weights, index, expected", REGRESSION_VALUES)
def test_published_values(r, weights, index, expected):
    assert sigma(r, weights, index) == expected


def test_single_weight_closed_form():
    # sum over j of 1/(1 - zeta^j) = (r-1)/2, so sigma_0(1/r(1)) = (r-1)/(2r)
    for r in range(2, 25):
        assert sigma(r, (1,), 0) == Fraction(r - 1, 2 * r)


def test_a_series_through_the_sigma_rule():
    # A_k is the cyclic quotient 1/(k+1)(1, k); index -(b1+b2) = 0 mod r
    for k in range(1, 9):
        n = k + 1
        assert 12 * sigma(n, (1, k), 0) == Fraction(n) - Fraction(1, n)


def test_empty_sum_conventions():
    assert sigma(1, (0,), 0) == 0
    assert sigma(5, (0,), 3) == 0
    assert sigma(6, (2, 3), 1) == 0  # no j avoids both dead weights
    assert dedekind_sum(DedekindInput(4, (2, 1), 0)) == sigma(4, (2, 1), 0)


def test_input_normalization():
    inp = DedekindInput(9, (10, -7), 11)
    assert inp.weights == (1, 2)
    assert inp.index == 2
    with pytest.raises(ValueError):
        DedekindInput(0, (1,), 0)
    with pytest.raises(ValueError):
        DedekindInput(5, (), 0)


@given(
    st.integers(min_value=2, max_value=60),
    st.lists(st.integers(min_value=1, max_value=59), min_size=1, max_size=3),
    st.integers(min_value=0, max_value=200),
)
@settings(max_examples=80, deadline=None)
def test_periodicity_in_the_index(r, weights, index):
    assert sigma(r, weights, index) == sigma(r, weights, index + r)
    assert sigma(r, weights, index) == sigma(r, weights, index - r)


@given(
    st.integers(min_value=2, max_value=40),
    st.lists(st.integers(min_value=1, max_value=39), min_size=2, max_size=3),
    st.integers(min_value=0, max_value=40),
)
@settings(max_examples=60, deadline=None)
def test_weight_permutation_symmetry(r, weights, index):
    shuffled = list(weights)
    random.Random(0).shuffle(shuffled)
    assert sigma(r, weights, index) == sigma(r, shuffled, index)


@given(
    st.integers(min_value=2, max_value=40),
    st.lists(st.integers(min_value=-80, max_value=80), min_size=1, max_size=2),
    st.integers(min_value=0, max_value=40),
)
@settings(max_examples=60, deadline=None)
def test_weights_reduce_mod_r(r, weights, index):
    shifted = [b + r for b in weights]
    assert sigma(r, weights, index) == sigma(r, shifted, index)


def test_float_oracle_agrees_on_regression_values():
    for r, weights, index, expected in REGRESSION_VALUES:
        approx = dedekind_sum_float_oracle(DedekindInput(r, weights, index))
        assert abs(approx - float(expected)) < 1e-12


def test_float_oracle_random_agreement():
    rng = random.Random(20260815)
    for _ in range(60):
        r = rng.randrange(2, 80)
        weights = tuple(rng.randrange(1, r) for _ in range(rng.choice((1, 2, 3))))
        index = rng.randrange(0, 2 * r)
        inp = DedekindInput(r, weights, index)
        assert abs(dedekind_sum_float_oracle(inp) - float(dedekind_sum(inp))) < 1e-9


def test_float_oracle_order_guard():
    with pytest.raises(ValueError):
        dedekind_sum_float_oracle(DedekindInput(FLOAT_ORACLE_MAX_ORDER + 1, (1,), 0))


def test_terms_match_manual_cyclotomic_assembly():
    # assemble sigma_1(1/5(1,2)) by hand in Q(zeta_5) and compare
    r = 5
    total = CyclotomicElement.zero(r)
    for j in range(1, r):
        term = root_of_unity(r, j)
        for b in (1, 2):
            term = term * (CyclotomicElement.one(r) - root_of_unity(r, (j * b) % r)).inverse()
        total = total + term
    assert total.to_rational() / r == sigma(5, (1, 2), 1)


def test_values_live_in_expected_denominator_lattice():
    # r * sigma is an algebraic integer combination that lands in (1/r)Z here
    for r in (4, 8, 9, 12):
        for index in range(r):
            value = sigma(r, (1, r - 1), index)
            assert (value * r * r).denominator == 1
