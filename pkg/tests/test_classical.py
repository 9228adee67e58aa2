import pytest
from hypothesis import given, settings, strategies as st

from ordinal_goodstein.classical import (
    CNFNat, ZERO_CNF, classical_base_change, classical_eval, classical_goodstein, format_cnf,
    hereditary, mc,
)
from ordinal_goodstein.errors import BadBase


def test_hereditary_examples():
    assert format_cnf(hereditary(4, 2)) == "w^(w)"
    assert hereditary(0, 7) == ZERO_CNF
    # 100 = 3^4 + 2*3^2 + 1
    assert format_cnf(hereditary(100, 3)) == "w^(w+1)+w^(2)*2+1"


def test_mc_examples():
    assert mc(hereditary(99, 3)) == 2
    assert mc(ZERO_CNF) == 0
    assert mc(hereditary(4, 2)) == 1


def test_base_change_examples():
    assert classical_base_change(4, 2, 3) == 27
    assert classical_base_change(3, 2, 3) == 4
    assert classical_base_change(0, 2, 5) == 0
    with pytest.raises(BadBase):
        classical_base_change(5, 3, 2)


def test_goodstein_examples():
    tr = classical_goodstein(3, 2, 10)
    assert tr.terminated and tr.values == [3, 3, 3, 2, 1, 0]
    assert classical_goodstein(1, 2, 10).values == [1, 0]
    tr = classical_goodstein(4, 2, 100)
    assert not tr.terminated and len(tr.steps) == 100


def test_cnf_rejects_bad_shapes():
    one = hereditary(1, 2)
    with pytest.raises(ValueError):
        CNFNat(((ZERO_CNF, 1), (one, 1)))
    with pytest.raises(ValueError):
        CNFNat(((ZERO_CNF, 0),))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**30), st.integers(2, 12))
def test_eval_inverts_hereditary(n, k):
    assert classical_eval(hereditary(n, k), k) == n


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 5000), st.integers(0, 5000), st.integers(2, 5))
def test_order_matches_numbers(a, b, k):
    assert (hereditary(a, k) < hereditary(b, k)) == (a < b)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 6))
def test_coefficients_stay_below_base(n, k):
    assert mc(hereditary(n, k)) < k
