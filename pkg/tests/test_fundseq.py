import pytest
from hypothesis import given, settings, strategies as st

from ordinal_goodstein.errors import IndexOutOfDomain
from ordinal_goodstein.fundseq import bachmann_check, eta_aux, expand, fund_seq, support
from ordinal_goodstein.terms import (
    EPSILON_0, OMEGA, ONE, ZERO, compare, degree, is_limit, numeral, omega_n, parse, theta,
)

P = parse


def test_support_examples():
    assert support(ONE) == ZERO
    assert support(P("t0(w+1)")) == P("t0(w)")
    assert support(theta(0, EPSILON_0)) == EPSILON_0


def test_eta_aux_examples():
    assert eta_aux(0, omega_n(1), ZERO) == ZERO
    assert eta_aux(0, ZERO, P("t0(w)")) == P("w+1")
    assert eta_aux(0, omega_n(1), omega_n(1)) is None


def test_fund_seq_examples():
    assert fund_seq(OMEGA, 3) == numeral(3)
    assert fund_seq(EPSILON_0, 1) == OMEGA
    assert fund_seq(EPSILON_0, 2) == P("t0(w)")
    assert fund_seq(omega_n(1), EPSILON_0) == EPSILON_0
    assert fund_seq(P("t0(w+1)"), 2) == P("t0(w)+t0(w)")


def test_modified_successor_clause():
    # (eta * omega)[k] = eta * k, including k = 0
    assert fund_seq(P("t0(w+1)"), 0) == ZERO
    assert fund_seq(theta(0, EPSILON_0), 3) == P("e0+e0+e0")


def test_index_domain():
    with pytest.raises(IndexOutOfDomain):
        fund_seq(OMEGA, OMEGA)
    with pytest.raises(IndexOutOfDomain):
        fund_seq(omega_n(1), omega_n(1))


def test_expand_examples():
    assert expand(EPSILON_0, 2, 3) == [EPSILON_0, P("t0(w)"), P("t0(2)"), P("w+w")]
    assert expand(ZERO, 5, 2) == [ZERO]
    assert expand(OMEGA, 2, 2) == [OMEGA, numeral(2), ONE]


def test_bachmann_examples():
    assert bachmann_check(EPSILON_0, P("t0(w)+t0(w)"), 2)
    assert bachmann_check(OMEGA, numeral(5), 1)
    # vacuous when b is not strictly between a[z] and a
    assert bachmann_check(EPSILON_0, OMEGA, 2)


def test_bachmann_fails_on_uncountable_cofinality():
    a = P("W1+W1")
    b = P("W1+w")
    assert fund_seq(a, 2) == P("W1+2")
    assert not bachmann_check(a, b, 2)


def test_bachmann_fails_at_index_zero_countable():
    # a[0] = w^w lands below e0 < a, while e0[1] = w
    a = P("t0(t0(t0(t0(e0))))")
    assert fund_seq(a, 0) == P("t0(w)")
    assert not bachmann_check(a, EPSILON_0, 0)


def _indices(a):
    return range(5) if degree(a) == 0 else [numeral(n) for n in range(5)]


def test_fund_seq_descends_on_small_terms(small_terms):
    for a in small_terms:
        if not is_limit(a):
            continue
        for z in _indices(a):
            assert compare(fund_seq(a, z), a) < 0


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_fund_seq_monotone_in_index(small_terms, data):
    a = data.draw(st.sampled_from(small_terms))
    if not is_limit(a) or degree(a):
        return
    n = data.draw(st.integers(1, 6))
    assert compare(fund_seq(a, n), fund_seq(a, n + 1)) < 0
