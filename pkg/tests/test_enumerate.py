from ordinal_goodstein.enumerate import (
    GenConfig, enumerate_quotient, gen_terms, oracle_density_check, sample_terms,
)
from ordinal_goodstein.fundseq import fund_seq
from ordinal_goodstein.hierarchy import slow_growing
from ordinal_goodstein.inversion import member_tk
from ordinal_goodstein.terms import EPSILON_0, OMEGA, ONE, ZERO, compare, numeral, parse


def test_enumerate_examples():
    assert enumerate_quotient(2, 5) == [ZERO, ONE, OMEGA, parse("w+1"), EPSILON_0]
    assert enumerate_quotient(2, 9)[8] == parse("t0(e0)")
    assert enumerate_quotient(3, 3) == [ZERO, ONE, numeral(2)]


def test_gen_terms_counts_and_order():
    # one node: theta_i(0) for i <= 2
    assert gen_terms(GenConfig(1, 2)) == [ZERO, ONE, parse("W1"), parse("W2")]
    terms = gen_terms(GenConfig(4, 1))
    assert all(compare(a, b) < 0 for a, b in zip(terms, terms[1:]))
    assert len(set(terms)) == len(terms)


def test_countable_only():
    terms = gen_terms(GenConfig(4, 2, countable_only=True))
    assert all(compare(t, parse("W1")) < 0 for t in terms)


def test_sample_is_deterministic():
    cfg = GenConfig(4, 2, seed=7)
    assert sample_terms(cfg, 20) == sample_terms(cfg, 20)
    assert len(sample_terms(cfg, 20)) == 20


def test_density_small_population_is_clean():
    r = oracle_density_check(2, 16, GenConfig(5, 1))
    assert r.clean, (r.missing_from_chain[:3], r.interval_violations[:3])


def test_interval_collapsing_counterexample():
    # w^(w^(w+1)) lies in [e0[3], e0) but has imc 2, and its G_3 value exceeds G_3(e0)
    b = parse("t0(t0(w+1))")
    assert member_tk(b, 3) and member_tk(EPSILON_0, 3)
    assert compare(fund_seq(EPSILON_0, 3), b) < 0 < compare(EPSILON_0, b)
    assert slow_growing(3, b) == 3 ** 81 > slow_growing(3, EPSILON_0)
    r = oracle_density_check(3, 16, GenConfig(5, 1))
    assert (EPSILON_0, b) in r.interval_violations


def test_density_empty_population():
    r = oracle_density_check(2, 0, GenConfig(1, 0), terms=[])
    assert r.clean and r.checked_terms == 0


def test_chain_members():
    for k in (2, 3):
        chain = enumerate_quotient(k, 60)
        assert all(member_tk(t, k) for t in chain)
