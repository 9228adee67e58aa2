"""Property suites over generated terms, shared by the CLI ``check`` verb and the tests.

Each suite returns a :class:`SuiteReport` listing counterexamples rather
than stopping at the first one.
"""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

from .enumerate import GenConfig, enumerate_quotient, gen_terms, oracle_density_check
from .errors import BudgetExhausted
from .fundseq import bachmann_check, fund_seq
from .goodstein import run
from .hierarchy import StepBudget, pred, slow_growing
from .inversion import imc, invert_all, member_inductive, member_quotient
from .terms import (
    Term,
    _sort_key,
    compare,
    degree,
    format_term,
    is_limit,
    is_regular_cardinal,
    numeral,
    omega_n,
    parse,
)

__all__ = ["SuiteReport", "run_suite", "check_order", "check_bachmann",
           "check_imc_bound", "check_characterization", "check_inversion",
           "check_commuting", "check_density", "check_maximality", "check_goodstein"]

MAX_LISTED = 20


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    skipped: int = 0
    failures: List[str] = field(default_factory=list)
    failure_count: int = 0

    def fail(self, msg: str) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_LISTED:
            self.failures.append(msg)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def to_dict(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "skipped": self.skipped,
                "failures": self.failure_count, "examples": self.failures}

    def lines(self) -> List[str]:
        head = (f"{self.name}: {'ok' if self.ok else 'FAILED'} "
                f"({self.checked} checked, {self.skipped} skipped, {self.failure_count} failures)")
        return [head] + [f"  {m}" for m in self.failures]


def _f(t: Term) -> str:
    return format_term(t, sugar=True)


def check_order(terms: Sequence[Term], sample: int = 200_000, seed: int = 0) -> SuiteReport:
    """Sorted input must be strictly increasing, compare antisymmetric, text round-trips."""
    rep = SuiteReport("order")
    for a, b in zip(terms, terms[1:]):
        rep.checked += 1
        if compare(a, b) >= 0 or compare(b, a) <= 0:
            rep.fail(f"not increasing: {_f(a)} , {_f(b)}")
    for t in terms:
        rep.checked += 1
        if parse(format_term(t)) != t or parse(format_term(t, sugar=True)) != t:
            rep.fail(f"round trip: {_f(t)}")
    # transitivity on random triples of the sorted list
    rng = random.Random(seed)
    n = len(terms)
    for _ in range(min(sample, n * n) if n else 0):
        i, j, l = sorted(rng.randrange(n) for _ in range(3))
        rep.checked += 1
        if compare(terms[i], terms[l]) > 0:
            rep.fail(f"transitivity: {_f(terms[i])} {_f(terms[j])} {_f(terms[l])}")
    return rep


def _indices(a: Term, naturals: Iterable[int]) -> List:
    # numerals serve as indices for uncountable cofinality too
    return list(naturals) if degree(a) == 0 else [numeral(n) for n in naturals]


def check_bachmann(terms: Sequence[Term], zetas: Iterable[int] = range(5),
                   countable_only: bool = False) -> SuiteReport:
    """``a[z] < b < a`` implies ``a[z] <= b[1]`` for non-cardinal ``a, b``.

    ``terms`` must be sorted; the ``b`` in ``(a[z], a)`` are found by bisection.
    """
    rep = SuiteReport("bachmann")
    pool = [t for t in terms if not is_regular_cardinal(t)]
    keys = [_sort_key(t) for t in pool]
    zetas = list(zetas)
    for a in pool:
        if not is_limit(a) or (countable_only and degree(a)):
            continue
        for z in _indices(a, zetas):
            lo = fund_seq(a, z)
            start = bisect.bisect_right(keys, _sort_key(lo))
            stop = bisect.bisect_left(keys, _sort_key(a))
            for b in pool[start:stop]:
                rep.checked += 1
                if not bachmann_check(a, b, z):
                    rep.fail(f"a={_f(a)} z={z} b={_f(b)}: a[z]={_f(lo)} > b[1]={_f(fund_seq(b, 1))}")
    return rep


def check_imc_bound(terms: Sequence[Term], zetas: Iterable[int] = range(5)) -> SuiteReport:
    """``imc(a[z]) <= max(imc a, imc z)``."""
    rep = SuiteReport("imc-bound")
    zetas = list(zetas)
    for a in terms:
        if not is_limit(a):
            continue
        for z in _indices(a, zetas):
            rep.checked += 1
            zi = z if isinstance(z, int) else imc(z)
            v = imc(fund_seq(a, z))
            if v > max(imc(a), zi):
                rep.fail(f"imc({_f(a)}[{z}]) = {v} > max({imc(a)}, {zi})")
    return rep


def check_characterization(terms: Sequence[Term], ks: Iterable[int] = (2, 3, 4)) -> SuiteReport:
    """Inductive membership in T/k agrees with ``imc < k``."""
    rep = SuiteReport("characterization")
    for k in ks:
        for t in terms:
            rep.checked += 1
            if member_inductive(t, k) != member_quotient(t, k):
                rep.fail(f"k={k} {_f(t)}: inductive={member_inductive(t, k)}")
    return rep


def check_inversion(terms: Sequence[Term], ns: Iterable[int] = range(2, 6)) -> SuiteReport:
    """Every candidate is sound, and every ``b[n]`` of a countable limit is invertible."""
    rep = SuiteReport("inversion")
    ns = list(ns)
    for t in terms:
        for c in invert_all(t):
            rep.checked += 1
            if fund_seq(c.beta, c.zeta) != t:
                rep.fail(f"unsound: {_f(c.beta)}[{c.zeta}] != {_f(t)} ({c.case.value})")
    for b in terms:
        if not is_limit(b) or degree(b) or compare(b, omega_n(1)) >= 0:
            continue
        for n in ns:
            rep.checked += 1
            if not invert_all(fund_seq(b, n)):
                rep.fail(f"incomplete: no candidate for {_f(b)}[{n}]")
    return rep


def check_commuting(terms: Sequence[Term], ks: Iterable[int] = (2, 3),
                    max_bits: int = 4096, max_steps: int = 300) -> SuiteReport:
    """``G_k(P_k a) = G_k(a) - 1`` for nonzero ``a < Omega_1``; over-budget cases are skipped.

    Most generated terms have values far beyond any budget, so the per-term
    step cap is small and principals that exhausted it once are remembered.
    """
    rep = SuiteReport("commuting")
    w1 = omega_n(1)
    over: set = set()
    for k in ks:
        for a in terms:
            if not a.parts or compare(a, w1) >= 0:
                continue
            budget = StepBudget(max_steps=max_steps, max_bits=max_bits, over=over)
            try:
                g = slow_growing(k, a, budget)
                gp = slow_growing(k, pred(k, a, budget), budget)
            except BudgetExhausted:
                rep.skipped += 1
                continue
            rep.checked += 1
            if gp != g - 1:
                rep.fail(f"k={k} a={_f(a)}: G(P a)={gp}, G(a)-1={g - 1}")
    return rep


def check_density(k: int, count: int, terms: Sequence[Term]) -> SuiteReport:
    """No generated T°[k] member is missed by the chain or sits in ``[lam[k], lam)``."""
    rep = SuiteReport("density")
    r = oracle_density_check(k, count, GenConfig(), terms=terms)
    rep.checked = r.checked_terms + r.checked_limits
    for t in r.missing_from_chain:
        rep.fail(f"k={k} missing from chain: {_f(t)}")
    for lam, b in r.interval_violations:
        rep.fail(f"k={k} {_f(b)} in [{_f(lam)}[{k}], {_f(lam)})")
    # the report keeps only a few examples of each kind
    rep.failure_count = len(r.missing_from_chain) + r.interval_violation_count
    return rep


def check_maximality(terms: Sequence[Term], k: int = 2, count: int = 50,
                     max_steps: int = 500) -> SuiteReport:
    """A countable term with ``G_k`` value ``v < count`` lies at or below ``chain[v]``.

    Capped evaluation still has to unfold the term, and for some terms that
    takes longer than ``max_steps`` before the cap is reached; those are skipped.
    """
    rep = SuiteReport("maximality")
    chain = enumerate_quotient(k, count)
    w1 = omega_n(1)
    over: set = set()
    for b in terms:
        if compare(b, w1) >= 0:
            continue
        try:
            budget = StepBudget(max_steps=max_steps, max_bits=64, over=over)
            v = slow_growing(k, b, budget, cap=count)
        except BudgetExhausted:
            rep.skipped += 1
            continue
        if v >= count:
            continue
        rep.checked += 1
        if compare(b, chain[v]) > 0:
            rep.fail(f"{_f(b)} has G_{k}={v} but exceeds {_f(chain[v])}")
    return rep


def check_goodstein(seeds: Iterable[int], ks: Iterable[int] = (2, 3), steps: int = 50,
                    budget_steps: int = 10**6, max_bits: int = 10**6) -> SuiteReport:
    """Dual-path agreement; traces cut short by the budget count as failures."""
    from .errors import PathMismatch
    rep = SuiteReport("goodstein")
    for k in ks:
        for n in seeds:
            try:
                tr = run(n, k, steps, StepBudget(budget_steps, max_bits))
            except PathMismatch as e:
                rep.fail(f"seed {n} base {k}: {e}")
                continue
            rep.checked += len(tr.steps)
            if tr.note:
                rep.fail(f"seed {n} base {k}: stopped after {len(tr.steps)} steps ({tr.note})")
    return rep


def run_suite(name: str, cfg: GenConfig, k: int = 2) -> SuiteReport:
    terms = gen_terms(cfg)
    if name == "order":
        return check_order(terms)
    if name == "bachmann":
        return check_bachmann(terms)
    if name == "imc":
        rep = check_imc_bound(terms)
        char = check_characterization(terms)
        rep.name = "imc"
        rep.checked += char.checked
        rep.failure_count += char.failure_count
        rep.failures += char.failures[:MAX_LISTED - len(rep.failures)]
        return rep
    if name == "inversion":
        return check_inversion(terms)
    if name == "density":
        return check_density(k, 16, terms)
    if name == "goodstein":
        return check_goodstein(range(4), (k,), steps=20)
    raise ValueError(f"unknown suite {name}")
