"""Bounded term generation and brute-force oracles."""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .terms import (
    Principal,
    Term,
    ZERO,
    _sort_key,
    compare,
    degree,
    is_limit,
    omega_n,
)

__all__ = ["GenConfig", "gen_terms", "sample_terms", "enumerate_quotient",
           "DensityReport", "oracle_density_check"]

MAX_EXAMPLES = 50


@dataclass(frozen=True)
class GenConfig:
    max_nodes: int = 5
    max_index: int = 2
    countable_only: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be at least 1")
        if self.max_index < 0:
            raise ValueError("max_index must be non-negative")


@lru_cache(maxsize=None)
def _principals_of_size(size: int, max_index: int) -> Tuple[Term, ...]:
    # theta_i(arg) with node_count(arg) == size - 1
    out = []
    for arg in _terms_of_size(size - 1, max_index):
        top = max((p.index for p in arg.parts), default=-1)
        for i in range(max(top - 1, 0), max_index + 1):
            out.append(Term((Principal(i, arg),)))
    return tuple(out)


@lru_cache(maxsize=None)
def _terms_of_size(size: int, max_index: int) -> Tuple[Term, ...]:
    if size == 0:
        return (ZERO,)
    out = []
    # first summand takes s nodes, the rest is a term whose head <= it
    for s in range(1, size + 1):
        for p in _principals_of_size(s, max_index):
            for rest in _terms_of_size(size - s, max_index):
                if rest.parts and compare(Term(rest.parts[:1]), p) > 0:
                    continue
                out.append(Term(p.parts + rest.parts))
    return tuple(out)


def gen_terms(cfg: GenConfig) -> List[Term]:
    """All canonical terms within the node and index bounds, sorted ascending."""
    seen = set()
    for size in range(cfg.max_nodes + 1):
        seen.update(_terms_of_size(size, cfg.max_index))
    terms = list(seen)
    if cfg.countable_only:
        w1 = omega_n(1)
        terms = [t for t in terms if compare(t, w1) < 0]
    terms.sort(key=_sort_key)
    return terms


def sample_terms(cfg: GenConfig, count: int) -> List[Term]:
    """Deterministic sample (by ``cfg.seed``) of ``gen_terms(cfg)``, kept sorted."""
    pool = gen_terms(cfg)
    if count >= len(pool):
        return pool
    rng = random.Random(cfg.seed)
    picked = rng.sample(range(len(pool)), count)
    return [pool[i] for i in sorted(picked)]


def enumerate_quotient(k: int, count: int) -> List[Term]:
    """The first ``count`` members of the quotient at base ``k``, in increasing order."""
    from .goodstein import succ_in_quotient
    out = []
    a = ZERO
    for _ in range(count):
        out.append(a)
        a = succ_in_quotient(a, k)
    return out


@dataclass
class DensityReport:
    k: int
    chain_length: int
    checked_terms: int = 0
    checked_limits: int = 0
    missing_from_chain: List[Term] = field(default_factory=list)
    interval_violations: List[Tuple[Term, Term]] = field(default_factory=list)
    interval_violation_count: int = 0

    @property
    def clean(self) -> bool:
        return not self.missing_from_chain and not self.interval_violation_count


def oracle_density_check(k: int, count: int, cfg: GenConfig,
                         terms: Optional[Sequence[Term]] = None) -> DensityReport:
    """Cross-check the successor chain and interval collapsing against generated terms.

    Every generated quotient member below the last chain element must be in
    the chain, and no generated ``b`` of countable cofinality with
    ``imc(b) < k`` may sit in ``[lam[k], lam)`` for a generated limit ``lam``.
    """
    from .fundseq import fund_seq
    from .inversion import imc, member_tk

    chain = enumerate_quotient(k, count) if count else []
    report = DensityReport(k, len(chain))
    if terms is None:
        terms = gen_terms(cfg)
    w1 = omega_n(1)
    countable = [t for t in terms if degree(t) == 0]
    report.checked_terms = len(countable)
    if chain:
        members = set(chain)
        top = chain[-1]
        for t in countable:
            if compare(t, top) < 0 and compare(t, w1) < 0 and member_tk(t, k) \
                    and t not in members:
                report.missing_from_chain.append(t)
    low = sorted((t for t in countable if imc(t) < k), key=_sort_key)
    low_keys = [_sort_key(t) for t in low]
    for lam in countable:
        if not is_limit(lam):
            continue
        report.checked_limits += 1
        start = bisect.bisect_left(low_keys, _sort_key(fund_seq(lam, k)))
        stop = bisect.bisect_left(low_keys, _sort_key(lam))
        if stop > start:
            report.interval_violation_count += stop - start
            room = MAX_EXAMPLES - len(report.interval_violations)
            report.interval_violations += [(lam, b) for b in low[start:min(stop, start + room)]]
    return report
