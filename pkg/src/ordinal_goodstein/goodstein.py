"""Inverse of the slow-growing hierarchy on T°[k], base change, and the Goodstein process."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import BadBase, BudgetExhausted, PathMismatch, PromotionFailure
from .hierarchy import StepBudget, pred, slow_growing
from .inversion import imc, invert_all, member_tk
from .terms import ONE, Term, ZERO, compare, theta, degree, format_term, is_limit

__all__ = ["succ_in_quotient", "g_inverse", "g_inverse_iterative", "base_change",
           "base_change_to_omega", "GoodsteinStep", "GoodsteinTrace", "run",
           "PROMOTE_CAP"]

PROMOTE_CAP = 10_000


def _check_base(k: int) -> None:
    if k < 2:
        raise BadBase(f"base must be at least 2, got {k}")


def succ_in_quotient(a: Term, k: int, cap: int = PROMOTE_CAP) -> Term:
    """The least member of T°[k] above ``a``.

    Starts from ``a + 1`` and, while the candidate still has ``imc >= k``,
    replaces it by the largest ``beta`` with ``beta[k]`` equal to it.
    """
    _check_base(k)
    if not member_tk(a, k):
        raise PromotionFailure(f"{format_term(a)} is not in T°[{k}]")
    # b = prefix[:m] + x throughout: every promotion replaces a suffix of the
    # trailing block by one principal, so prefix[:m] stays a prefix of a and
    # keeps imc < k; only the trailing block can offend
    prefix = a.parts
    m, x = len(prefix), ONE.parts[0]
    for _ in range(cap + 1):
        run = 1
        while run <= m and prefix[m - run] == x:
            run += 1
        if run < k and imc(Term((x,))) < k:
            b = Term(prefix[:m] + (x,))
            if not member_tk(b, k):
                raise PromotionFailure(f"promotion of {format_term(a)} left T°[{k}]")
            return b
        lift = _best_lift(prefix, m, x, run, k)
        if lift is None:
            b = Term(prefix[:m] + (x,))
            raise PromotionFailure(f"no candidate beta with beta[{k}] = {format_term(b)}")
        m, x = lift
    raise PromotionFailure(f"promote loop exceeded {cap} rounds")


def _best_lift(prefix, m, x, run, k):
    """Largest countable limit ``beta`` with ``beta[k] == prefix[:m] + x``.

    Only suffixes inside the trailing block of ``run`` copies of ``x`` can be
    inverted; a shorter untouched head gives a larger ``beta``, so the
    longest invertible suffix wins.
    """
    for r in range(run, 0, -1):
        j = m + 1 - r
        best = None
        for c in invert_all(Term((x,) * r)):
            beta = c.beta
            if not (c.finite and c.zeta == k and beta.is_principal
                    and is_limit(beta) and degree(beta) == 0):
                continue
            if j and compare(beta, Term(prefix[j - 1:j])) > 0:
                continue
            if best is None or compare(beta, best) > 0:
                best = beta
        if best is not None:
            return j, best.parts[0]
    return None


# ladder[k][n] is the member of T°[k] with G_k value k**n; it is additively principal
_ladders: Dict[int, List[Term]] = {}


def _ladder(k: int, n: int, budget: StepBudget) -> List[Term]:
    rungs = _ladders.setdefault(k, [ONE])
    while len(rungs) <= n:
        budget.tick(1)
        nxt = _rung_by_exponent(k, len(rungs), rungs[-1], budget)
        if nxt is None:
            nxt = _rung_by_successor(k, rungs)
        rungs.append(nxt)
    return rungs


def _rung_by_exponent(k: int, n: int, below: Term, budget: StepBudget) -> Optional[Term]:
    # rungs past the first few are theta_0(g_inverse(m, k)) with m = n or n + 1;
    # the T°[k] member of a given value is unique, so a candidate that passes
    # the membership and value checks is the rung
    target = k**n
    for m in (n, n + 1):
        cand = theta(0, g_inverse(m, k, budget, verify=False))
        if (compare(cand, below) > 0 and member_tk(cand, k)
                and slow_growing(k, cand, budget, cap=target + 1) == target):
            return cand
    return None


def _rung_by_successor(k: int, rungs: List[Term]) -> Term:
    # the largest member with value k**len - 1 uses digit k-1 at every rung
    top = Term(tuple(p.parts[0] for p in reversed(rungs) for _ in range(k - 1)))
    nxt = succ_in_quotient(top, k)
    if not nxt.is_principal or compare(nxt, rungs[-1]) <= 0:
        raise PromotionFailure(f"rung {len(rungs)} at base {k} is not a new principal")
    return nxt


def _digits(n: int, k: int) -> List[int]:
    out = []
    while n:
        n, d = divmod(n, k)
        out.append(d)
    return out


def g_inverse(N: int, k: int, budget: Optional[StepBudget] = None,
              verify: bool = True) -> Term:
    """The unique ``a`` in T°[k] with ``G_k(a) == N``.

    Built from the base-``k`` digits of ``N``: digit ``d`` at position ``n``
    contributes ``d`` copies of the ``n``-th rung of the principal ladder.
    With ``verify`` the result is checked for membership and value.
    """
    _check_base(k)
    if N < 0:
        raise ValueError("N must be a natural number")
    if budget is None:
        budget = StepBudget.from_env()
    digits = _digits(N, k)
    budget.tick(len(digits))
    rungs = _ladder(k, len(digits) - 1, budget) if digits else []
    a = Term(tuple(rungs[n].parts[0] for n in range(len(digits) - 1, -1, -1)
                   for _ in range(digits[n])))
    if verify:
        if not member_tk(a, k):
            raise PromotionFailure(f"g_inverse({N}, {k}) left T°[{k}]")
        if slow_growing(k, a, budget) != N:
            raise PromotionFailure(f"g_inverse({N}, {k}) does not evaluate back to {N}")
    return a


def g_inverse_iterative(N: int, k: int, limit: int = 10**5) -> Term:
    """``N``-fold ``succ_in_quotient`` from 0; the reference for :func:`g_inverse`."""
    _check_base(k)
    if N > limit:
        raise BudgetExhausted(f"{N} successor steps exceed the limit {limit}")
    a = ZERO
    for _ in range(N):
        a = succ_in_quotient(a, k)
    return a


def base_change(N: int, k: int, l: int, budget: Optional[StepBudget] = None) -> int:
    """``N[k -> l] = G_l(g_inverse(N, k))``."""
    _check_base(k)
    if l <= k:
        raise BadBase(f"target base {l} must exceed {k}")
    if budget is None:
        budget = StepBudget.from_env()
    return slow_growing(l, g_inverse(N, k, budget), budget)


def base_change_to_omega(N: int, k: int, budget: Optional[StepBudget] = None) -> Term:
    return g_inverse(N, k, budget)


@dataclass(frozen=True)
class GoodsteinStep:
    l: int
    base: int
    value: int
    ordinal: str


@dataclass
class GoodsteinTrace:
    seed: int
    base: int
    ordinal: str
    steps: List[GoodsteinStep] = field(default_factory=list)
    terminated: bool = False
    note: Optional[str] = None
    # steps whose ordinal fell outside T°[base]; expected to stay empty
    quotient_exits: List[int] = field(default_factory=list)

    @property
    def values(self) -> List[int]:
        return [self.seed] + [s.value for s in self.steps]

    def to_dict(self) -> dict:
        d = {"seed": str(self.seed), "base": self.base, "ordinal": self.ordinal,
             "steps": [{"l": s.l, "base": s.base, "value": str(s.value),
                        "ordinal": s.ordinal} for s in self.steps],
             "terminated": self.terminated}
        if self.note:
            d["note"] = self.note
        if self.quotient_exits:
            d["quotient_exits"] = self.quotient_exits
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def run(N: int, k: int, max_steps: int, budget: Optional[StepBudget] = None,
        sugar: bool = False) -> GoodsteinTrace:
    """Goodstein process from ``N`` at base ``k``, computed along both paths.

    The ordinal path descends with ``pred`` and evaluates with ``G``; the
    numeric path re-expands the previous value in the old base.  They must
    agree at every step.  Running out of budget ends the trace with
    ``terminated=False`` and the reason in ``note``.
    """
    _check_base(k)
    if budget is None:
        budget = StepBudget.from_env()
    alpha = g_inverse(N, k, budget)
    trace = GoodsteinTrace(N, k, format_term(alpha, sugar))
    value = N
    try:
        for l in range(1, max_steps + 1):
            if value == 0:
                break
            b = k + l
            alpha_next = pred(b, alpha, budget)
            if compare(alpha_next, alpha) >= 0:
                raise PathMismatch("ordinal state failed to decrease")
            by_ordinal = slow_growing(b, alpha_next, budget)
            by_number = base_change(value, b - 1, b, budget) - 1
            if by_ordinal != by_number:
                raise PathMismatch(
                    f"step {l}: ordinal path gives {by_ordinal}, numeric path {by_number}")
            if not member_tk(alpha_next, b):
                trace.quotient_exits.append(l)
            alpha, value = alpha_next, by_ordinal
            trace.steps.append(GoodsteinStep(l, b, value, format_term(alpha, sugar)))
    except BudgetExhausted as e:
        trace.note = str(e)
    trace.terminated = value == 0
    return trace
