"""Slow-growing G_k, predecessors P_k, the Hardy hierarchy and h_k.

All evaluators run under a :class:`StepBudget`; every function here is
non-elementary and must stop loudly instead of hanging.
"""

from __future__ import annotations

import enum
import os
import time
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .errors import BadBase, BudgetExhausted, DomainError
from .fundseq import fund_seq, support
from .terms import (
    ONE,
    Term,
    ZERO,
    compare,
    holds_F,
    is_limit,
    is_successor,
    node_count,
    omega_n,
    split_arg,
    theta,
)

__all__ = ["StepBudget", "Convention", "slow_growing", "slow_growing_naive",
           "pred", "hardy", "h_k", "takeuti_approx"]

DEFAULT_MAX_STEPS = 10**6
DEFAULT_MAX_BITS = 10**6


@dataclass
class StepBudget:
    """Caps on evaluation steps, result size in bits and, optionally, wall time."""

    max_steps: int = DEFAULT_MAX_STEPS
    max_bits: int = DEFAULT_MAX_BITS
    consumed: int = 0
    seconds: Optional[float] = None
    # optional set shared between budgets: principals that already ran out once
    over: Optional[set] = field(default=None, repr=False)
    _deadline: Optional[float] = field(default=None, repr=False)

    @classmethod
    def from_env(cls) -> "StepBudget":
        return cls(max_steps=int(os.environ.get("ORD_MAX_STEPS", DEFAULT_MAX_STEPS)))

    def tick(self, n: int = 1) -> None:
        self.consumed += n
        if self.consumed > self.max_steps:
            self.consumed = self.max_steps
            raise BudgetExhausted(f"step budget of {self.max_steps} exhausted")
        if self.seconds is not None:
            now = time.monotonic()
            if self._deadline is None:
                self._deadline = now + self.seconds
            elif now > self._deadline:
                raise BudgetExhausted(f"time budget of {self.seconds}s exhausted")

    def check_index(self, n: int) -> int:
        # a[n] may materialize about n summands; refuse before allocating
        if n > self.max_steps - self.consumed:
            raise BudgetExhausted(f"index {n} exceeds the remaining step budget")
        return n

    def check_value(self, v: int) -> int:
        if v.bit_length() > self.max_bits:
            raise BudgetExhausted(f"value exceeds {self.max_bits} bits")
        return v


class Convention(enum.Enum):
    PAPER = "paper"      # H_lam(x) = H_{lam[x]}(x)
    SHIFTED = "shifted"  # H_lam(x) = H_{lam[x+1]}(x)


def _check_base(k: int) -> None:
    if k < 2:
        raise BadBase(f"base must be at least 2, got {k}")


def _check_countable(a: Term) -> None:
    if compare(a, omega_n(1)) >= 0:
        raise DomainError(f"{a} is not below Omega_1")


# exact values, and lower bounds established by capped runs
_exact: Dict[Tuple[int, Term], int] = {}
_lower: Dict[Tuple[int, Term], int] = {}


def slow_growing(k: int, a: Term, budget: Optional[StepBudget] = None,
                 cap: Optional[int] = None, shortcut: bool = True) -> int:
    """``G_k(a)`` for ``a < Omega_1``.

    With ``cap`` the result is ``min(G_k(a), cap)`` and evaluation stops as
    soon as the cap is reached.  ``shortcut`` enables the exact identity
    ``G(theta_0(xi + rho)) = G(theta_0(xi)) * k**G(rho)`` for a leading
    principal ``xi`` (zero fixed-point level only); without it every limit
    is unfolded through ``a[k]``.
    """
    _check_base(k)
    _check_countable(a)
    if budget is None:
        budget = StepBudget()
    try:
        return _G(k, a, budget, cap, shortcut)
    except RecursionError:
        # nesting this deep only occurs for values far past any bit budget
        raise BudgetExhausted(f"term nesting too deep to evaluate G_{k}") from None


def _G(k, a, budget, cap, shortcut):
    total = 0
    for p in a.parts:
        total += _G_principal(k, Term((p,)), budget, cap, shortcut)
        if cap is not None and total >= cap:
            return cap
    return budget.check_value(total) if cap is None else total


def _G_principal(k, p, budget, cap, shortcut):
    key = (k, p)
    if shortcut:
        v = _exact.get(key)
        if v is not None:
            return v if cap is None else min(v, cap)
        if cap is not None and _lower.get(key, 0) >= cap:
            return cap
    # a capped run that gave up says nothing about larger caps
    over_key = key if cap is None else (k, p, cap)
    if budget.over is not None and over_key in budget.over:
        raise BudgetExhausted(f"G_{k} of {p} exceeded an earlier budget")
    budget.tick()
    try:
        v = _G_principal_eval(k, p, budget, cap, shortcut)
    except BudgetExhausted:
        if budget.over is not None:
            budget.over.add(over_key)
        raise
    if shortcut:
        if cap is None or v < cap:
            _exact[key] = v
        else:
            _lower[key] = max(_lower.get(key, 0), cap)
    return v


def _G_principal_eval(k, p, budget, cap, shortcut):
    if p == ONE:
        return 1
    s = split_arg(0, p.arg)
    delta, eta = s.delta, s.eta
    if not delta.parts:
        if shortcut and len(eta.parts) > 1:
            head = _G_principal(k, theta(0, Term(eta.parts[:1])), budget, cap, shortcut)
            rest = Term(eta.parts[1:])
            if cap is None:
                e = _G(k, rest, budget, None, shortcut)
                if e * k.bit_length() > budget.max_bits + k.bit_length():
                    raise BudgetExhausted(f"value exceeds {budget.max_bits} bits")
                return budget.check_value(head * k**e)
            if head >= cap:
                return cap
            e = _G(k, rest, budget, cap.bit_length() + 1, shortcut)
            if e > cap.bit_length():
                return cap
            return min(head * k**e, cap)
        if not is_limit(eta) or holds_F(0, delta, eta):
            # (support * omega)[k] = support * k
            g = _G(k, support(p), budget, cap, shortcut)
            return k * g if cap is None else min(k * g, cap)
    unfolded = fund_seq(p, k)
    # unfolding cost grows with term size, so charge for it
    budget.tick(node_count(unfolded))
    return _G(k, unfolded, budget, cap, shortcut)


def slow_growing_naive(k: int, a: Term, limit: int = 10**4) -> int:
    """Literal count-down ``G_k``; raises BudgetExhausted past ``limit`` successor steps."""
    _check_base(k)
    _check_countable(a)
    n = 0
    while a.parts:
        if is_successor(a):
            n += 1
            if n > limit:
                raise BudgetExhausted(f"naive G_{k} exceeds {limit}")
            a = Term(a.parts[:-1])
        else:
            a = fund_seq(a, k)
    return n


def pred(k: int, a: Term, budget: Optional[StepBudget] = None) -> Term:
    """``P_k(a)``: descend through ``a[k]`` until a successor, then drop the 1."""
    _check_base(k)
    _check_countable(a)
    if budget is None:
        budget = StepBudget()
    while a.parts:
        if is_successor(a):
            return Term(a.parts[:-1])
        a = fund_seq(a, budget.check_index(k))
        budget.tick(len(a.parts))
    return ZERO


def _split_finite(a: Term) -> Tuple[Term, int]:
    # a = lam + n with lam zero or a limit
    n = 0
    parts = a.parts
    while n < len(parts) and parts[-1 - n] == ONE.parts[0]:
        n += 1
    return (Term(parts[:-n]) if n else a), n


def hardy(a: Term, x: int, convention: Convention = Convention.SHIFTED,
          budget: Optional[StepBudget] = None) -> int:
    """``H_a(x)``; the limit clause uses ``a[x]`` (PAPER) or ``a[x+1]`` (SHIFTED)."""
    _check_countable(a)
    if budget is None:
        budget = StepBudget()
    shift = 1 if Convention(convention) is Convention.SHIFTED else 0
    a, n = _split_finite(a)
    x += n
    while a.parts:
        a, n = _split_finite(fund_seq(a, budget.check_index(x + shift)))
        # work per step grows with the number of summands
        budget.tick(len(a.parts) + 1)
        budget.check_value(x)
        x += n
    return x


def h_k(k: int, a: Term, budget: Optional[StepBudget] = None) -> int:
    """``k + min{l : P_{k+l} ... P_{k+1} a = 0}``."""
    _check_base(k)
    _check_countable(a)
    if budget is None:
        budget = StepBudget()
    l = 0
    lam, n = _split_finite(a)
    while lam.parts or n:
        if n:
            # the next n predecessor steps only strip ones
            l += n
            n = 0
            continue
        l += 1
        b = lam
        while True:
            b = fund_seq(b, budget.check_index(k + l))
            budget.tick(len(b.parts) + 1)
            if not b.parts or is_successor(b):
                break
        lam, n = _split_finite(b)
        n = max(n - 1, 0) if b.parts else 0
    return k + l


def takeuti_approx(n: int) -> Term:
    """``theta_0(theta_1(... theta_n(0) ...))``."""
    if n < 0:
        raise ValueError("n must be a natural number")
    t = ZERO
    for i in range(n, -1, -1):
        t = theta(i, t)
    return t
