"""Hereditary base-k representations and the original Goodstein process."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Tuple

from .errors import BadBase, BudgetExhausted
from .goodstein import GoodsteinStep, GoodsteinTrace
from .hierarchy import StepBudget

__all__ = ["CNFNat", "hereditary", "mc", "classical_eval", "classical_base_change",
           "classical_goodstein", "format_cnf"]


@total_ordering
@dataclass(frozen=True)
class CNFNat:
    """``sum(base ** e * c for e, c in terms)`` with exponents strictly decreasing.

    Read with ``omega`` for the base this is a Cantor normal form below
    epsilon_0, and the ordering below is the ordinal one.
    """

    terms: Tuple[Tuple["CNFNat", int], ...] = ()

    def __post_init__(self):
        for (e1, _), (e2, _) in zip(self.terms, self.terms[1:]):
            if not e2 < e1:
                raise ValueError("exponents must strictly decrease")
        if any(c < 1 for _, c in self.terms):
            raise ValueError("coefficients must be positive")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __lt__(self, other: "CNFNat") -> bool:
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            if e1 != e2:
                return e1 < e2
            if c1 != c2:
                return c1 < c2
        return len(self.terms) < len(other.terms)

    def __str__(self) -> str:
        return format_cnf(self)


ZERO_CNF = CNFNat()


def _check_base(k: int) -> None:
    if k < 2:
        raise BadBase(f"base must be at least 2, got {k}")


def hereditary(N: int, k: int) -> CNFNat:
    """Hereditary base-``k`` representation of ``N``."""
    _check_base(k)
    if N < 0:
        raise ValueError("N must be a natural number")
    terms = []
    e = 0
    while N:
        N, d = divmod(N, k)
        if d:
            terms.append((hereditary(e, k), d))
        e += 1
    return CNFNat(tuple(reversed(terms)))


def mc(e: CNFNat) -> int:
    """Largest coefficient anywhere in the tree; 0 for zero."""
    return max((max(c, mc(x)) for x, c in e.terms), default=0)


def classical_eval(e: CNFNat, l: int, budget: Optional[StepBudget] = None) -> int:
    """Evaluate the tree with base ``l``."""
    _check_base(l)
    if budget is None:
        budget = StepBudget()
    total = 0
    for x, c in e.terms:
        budget.tick()
        p = classical_eval(x, l, budget)
        if p * l.bit_length() > budget.max_bits + l.bit_length():
            raise BudgetExhausted(f"value exceeds {budget.max_bits} bits")
        total += c * l**p
    return total


def classical_base_change(N: int, k: int, l: int, budget: Optional[StepBudget] = None) -> int:
    """Rewrite ``N`` hereditarily in base ``k`` and read it in base ``l``."""
    _check_base(k)
    if l < k:
        raise BadBase(f"target base {l} is below {k}")
    return classical_eval(hereditary(N, k), l, budget)


def format_cnf(e: CNFNat) -> str:
    """Render with ``w`` for the base, e.g. ``w^(w)*2+1``."""
    if e.is_zero:
        return "0"
    out = []
    for x, c in e.terms:
        if x.is_zero:
            out.append(str(c))
            continue
        head = "w" if x.terms == ((ZERO_CNF, 1),) else f"w^({format_cnf(x)})"
        out.append(head if c == 1 else f"{head}*{c}")
    return "+".join(out)


def classical_goodstein(N: int, k: int, max_steps: int,
                        budget: Optional[StepBudget] = None) -> GoodsteinTrace:
    """``N -> N[b -> b+1] - 1`` with the base growing by one per step."""
    _check_base(k)
    if budget is None:
        budget = StepBudget.from_env()
    trace = GoodsteinTrace(N, k, format_cnf(hereditary(N, k)))
    value = N
    try:
        for l in range(1, max_steps + 1):
            if value == 0:
                break
            b = k + l
            value = classical_base_change(value, b - 1, b, budget) - 1
            trace.steps.append(GoodsteinStep(l, b, value, format_cnf(hereditary(value, b))))
    except BudgetExhausted as e:
        trace.note = str(e)
    trace.terminated = value == 0
    return trace
