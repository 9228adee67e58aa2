"""Syntactic inversion of fundamental sequences, imc, and the quotients T/k.

``invert_all(a)`` lists every pair ``(beta, zeta)`` with ``beta[zeta] == a``
that the inversion cases detect, where either ``zeta`` is a natural number
``>= 2`` and ``beta`` is a limit of countable cofinality, or ``zeta`` is an
additive principal ``> 1`` in ``[Omega_i, Omega_{i+1})`` and ``beta`` has
cofinality ``Omega_{i+1}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Union

from .errors import BadBase, NotPrincipal
from .fundseq import eta_aux, fund_seq
from .terms import (
    ONE,
    Term,
    ZERO,
    add,
    chi,
    compare,
    degree,
    holds_F,
    is_limit,
    node_count,
    omega_n,
    principal_subterms,
    split_arg,
    theta,
)

__all__ = ["Case", "InversionCandidate", "invert_all", "principal_successor",
           "max_finite_iteration", "imc", "member_quotient",
           "member_inductive", "member_tk"]


class Case(enum.Enum):
    CARDINAL = "1"
    MULTIPLE = "2"
    SUM_TAIL = "3"
    THETA_ARG = "4a"
    THETA_ITER = "4b"
    THETA_DELTA = "4c"


@dataclass(frozen=True)
class InversionCandidate:
    beta: Term
    zeta: Union[int, Term]
    case: Case

    @property
    def finite(self) -> bool:
        return isinstance(self.zeta, int)


def principal_successor(p: Term) -> Term:
    """The least additive principal above ``p`` (written ``p * omega``)."""
    i = p.index
    s = split_arg(i, p.arg)
    if s.delta.parts:
        return theta(i, p)
    return theta(i, add(s.eta, ONE))


def _is_multiple(j: int, delta: Term) -> bool:
    # Omega_{j+1} divides delta and delta < Omega_{j+2}
    return all(p.index == j + 1 for p in delta.parts)


@lru_cache(maxsize=None)
def invert_all(a: Term) -> FrozenSet[InversionCandidate]:
    """All inversion candidates for ``a`` (empty if none of the cases applies)."""
    out = set()
    parts = a.parts
    if not parts:
        return frozenset()

    # case 1: a = Omega_{i+1}[a] for principal a > 1
    if len(parts) == 1 and a != ONE:
        out.add(InversionCandidate(omega_n(a.index + 1), a, Case.CARDINAL))

    # case 2: a = eta * n
    if len(parts) >= 2 and all(p == parts[0] for p in parts):
        eta = Term(parts[:1])
        out.add(InversionCandidate(principal_successor(eta), len(parts), Case.MULTIPLE))

    # case 3: a = xi_1 + ... + xi_k + eta[zeta]
    for k in range(1, len(parts)):
        head, rho = parts[:k], Term(parts[k:])
        last = Term(parts[k - 1:k])
        for c in invert_all(rho):
            b = c.beta
            if b.is_principal and b != ONE and compare(b, last) <= 0:
                out.add(InversionCandidate(Term(head + b.parts), c.zeta, Case.SUM_TAIL))

    if len(parts) == 1:
        out.update(_invert_theta(a))
    return frozenset(out)


def _invert_theta(a: Term) -> Iterable[InversionCandidate]:
    j = a.index
    s = split_arg(j, a.arg)
    gamma, rho = s.delta, s.eta

    # 4(a): rho = eta[zeta] inside the argument
    if rho.parts:
        for c in invert_all(rho):
            eta = c.beta
            if all(p.index <= j for p in eta.parts) and not holds_F(j, gamma, eta):
                yield InversionCandidate(theta(j, Term(gamma.parts + eta.parts)),
                                         c.zeta, Case.THETA_ARG)

    # 4(c): gamma = delta[zeta] with eta(j, delta, rho) defined
    if gamma.parts:
        for c in invert_all(gamma):
            delta = c.beta
            if not _is_multiple(j, delta) or chi(j, delta):
                continue
            eta = eta_aux(j, delta, rho)
            if eta is not None:
                yield InversionCandidate(theta(j, Term(delta.parts + eta.parts)),
                                         c.zeta, Case.THETA_DELTA)

    # 4(b): iterative repetition  a = theta_j(delta[theta_j(delta[ ... delta[nu] ...])])
    yield from _iterations(a, j)


def _iterations(a: Term, j: int) -> Iterable[InversionCandidate]:
    found = set()
    cap = node_count(a) + 1
    for c in invert_all(a.arg):
        z = c.zeta
        if c.finite or z.index != j:
            continue
        delta = c.beta
        if not _is_multiple(j, delta) or not chi(j, delta):
            continue
        _walk(delta, j, z.arg, 1, cap, found)
    for beta, m in found:
        if m >= 2:
            yield InversionCandidate(beta, m, Case.THETA_ITER)


def _walk(delta: Term, j: int, x: Term, m: int, cap: int, found: set) -> None:
    # x = delta[nu] terminates the sequence; x = delta[theta_j(y)] continues it
    if m > cap:
        return
    for nu in [ZERO, *principal_subterms(x, index=j)]:
        if fund_seq(delta, nu) != x:
            continue
        eta = eta_aux(j, delta, nu)
        if eta is not None:
            found.add((theta(j, Term(delta.parts + eta.parts)), m))
        if nu.parts:
            _walk(delta, j, nu.arg, m + 1, cap, found)


def _countable_limit(b: Term) -> bool:
    return is_limit(b) and degree(b) == 0


def max_finite_iteration(a: Term) -> int:
    """Largest ``n >= 2`` with ``a = beta[n]`` for a countable limit ``beta``; else 1."""
    if not a.is_principal:
        raise NotPrincipal(f"{a} is not additively principal")
    return max((c.zeta for c in invert_all(a)
                if c.finite and c.zeta >= 2 and _countable_limit(c.beta)), default=1)


def _tail(a: Term):
    # a = xi + eta * l with eta < last summand of xi
    parts = a.parts
    l = 1
    while l < len(parts) and parts[-1 - l] == parts[-1]:
        l += 1
    return Term(parts[:-l]), Term(parts[-1:]), l


@lru_cache(maxsize=None)
def imc(a: Term) -> int:
    """Iterative maximal coefficient; ``imc(a) == 0`` iff ``a == 0``."""
    if not a.parts:
        return 0
    if len(a.parts) > 1:
        # unfolding the tail clause gives the max over blocks of equal summands
        best, run, prev = 0, 0, None
        for p in a.parts:
            run = run + 1 if p == prev else 1
            if run == 1:
                best = max(best, imc(Term((p,))))
            best = max(best, run)
            prev = p
        return best
    from .fundseq import support
    return max(imc(a.arg), imc(support(a)), max_finite_iteration(a))


def _check_base(k: int) -> None:
    if k < 2:
        raise BadBase(f"base must be at least 2, got {k}")


def member_quotient(a: Term, k: int) -> bool:
    """Membership in T/k via ``imc(a) < k``."""
    _check_base(k)
    return imc(a) < k


def member_inductive(a: Term, k: int) -> bool:
    """Membership in T/k by the inductive definition, independent of imc."""
    _check_base(k)
    return _inductive(a, k)


@lru_cache(maxsize=None)
def _inductive(a: Term, k: int) -> bool:
    from .fundseq import support
    if not a.parts:
        return True
    if len(a.parts) > 1:
        xi, eta, l = _tail(a)
        return l < k and _inductive(xi, k) and _inductive(eta, k)
    if not _inductive(a.arg, k) or not _inductive(support(a), k):
        return False
    return not any(c.finite and c.zeta >= k and _countable_limit(c.beta)
                   for c in invert_all(a))


def member_tk(a: Term, k: int) -> bool:
    """Membership in ``T°[k]``: below Omega_1, countable cofinality, imc < k."""
    _check_base(k)
    return compare(a, omega_n(1)) < 0 and degree(a) == 0 and imc(a) < k
