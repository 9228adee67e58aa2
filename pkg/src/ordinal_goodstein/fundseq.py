"""Support terms and the modified Buchholz system of fundamental sequences.

The only change against the unmodified system is that additive principal
successors satisfy ``(eta * omega)[k] = eta * k`` instead of ``eta * (k+1)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Union

from .errors import IndexOutOfDomain, NotPrincipal
from .terms import (
    ONE,
    ZERO,
    Term,
    add,
    chi,
    compare,
    degree,
    finite_value,
    holds_F,
    is_limit,
    is_regular_cardinal,
    localization,
    numeral,
    omega_n,
    split_arg,
    star,
    theta,
    times_nat,
)

Index = Union[int, Term]

__all__ = ["support", "eta_aux", "fund_seq", "expand", "bachmann_check",
           "check_index"]


def _penultimate(i: int, a: Term) -> Optional[Term]:
    chain = localization(i, a).chain
    return chain[-2] if len(chain) > 2 else None


@lru_cache(maxsize=None)
def support(a: Term) -> Term:
    """The support term of a principal ``a = theta_i(delta + eta)``."""
    if not a.is_principal:
        raise NotPrincipal(f"{a} is not a theta term")
    i = a.index
    s = split_arg(i, a.arg)
    delta, eta = s.delta, s.eta
    if holds_F(i, delta, eta):
        return localization(i, a).chain[-2]
    if not eta.parts and delta.parts:
        prev = _penultimate(i, a)
        if prev is not None and prev == star(i, delta):
            if compare(star(i, fund_seq(delta, 0)), prev) < 0:
                return prev
    if eta.parts and eta.parts[-1] == ONE.parts[0]:
        return theta(i, Term(delta.parts + eta.parts[:-1]))
    return ZERO


def eta_aux(i: int, delta: Term, rho: Term) -> Optional[Term]:
    """Partial inverse of the support map: the ``eta`` with support(theta_i(delta+eta)) == rho."""
    if holds_F(i, delta, rho):
        return rho
    if not rho.parts:
        # theta_i(delta) may itself have a nonzero support via localization
        if delta.parts and support(theta(i, delta)).parts:
            return None
        return ZERO
    if delta.parts:
        prev = _penultimate(i, theta(i, delta))
        if (prev is not None and prev == rho and star(i, delta) == rho
                and compare(star(i, fund_seq(delta, 0)), rho) < 0):
            return ZERO
    if rho.is_principal and rho.index == i:
        s = split_arg(i, rho.arg)
        if s.delta == delta:
            return add(s.eta, ONE)
    return None


def check_index(a: Term, zeta: Index) -> Index:
    """Validate ``zeta`` against the domain of ``a[.]``; returns an int when d(a)=0."""
    d = degree(a)
    if d == 0:
        if isinstance(zeta, Term):
            n = finite_value(zeta)
            if n is None:
                raise IndexOutOfDomain(
                    f"{a} has countable cofinality; index {zeta} is not finite")
            return n
        if zeta < 0:
            raise IndexOutOfDomain("negative index")
        return zeta
    if isinstance(zeta, int):
        if zeta < 0:
            raise IndexOutOfDomain("negative index")
        return numeral(zeta)
    if compare(zeta, omega_n(d)) >= 0:
        raise IndexOutOfDomain(f"index {zeta} is not below Omega_{d}")
    return zeta


def fund_seq(a: Term, zeta: Index) -> Term:
    """``a[zeta]``; total on all terms (zero and successors included)."""
    return _fs(a, check_index(a, zeta))


@lru_cache(maxsize=None)
def _fs(a: Term, zeta: Index) -> Term:
    parts = a.parts
    if not parts or a == ONE:
        return ZERO
    if len(parts) > 1:
        return Term(parts[:-1] + _fs(Term(parts[-1:]), zeta).parts)
    i = a.index
    s = split_arg(i, a.arg)
    delta, eta = s.delta, s.eta
    if is_limit(eta) and not holds_F(i, delta, eta):
        return theta(i, Term(delta.parts + _fs(eta, zeta).parts))
    if not delta.parts:
        if eta.parts:
            return times_nat(support(a), zeta)
        return numeral(zeta) if isinstance(zeta, int) else zeta
    if chi(i, delta):
        return _theta_iterate(a, zeta)
    return theta(i, add(_fs(delta, zeta), support(a)))


@lru_cache(maxsize=None)
def _theta_iterate(a: Term, n: int) -> Term:
    # a[0] = theta_i(delta[support]),  a[n+1] = theta_i(delta[a[n]])
    i = a.index
    delta = split_arg(i, a.arg).delta
    x = support(a)
    for _ in range(n + 1):
        x = theta(i, _fs(delta, x))
    return x


def expand(a: Term, k: int, steps: int) -> List[Term]:
    """``[a, a[k], a[k][k], ...]`` with ``steps`` applications, stopping at 0."""
    out = [a]
    for _ in range(steps):
        if not out[-1].parts:
            break
        out.append(fund_seq(out[-1], k))
    return out


def bachmann_check(a: Term, b: Term, zeta: Index) -> bool:
    """Restricted Bachmann property: ``a[zeta] < b < a`` implies ``a[zeta] <= b[1]``."""
    if is_regular_cardinal(a) or is_regular_cardinal(b):
        raise ValueError("Bachmann property is only stated for non-cardinals")
    lo = fund_seq(a, zeta)
    if not (compare(lo, b) < 0 and compare(b, a) < 0):
        return True
    return compare(lo, fund_seq(b, 1)) <= 0
