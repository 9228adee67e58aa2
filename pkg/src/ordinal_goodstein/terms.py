"""Canonical terms of the theta notation system below the Takeuti ordinal.

A term is either zero or a non-increasing sum of principal terms
``theta_i(arg)``.  Only the smart constructors in this module build terms,
so every ``Term`` object is canonical: summands are in additive normal
form and every argument of ``theta_i`` lies below ``Omega_{i+2}``.

Numerals are sums of ``theta_0(0) = 1``; ``theta_i(0)`` is ``Omega_i``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from typing import Iterator, Optional, Sequence, Tuple

from .errors import (
    ArgumentOutOfRange,
    NonCanonical,
    NotPrincipal,
    TermSyntaxError,
)

__all__ = [
    "Term", "ZERO", "ONE", "OMEGA", "EPSILON_0", "ArgSplit", "Localization",
    "Kind", "Classification", "LT", "EQ", "GT",
    "theta", "omega_n", "numeral", "add", "add_all", "times_nat", "compare",
    "star", "split_arg", "holds_F", "is_limit", "is_successor", "classify",
    "localization", "chi", "degree", "node_count", "max_index",
    "finite_value", "is_regular_cardinal", "principal_subterms",
    "parse", "format_term",
]

LT, EQ, GT = -1, 0, 1


class Principal:
    """One summand ``theta_index(arg)``.  Hash is cached; instances are immutable."""

    __slots__ = ("index", "arg", "_hash")

    def __init__(self, index: int, arg: "Term"):
        self.index = index
        self.arg = arg
        self._hash = hash((index, arg))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Principal):
            return NotImplemented
        return (self._hash == other._hash and self.index == other.index
                and self.arg == other.arg)

    def __reduce__(self):
        return (Principal, (self.index, self.arg))


class Term:
    """A canonical ordinal term; zero is the empty sum.

    Comparison operators follow the ordinal order, so terms sort directly.
    """

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Tuple[Principal, ...] = ()):
        self.parts = parts
        self._hash = hash(parts)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        return self._hash == other._hash and self.parts == other.parts

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __bool__(self):
        return bool(self.parts)

    def __add__(self, other):
        if isinstance(other, int):
            other = numeral(other)
        if not isinstance(other, Term):
            return NotImplemented
        return add(self, other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return times_nat(self, n)

    def __repr__(self):
        return f"Term({format_term(self, sugar=True)!r})"

    def __str__(self):
        return format_term(self)

    def __reduce__(self):
        return (Term, (self.parts,))

    @property
    def is_zero(self) -> bool:
        return not self.parts

    @property
    def is_principal(self) -> bool:
        return len(self.parts) == 1

    @property
    def index(self) -> int:
        """Index ``i`` of a principal term ``theta_i(arg)``."""
        if len(self.parts) != 1:
            raise NotPrincipal(f"{self} is not additively principal")
        return self.parts[0].index

    @property
    def arg(self) -> "Term":
        if len(self.parts) != 1:
            raise NotPrincipal(f"{self} is not additively principal")
        return self.parts[0].arg

    def summands(self) -> Iterator["Term"]:
        for p in self.parts:
            yield _wrap(p)

    @property
    def head(self) -> "Term":
        return _wrap(self.parts[0])

    @property
    def last(self) -> "Term":
        return _wrap(self.parts[-1])


ZERO = Term(())


@lru_cache(maxsize=None)
def _wrap(p: Principal) -> Term:
    return Term((p,))


# --------------------------------------------------------------------------
# Constructors


def _arg_fits(i: int, arg: Term) -> bool:
    # arg < Omega_{i+2}  iff  every summand has index <= i+1
    return all(p.index <= i + 1 for p in arg.parts)


def theta(i: int, arg: Term = ZERO) -> Term:
    """Return the principal term ``theta_i(arg)``."""
    if i < 0:
        raise ValueError("theta index must be non-negative")
    if not _arg_fits(i, arg):
        raise ArgumentOutOfRange(
            f"argument {arg} of theta_{i} is not below Omega_{i + 2}")
    return _wrap(Principal(i, arg))


def omega_n(i: int) -> Term:
    """``Omega_i = theta_i(0)``; ``Omega_0 = 1``."""
    return theta(i, ZERO)


ONE = omega_n(0)
OMEGA = theta(0, ONE)
EPSILON_0 = theta(0, omega_n(1))


@lru_cache(maxsize=4096)
def numeral(n: int) -> Term:
    if n < 0:
        raise ValueError("numerals are non-negative")
    return Term(ONE.parts * n)


def add(a: Term, b: Term) -> Term:
    """Ordinal sum with left absorption: summands of ``a`` below head(b) vanish."""
    if not b.parts:
        return a
    if not a.parts:
        return b
    lead = b.parts[0]
    keep = len(a.parts)
    while keep and _cmp_principal(a.parts[keep - 1], lead) < 0:
        keep -= 1
    return Term(a.parts[:keep] + b.parts)


def add_all(terms: Sequence[Term]) -> Term:
    out = ZERO
    for t in terms:
        out = add(out, t)
    return out


def times_nat(p: Term, n: int) -> Term:
    """``p + ... + p`` (n copies) for an additively principal ``p``."""
    if not p.is_principal:
        raise NotPrincipal(f"{p} is not additively principal")
    if n < 0:
        raise ValueError("multiplier must be a natural number")
    return Term(p.parts * n)


# --------------------------------------------------------------------------
# Order


def compare(a: Term, b: Term) -> int:
    """Three-way comparison returning LT (-1), EQ (0) or GT (1)."""
    if a is b:
        return EQ
    pa, pb = a.parts, b.parts
    for x, y in zip(pa, pb):
        c = _cmp_principal(x, y)
        if c:
            return c
    if len(pa) == len(pb):
        return EQ
    return LT if len(pa) < len(pb) else GT


@lru_cache(maxsize=None)
def _cmp_principal(x: Principal, y: Principal) -> int:
    if x == y:
        return EQ
    if x.index != y.index:
        # image of theta_i lies in [Omega_i, Omega_{i+1})
        return LT if x.index < y.index else GT
    i = x.index
    a, b = _wrap(x), _wrap(y)
    if _lt_same_index(i, a, b):
        return LT
    return GT


def _lt_same_index(i: int, a: Term, b: Term) -> bool:
    xi, eta = a.arg, b.arg
    if compare(xi, eta) < 0 and compare(star(i, xi), b) < 0:
        return True
    return compare(a, star(i, eta)) <= 0


_sort_key = cmp_to_key(compare)


@lru_cache(maxsize=None)
def star(i: int, a: Term) -> Term:
    """Largest theta_i-subterm of ``a`` treating theta_j (j < i) as atomic; 0 if none."""
    best = ZERO
    for p in a.parts:
        if p.index < i:
            continue
        if p.index == i:
            cand = _wrap(p)
            if compare(best, cand) < 0:
                best = cand
        inner = star(i, p.arg)
        if compare(best, inner) < 0:
            best = inner
    return best


# --------------------------------------------------------------------------
# Structure


@dataclass(frozen=True)
class ArgSplit:
    """``xi = delta + eta`` with ``Omega_{i+1} | delta`` and ``eta < Omega_{i+1}``."""

    delta: Term
    eta: Term


def split_arg(i: int, xi: Term) -> ArgSplit:
    if not _arg_fits(i, xi):
        raise ArgumentOutOfRange(f"{xi} is not below Omega_{i + 2}")
    cut = 0
    while cut < len(xi.parts) and xi.parts[cut].index >= i + 1:
        cut += 1
    return ArgSplit(Term(xi.parts[:cut]), Term(xi.parts[cut:]))


def _split_principal(a: Term) -> Tuple[int, Term, Term]:
    i = a.index
    s = split_arg(i, a.arg)
    return i, s.delta, s.eta


def holds_F(i: int, delta: Term, eta: Term) -> bool:
    """Fixed-point predicate: ``eta = theta_i(Gamma + rho)`` with Gamma > delta and eta > delta*_i."""
    if not eta.is_principal or eta.index != i:
        return False
    gamma = split_arg(i, eta.arg).delta
    return compare(gamma, delta) > 0 and compare(eta, star(i, delta)) > 0


def is_successor(a: Term) -> bool:
    return bool(a.parts) and a.parts[-1] == ONE.parts[0]


def is_limit(a: Term) -> bool:
    return bool(a.parts) and not is_successor(a)


class Kind(enum.Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    pred: Optional[Term] = None


def classify(a: Term) -> Classification:
    if not a.parts:
        return Classification(Kind.ZERO)
    if is_successor(a):
        return Classification(Kind.SUCCESSOR, Term(a.parts[:-1]))
    return Classification(Kind.LIMIT)


def is_regular_cardinal(a: Term) -> bool:
    """True for ``Omega_{i+1} = theta_{i+1}(0)``."""
    return a.is_principal and a.index >= 1 and not a.arg.parts


def finite_value(a: Term) -> Optional[int]:
    """The natural number denoted by ``a``, or None if ``a`` is infinite."""
    one = ONE.parts[0]
    if all(p == one for p in a.parts):
        return len(a.parts)
    return None


@lru_cache(maxsize=None)
@lru_cache(maxsize=None)
def node_count(a: Term) -> int:
    return sum(1 + node_count(p.arg) for p in a.parts)


@lru_cache(maxsize=None)
def max_index(a: Term) -> int:
    """Largest theta index occurring in ``a`` (-1 for zero)."""
    return max((max(p.index, max_index(p.arg)) for p in a.parts), default=-1)


def principal_subterms(a: Term, index: Optional[int] = None) -> set:
    """All principal subterms (optionally of one index), collapsed or not."""
    out = set()
    stack = [a]
    while stack:
        t = stack.pop()
        for p in t.parts:
            w = _wrap(p)
            if w in out:
                continue
            if index is None or p.index == index:
                out.add(w)
            stack.append(p.arg)
    return out


# --------------------------------------------------------------------------
# Localization


@dataclass(frozen=True)
class Localization:
    index: int
    chain: Tuple[Term, ...]

    @property
    def levels(self) -> Tuple[Term, ...]:
        return tuple(split_arg(self.index, t.arg).delta for t in self.chain[1:])


def _uncollapsed(i: int, a: Term) -> set:
    # theta_i-subterms not inside the argument of any theta_j with j < i
    out = set()
    stack = [a]
    while stack:
        t = stack.pop()
        for p in t.parts:
            if p.index < i:
                continue
            if p.index == i and p.arg.parts:
                out.add(_wrap(p))
            stack.append(p.arg)
    return out


@lru_cache(maxsize=None)
def localization(i: int, a: Term) -> Localization:
    """The Omega_i-localization of the principal term ``a = theta_i(...)``.

    Chain of uncollapsed theta_i-subterms ending in ``a`` with strictly
    increasing values and strictly decreasing fixed-point levels, of maximal
    length.  Among maximal chains the one that is largest element by element
    from the top is returned.
    """
    if not a.is_principal or a.index != i:
        raise NotPrincipal(f"{a} is not a theta_{i} term")
    base = omega_n(i)
    if a == base:
        return Localization(i, (base,))
    top = split_arg(i, a.arg).delta
    # every chain element lies below a and has a level above a's
    nodes = sorted((t for t in _uncollapsed(i, a)
                    if compare(split_arg(i, t.arg).delta, top) > 0 and compare(t, a) < 0),
                   key=_sort_key)
    nodes.append(a)
    # nodes are sorted by value, so value order is position order; levels are
    # replaced by their rank among the distinct levels
    levels = [split_arg(i, t.arg).delta for t in nodes]
    distinct = sorted(set(levels), key=_sort_key)
    rank = {d: r for r, d in enumerate(distinct)}
    lv = [rank[d] for d in levels]
    n = len(nodes)
    longest = [1] * n
    for t in range(n):
        longest[t] = 1 + max((longest[s] for s in range(t) if lv[s] > lv[t]), default=0)
    # walk down from a, always to the largest subterm that still completes a
    # chain of maximal length
    cur = n - 1
    chain = [a]
    while longest[cur] > 1:
        cur = max(s for s in range(cur)
                  if longest[s] == longest[cur] - 1 and lv[s] > lv[cur])
        chain.append(nodes[cur])
    chain.append(base)
    return Localization(i, tuple(reversed(chain)))


# --------------------------------------------------------------------------
# Cofinality


@lru_cache(maxsize=None)
def chi(i: int, a: Term) -> int:
    """Characteristic function for cofinality ``Omega_{i+1}``."""
    bound = omega_n(i + 1)
    c = compare(a, bound)
    if c < 0:
        return 0
    if c == 0:
        return 1
    if len(a.parts) > 1:
        return chi(i, a.last)
    j, delta, eta = _split_principal(a)
    if not is_limit(eta) or holds_F(j, delta, eta):
        return chi(i, delta)
    return chi(i, eta)


@lru_cache(maxsize=None)
def degree(a: Term) -> int:
    """``i+1`` if ``a`` has cofinality ``Omega_{i+1}``, else 0."""
    for i in range(max_index(a)):
        if chi(i, a):
            return i + 1
    return 0


# --------------------------------------------------------------------------
# Text


class _Parser:
    def __init__(self, text: str, strict: bool):
        self.s = "".join(text.split())
        self.pos = 0
        self.strict = strict

    def error(self, msg):
        raise TermSyntaxError(f"{msg} at position {self.pos} in {self.s!r}")

    def peek(self):
        return self.s[self.pos] if self.pos < len(self.s) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.s[start:self.pos])

    def term(self) -> Term:
        if self.peek() == "0":
            save = self.pos
            self.pos += 1
            if not self.peek().isdigit():
                return ZERO
            self.pos = save
        atoms = [self.atom()]
        while self.peek() == "+":
            self.pos += 1
            atoms.append(self.atom())
        if self.strict:
            parts = tuple(p for t in atoms for p in t.parts)
            for x, y in zip(parts, parts[1:]):
                if _cmp_principal(x, y) < 0:
                    raise NonCanonical(f"summands of {self.s!r} are not non-increasing")
            return Term(parts)
        return add_all(atoms)

    def atom(self) -> Term:
        ch = self.peek()
        if ch.isdigit():
            n = self.nat()
            if n == 0:
                self.error("0 is not a summand")
            return numeral(n)
        if ch == "t":
            self.pos += 1
            i = self.nat()
            self.expect("(")
            arg = self.term()
            self.expect(")")
            return theta(i, arg)
        if ch == "w":
            self.pos += 1
            return OMEGA
        if ch == "W":
            self.pos += 1
            n = self.nat()
            if n < 1:
                self.error("W index must be at least 1")
            return omega_n(n)
        if self.s.startswith("e0", self.pos):
            self.pos += 2
            return EPSILON_0
        self.error("unexpected input" if ch else "unexpected end of input")


def parse(text: str, strict: bool = False) -> Term:
    """Parse the term grammar; non-strict mode normalizes sums by absorption."""
    p = _Parser(text, strict)
    if not p.s:
        p.error("empty term")
    t = p.term()
    if p.pos != len(p.s):
        p.error("trailing input")
    return t


def format_term(a: Term, sugar: bool = False) -> str:
    """Print ``a``; runs of ``1`` become decimal numerals, ``sugar`` adds w/Wn/e0."""
    if not a.parts:
        return "0"
    out = []
    one = ONE.parts[0]
    run = 0
    for p in a.parts:
        if p == one:
            run += 1
            continue
        out.append(_format_principal(p, sugar))
    if run:
        out.append(str(run))
    return "+".join(out)


def _format_principal(p: Principal, sugar: bool) -> str:
    if sugar:
        w = _wrap(p)
        if w == OMEGA:
            return "w"
        if w == EPSILON_0:
            return "e0"
        if p.index >= 1 and not p.arg.parts:
            return f"W{p.index}"
    return f"t{p.index}({format_term(p.arg, sugar)})"
