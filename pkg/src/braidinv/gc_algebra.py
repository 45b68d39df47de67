"""The free graded-commutative algebra on alpha, mu (degree 1) and gamma (degree 2).

Monomials ``alpha^eps mu^delta gamma^d`` (eps, delta in {0, 1}) form a basis;
alpha and mu anticommute and square to zero, gamma is central.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from .arrangement import DomainError
from .linalg import format_scalar

GCMonomial = Tuple[int, int, int]


def gc_degree(mono: GCMonomial) -> int:
    eps, delta, d = mono
    return eps + delta + 2 * d


def _mono_mul(x: GCMonomial, y: GCMonomial):
    e1, m1, d1 = x
    e2, m2, d2 = y
    if e1 and e2 or m1 and m2:
        return 0, None
    # move alpha^e2 left past mu^m1
    sign = -1 if m1 and e2 else 1
    return sign, (e1 + e2, m1 + m2, d1 + d2)


def format_gc_monomial(mono: GCMonomial) -> str:
    eps, delta, d = mono
    parts = []
    if eps:
        parts.append("alpha")
    if delta:
        parts.append("mu")
    if d == 1:
        parts.append("gamma")
    elif d > 1:
        parts.append(f"gamma^{d}")
    return "*".join(parts) if parts else "1"


class GCElement:
    """Immutable element of Q{alpha, mu, gamma}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[GCMonomial, object] = ()):
        clean: Dict[GCMonomial, Fraction] = {}
        for mono, c in dict(terms).items():
            eps, delta, d = mono
            if eps not in (0, 1) or delta not in (0, 1) or d < 0:
                raise DomainError(f"bad monomial {mono}")
            clean[mono] = clean.get(mono, 0) + Fraction(c)
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def monomial(cls, eps: int = 0, delta: int = 0, d: int = 0, coeff=1) -> "GCElement":
        return cls({(eps, delta, d): coeff})

    @classmethod
    def alpha(cls):
        return cls.monomial(1, 0, 0)

    @classmethod
    def mu(cls):
        return cls.monomial(0, 1, 0)

    @classmethod
    def gamma(cls):
        return cls.monomial(0, 0, 1)

    @classmethod
    def one(cls):
        return cls.monomial()

    @property
    def terms(self) -> Dict[GCMonomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return GCElement(out)

    def __neg__(self):
        return GCElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GCElement({m: c * other for m, c in self._terms.items()})
        out: Dict[GCMonomial, Fraction] = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                s, m = _mono_mul(a, b)
                if s:
                    out[m] = out.get(m, 0) + s * x * y
        return GCElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = GCElement.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, GCElement) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in sorted(self._terms.items(), key=lambda mc: (gc_degree(mc[0]), mc[0])):
            body = format_gc_monomial(mono)
            mag = abs(c)
            if mag != 1:
                body = format_scalar(mag) if body == "1" else f"{format_scalar(mag)}*{body}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"GCElement({self})"


def ideal_p(n: int) -> int:
    return (n + 1) // 2


def gc_reduce(x: GCElement, n: int, p: int | None = None) -> GCElement:
    """Canonical representative of ``x`` modulo the ideal for rank ``n``.

    Always ``gamma^p -> 0``.  For odd ``n`` also
    ``alpha gamma^(p-1) -> (p-1) mu gamma^(p-1)``; multiplying that relation
    on the left by mu gives ``alpha mu gamma^(p-1) = 0`` since ``mu^2 = 0``.
    ``p`` may be overridden (negative controls).
    """
    if n < 2:
        raise DomainError("n >= 2 required")
    if p is None:
        p = ideal_p(n)
    out: Dict[GCMonomial, Fraction] = {}
    for (eps, delta, d), c in x.items():
        if d >= p:
            continue
        if n % 2 == 1 and d == p - 1 and eps:
            if delta:
                continue
            key = (0, 1, d)
            out[key] = out.get(key, 0) + c * (p - 1)
            continue
        out[(eps, delta, d)] = out.get((eps, delta, d), 0) + c
    return GCElement(out)


def quotient_basis(n: int, p: int | None = None) -> List[GCMonomial]:
    """Monomials left unchanged by :func:`gc_reduce`, ordered by degree."""
    if p is None:
        p = ideal_p(n)
    out = []
    for d in range(p):
        for eps in (0, 1):
            for delta in (0, 1):
                mono = (eps, delta, d)
                if gc_reduce(GCElement.monomial(*mono), n, p) == GCElement.monomial(*mono):
                    out.append(mono)
    return sorted(out, key=lambda m: (gc_degree(m), m))


def quotient_hilbert(n: int, p: int | None = None) -> List[int]:
    basis = quotient_basis(n, p)
    top = max(gc_degree(m) for m in basis)
    dims = [0] * (top + 1)
    for m in basis:
        dims[gc_degree(m)] += 1
    return dims
