"""Symmetric functions in the complete homogeneous basis.

Enough calculus for trivial-isotypic counts: products ``h_lambda``, the Hall
inner product ``<h_lambda, h_mu>`` (contingency tables with the given margins),
the single-row Pieri rule, and monomial expansions of Schur and ``h``
polynomials used as an oracle for the first two.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .arrangement import DomainError
from .linalg import format_scalar, parse_scalar

Partition = Tuple[int, ...]
Poly = Dict[Tuple[int, ...], int]


def partition(parts: Iterable[int]) -> Partition:
    """Normalise to a weakly decreasing tuple of positive parts."""
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise DomainError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return partition(int(t) for t in text.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


@lru_cache(maxsize=None)
def _tables(rows: Partition, cols: Tuple[int, ...]) -> int:
    if not rows:
        return 1 if not any(cols) else 0
    first, rest = rows[0], rows[1:]
    remaining = sum(rest)
    total = 0
    # distribute the first row across the columns; the rest must still fit
    def fill(k: int, left: int, acc: List[int]):
        nonlocal total
        if k == len(cols):
            if left == 0:
                new_cols = tuple(sorted((c - a for c, a in zip(cols, acc)), reverse=True))
                total += _tables(rest, new_cols)
            return
        tail_cap = sum(cols[k + 1:])
        lo = max(0, left - tail_cap, cols[k] - remaining)
        for a in range(lo, min(cols[k], left) + 1):
            acc.append(a)
            fill(k + 1, left - a, acc)
            acc.pop()

    fill(0, first, [])
    return total


def h_inner(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``<h_lam, h_mu>``: nonnegative integer matrices with row sums lam, column sums mu."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        return 0
    return _tables(lam, mu)


def pieri_single_row(l1: int, k: int) -> List[Partition]:
    """Shapes in ``h_l1 * h_k``: two rows, first row at least max(l1, k)."""
    if l1 < 1 or k < 1:
        raise DomainError("pieri_single_row needs l1, k >= 1")
    return [partition((l1 + k - r2, r2)) for r2 in range(0, min(l1, k) + 1)]


# --- polynomial oracle -------------------------------------------------------

def _poly_mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for a, x in f.items():
        for b, y in g.items():
            e = tuple(i + j for i, j in zip(a, b))
            out[e] = out.get(e, 0) + x * y
    return {e: c for e, c in out.items() if c}


def _poly_add(f: Poly, g: Poly) -> Poly:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def h_poly(lam: Sequence[int], nvars: int) -> Poly:
    """``h_lam(x_1, ..., x_nvars)`` as ``{exponent_vector: coefficient}``."""
    result: Poly = {(0,) * nvars: 1}
    for part in partition(lam):
        hk: Poly = {}
        for combo in itertools.combinations_with_replacement(range(nvars), part):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            hk[tuple(e)] = hk.get(tuple(e), 0) + 1
        result = _poly_mul(result, hk)
    return result


def _ssyt(shape: Partition, nvars: int):
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: Dict[Tuple[int, int], int] = {}

    def place(idx: int):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvars + 1):
            filling[(r, c)] = v
            yield from place(idx + 1)
        filling.pop((r, c), None)

    yield from place(0)


def schur_poly(lam: Sequence[int], nvars: int) -> Poly:
    """Sum of ``x^wt(T)`` over semistandard tableaux of shape lam with entries <= nvars."""
    out: Poly = {}
    for t in _ssyt(partition(lam), nvars):
        e = [0] * nvars
        for v in t.values():
            e[v - 1] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + 1
    return out


def schur_sum(shapes: Iterable[Sequence[int]], nvars: int) -> Poly:
    total: Poly = {}
    for s in shapes:
        total = _poly_add(total, schur_poly(s, nvars))
    return total


# --- h-sums -------------------------------------------------------------------

_HTERM = re.compile(r"^(?:(\d+(?:/\d+)?)\s*\*\s*)?h\[([\d,\s]*)\]$")


class HSum:
    """Rational combination of products ``h_lambda``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], object] = ()):
        clean: Dict[Partition, Fraction] = {}
        for lam, c in dict(terms).items():
            lam = partition(lam)
            clean[lam] = clean.get(lam, 0) + Fraction(c)
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def h(cls, *parts: int) -> "HSum":
        return cls({tuple(parts): 1})

    @property
    def terms(self) -> Dict[Partition, Fraction]:
        return dict(self._terms)

    def __add__(self, other: "HSum") -> "HSum":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return HSum(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HSum({k: v * other for k, v in self._terms.items()})
        out: Dict[Partition, Fraction] = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                lam = partition(a + b)
                out[lam] = out.get(lam, 0) + x * y
        return HSum(out)

    __rmul__ = __mul__

    def inner(self, other: "HSum") -> Fraction:
        return sum((x * y * h_inner(a, b) for a, x in self._terms.items()
                    for b, y in other._terms.items()), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, HSum) and self._terms == other._terms

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for lam, c in sorted(self._terms.items(), reverse=True):
            body = f"h[{format_partition(lam)}]"
            mag = abs(c)
            if mag != 1:
                body = f"{format_scalar(mag)}*{body}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"HSum({self})"

    @classmethod
    def parse(cls, text: str) -> "HSum":
        text = text.strip()
        if text == "0":
            return cls()
        total = cls()
        for sign, term in _split_terms(text):
            m = _HTERM.match(term)
            if m is None:
                raise DomainError(f"malformed h-term {term!r}")
            coeff = parse_scalar(m.group(1)) if m.group(1) else Fraction(1)
            total = total + cls({parse_partition(m.group(2)): sign * coeff})
        return total


def _split_terms(text: str):
    tokens = re.split(r"\s*([+\-−])\s*", text)
    if tokens[0] == "":
        tokens = tokens[1:]
    else:
        tokens = ["+"] + tokens
    for op, term in zip(tokens[0::2], tokens[1::2]):
        yield (-1 if op in "-−" else 1), term


def frobenius_characteristic(ring: str, n: int) -> HSum:
    """``2 h_2 h_1^(n-1)`` for OS_n, ``h_1^(n+1)`` for VG_n."""
    ring = ring.upper()
    if ring == "OS":
        return HSum({(2,) + (1,) * (n - 1): 2})
    if ring == "VG":
        return HSum({(1,) * (n + 1): 1})
    raise DomainError(f"unknown ring {ring!r}")


def predicted_invariant_dims(ring: str, n: int, full: bool = False) -> int:
    """Total invariant dimension ``<Frob, h_n h_1>`` (or ``<Frob, h_{n+1}>`` when full)."""
    if n < 2:
        raise DomainError("n >= 2 required")
    target = HSum.h(n + 1) if full else HSum.h(n, 1)
    value = frobenius_characteristic(ring, n).inner(target)
    assert value.denominator == 1
    return int(value)
