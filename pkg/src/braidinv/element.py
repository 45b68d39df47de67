"""Sparse elements of OS_n and VG_n stored on the NBC basis.

Both rings share one rewrite skeleton.  A product of generators is built by
right-multiplying an NBC monomial by one generator at a time.  When the new
finger lands on an occupied hand ``k``, the pair ``(i,k), (j,k)`` with
``i < j < k`` is rewritten as ``(i,j)(j,k) - (i,j)(i,k)`` and the displaced
finger ``(i,j)`` is inserted further down; wrists only ever decrease, so the
cascade terminates.

In OS (``graded=True``) reordering generators costs the sign of the
permutation; in VG it is free.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .arrangement import DomainError, Edge, Handful, Permutation, canonical_edge, format_handful, is_nbc, parse_factors
from .linalg import format_scalar, parse_scalar

Terms = Dict[Handful, Fraction]


@lru_cache(maxsize=1 << 20)
def _insert(mono: Handful, edge: Edge, graded: bool) -> Tuple[Tuple[Handful, int], ...]:
    """NBC expansion of ``mono * gen(edge)``; ``mono`` NBC, ``edge`` canonical."""
    i, k = edge
    pos = None
    for idx, (a, b) in enumerate(mono):
        if b == k:
            pos = idx
            break
    if pos is None:
        # hand k is free: slide the new factor into lex position
        place = len(mono)
        for idx, e in enumerate(mono):
            if e > edge:
                place = idx
                break
        sign = -1 if graded and (len(mono) - place) % 2 else 1
        return ((mono[:place] + (edge,) + mono[place:], sign),)
    j = mono[pos][0]
    if j == i:
        return ()
    rest = mono[:pos] + mono[pos + 1:]
    # mono = sign * rest * gen(j,k)
    sign = -1 if graded and (len(mono) - 1 - pos) % 2 else 1
    lo, hi = (i, j) if i < j else (j, i)
    if graded and j != lo:
        sign = -sign
    # gen(lo,k) gen(hi,k) = gen(lo,hi) gen(hi,k) - gen(lo,hi) gen(lo,k)
    out: Dict[Handful, int] = {}
    for m, c in _insert(rest, (lo, hi), graded):
        for last, s in (((hi, k), 1), ((lo, k), -1)):
            for m2, c2 in _insert(m, last, graded):
                out[m2] = out.get(m2, 0) + sign * s * c * c2
    return tuple((m, c) for m, c in out.items() if c)


def _expand_word(word: Sequence[Tuple[Edge, int]], graded: bool) -> Dict[Handful, int]:
    """Product of signed canonical generators, in order, on the NBC basis."""
    acc: Dict[Handful, int] = {(): 1}
    for edge, s in word:
        nxt: Dict[Handful, int] = {}
        for m, c in acc.items():
            for m2, c2 in _insert(m, edge, graded):
                nxt[m2] = nxt.get(m2, 0) + s * c * c2
        acc = {m: c for m, c in nxt.items() if c}
        if not acc:
            break
    return acc


def _norm(c):
    """Integral rationals are kept as ints, which is much faster."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _by_degree(terms):
    out: Dict[int, Dict[Handful, object]] = {}
    for m, c in terms.items():
        out.setdefault(len(m), {})[m] = c
    return out


def _times_gen(terms: Mapping[Handful, object], edge: Edge, graded: bool) -> Dict[Handful, object]:
    out: Dict[Handful, object] = {}
    for m, c in terms.items():
        for m2, c2 in _insert(m, edge, graded):
            out[m2] = out.get(m2, 0) + c * c2
    return {m: c for m, c in out.items() if c}


def _times(terms: Mapping[Handful, object], right, graded: bool) -> Dict[Handful, object]:
    """``terms * sum(c * mono)``, sharing work across common prefixes of ``right``."""
    out: Dict[Handful, object] = {}
    groups: Dict[Edge, list] = {}
    for mono, c in right:
        if not mono:
            for m, v in terms.items():
                out[m] = out.get(m, 0) + c * v
        else:
            groups.setdefault(mono[0], []).append((mono[1:], c))
    for edge, tails in groups.items():
        step = _times_gen(terms, edge, graded)
        if not step:
            continue
        for m, v in _times(step, tails, graded).items():
            out[m] = out.get(m, 0) + v
    return {m: c for m, c in out.items() if c}


_TERM_SPLIT = re.compile(r"\s*([+\-−])\s*")


class AlgElement:
    """Sparse linear combination of NBC monomials; immutable.

    Subclasses fix the ring: :class:`~braidinv.os_algebra.OSElement` and
    :class:`~braidinv.vg_ring.VGElement`.
    """

    ring = ""
    letter = ""
    graded = True

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Handful, object] = (), *, check: bool = True):
        if n < 1:
            raise DomainError(f"invalid rank n={n}")
        clean: Terms = {}
        for mono, c in dict(terms).items():
            c = _norm(c)
            if not c:
                continue
            if check:
                mono = tuple(mono)
                if list(mono) != sorted(set(mono)) or not is_nbc(mono):
                    raise DomainError(f"key {mono} is not a sorted NBC monomial")
                for i, j in mono:
                    canonical_edge(i, j, n)
                    if i > j:
                        raise DomainError(f"edge ({i},{j}) not canonical")
            clean[mono] = clean.get(mono, 0) + c
        self.n = n
        self._terms = {m: _norm(c) for m, c in clean.items() if c}

    # -- construction --------------------------------------------------------
    @classmethod
    def zero(cls, n: int):
        return cls(n, {})

    @classmethod
    def one(cls, n: int):
        return cls(n, {(): 1})

    @classmethod
    def _canonical_generator(cls, i: int, j: int, n: int) -> Tuple[Edge, int]:
        raise NotImplementedError

    @classmethod
    def straighten(cls, n: int, edges: Iterable[Sequence[int]], coeff=1):
        """NBC expansion of the product of generators ``gen(i,j)`` in the given order."""
        word = [cls._canonical_generator(i, j, n) for i, j in edges]
        terms = _expand_word(word, cls.graded)
        return cls(n, {m: coeff * c for m, c in terms.items()}, check=False)

    @classmethod
    def gen(cls, i: int, j: int, n: int):
        return cls.straighten(n, [(i, j)])

    # -- structure -----------------------------------------------------------
    @property
    def terms(self) -> Terms:
        return {m: Fraction(c) for m, c in self._terms.items()}

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Handful) -> Fraction:
        return Fraction(self._terms.get(tuple(mono), 0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_homogeneous(self) -> bool:
        return len({len(m) for m in self._terms}) <= 1

    @property
    def degree(self):
        """Common degree of all terms; ``None`` for zero."""
        degs = {len(m) for m in self._terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise DomainError("degree of an inhomogeneous element")
        return degs.pop()

    def homogeneous_part(self, d: int):
        return type(self)(self.n, {m: c for m, c in self._terms.items() if len(m) == d}, check=False)

    # -- arithmetic ----------------------------------------------------------
    def _same_ring(self, other):
        if type(other) is not type(self):
            raise DomainError(f"cannot combine {self.ring} with {getattr(other, 'ring', type(other).__name__)}")
        if other.n != self.n:
            raise DomainError(f"rank mismatch: n={self.n} vs n={other.n}")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self)(self.n, {(): other}, check=False)
        self._same_ring(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return type(self)(self.n, out, check=False)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.n, {m: -c for m, c in self._terms.items()}, check=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, k):
        k = _norm(k)
        return type(self)(self.n, {m: k * c for m, c in self._terms.items()}, check=False)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._same_ring(other)
        out: Dict[Handful, object] = {}
        for d, left in _by_degree(self._terms).items():
            for e, right in _by_degree(other._terms).items():
                # the trie walk is cheap when the right factor is small, and
                # graded commutativity lets us pick the order
                if len(right) * e > len(left) * d:
                    part = _times(right, list(left.items()), self.graded)
                    if self.graded and d * e % 2:
                        part = {m: -c for m, c in part.items()}
                else:
                    part = _times(left, list(right.items()), self.graded)
                for m, c in part.items():
                    out[m] = out.get(m, 0) + c
        return type(self)(self.n, out, check=False)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        result = type(self).one(self.n)
        for _ in range(k):
            if not result:
                break
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self)(self.n, {(): other}, check=False)
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, self.n, frozenset(self._terms.items())))

    # -- symmetric group -----------------------------------------------------
    def act(self, p: Permutation):
        """Image under a permutation of ``{1, ..., n+1}``; a ring automorphism."""
        if p.size != self.n + 1:
            raise DomainError(f"permutation of {p.size} points acting on rank {self.n}")
        out: Dict[Handful, Fraction] = {}
        for mono, c in self._terms.items():
            for m, s in _act_mono(mono, p.images, self.graded):
                out[m] = out.get(m, 0) + s * c
        return type(self)(self.n, out, check=False)

    # -- vectors -------------------------------------------------------------
    def to_vector(self, index: Mapping[Handful, int]) -> Dict[int, Fraction]:
        return {index[m]: c for m, c in self._terms.items()}

    @classmethod
    def from_vector(cls, n: int, vec: Mapping[int, object], basis: Sequence[Handful]):
        return cls(n, {basis[i]: c for i, c in vec.items()}, check=False)

    # -- text ----------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: (len(mc[0]), mc[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for idx, (mono, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = format_scalar(mag)
            else:
                body = format_handful(mono, self.letter)
                if mag != 1:
                    body = f"{format_scalar(mag)}*{body}"
            if idx == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, {self})"

    @classmethod
    def parse(cls, n: int, text: str):
        """Parse the text form; monomials need not be NBC and are straightened."""
        text = text.strip()
        if not text:
            raise DomainError("empty element text")
        tokens = _TERM_SPLIT.split(text)
        # tokens: [first, op, term, op, term, ...]
        chunks = []
        sign = 1
        if tokens[0] == "":
            tokens = tokens[1:]
        else:
            tokens = ["+"] + tokens
        for op, term in zip(tokens[0::2], tokens[1::2]):
            sign = -1 if op in "-−" else 1
            if not term:
                raise DomainError(f"malformed element {text!r}")
            chunks.append((sign, term))
        total = cls.zero(n)
        for sign, term in chunks:
            coeff, mono = _split_coefficient(term)
            if mono is None:
                total = total + cls.one(n).scale(sign * coeff)
            else:
                total = total + cls.straighten(n, parse_factors(mono, cls.letter), sign * coeff)
        return total


def _split_coefficient(term: str):
    term = term.strip()
    m = re.match(r"^(\d+(?:/\d+)?)\s*\*?\s*(.*)$", term)
    if m:
        coeff = parse_scalar(m.group(1))
        rest = m.group(2).strip()
        if not rest:
            return coeff, None
        if rest == "1":
            return coeff, None
        return coeff, rest
    return Fraction(1), term


@lru_cache(maxsize=1 << 20)
def _act_mono(mono: Handful, images: Tuple[int, ...], graded: bool) -> Tuple[Tuple[Handful, int], ...]:
    word = []
    sign = 1
    for i, j in mono:
        a, b = images[i - 1], images[j - 1]
        if a > b:
            a, b = b, a
            if not graded:
                sign = -sign
        word.append(((a, b), 1))
    terms = _expand_word(word, graded)
    return tuple((m, sign * c) for m, c in terms.items())


def clear_caches() -> None:
    _insert.cache_clear()
    _act_mono.cache_clear()
