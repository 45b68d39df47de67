"""Combinatorics of the braid arrangement A_n.

Hyperplanes are edges ``(i, j)`` with ``1 <= i < j <= n+1``.  Hand ``H_k`` is
the set of edges whose larger endpoint (the wrist) is ``k``; a set of edges is
NBC exactly when it takes at most one finger from each hand.

Monomials are plain tuples of edges sorted lexicographically.
"""
from __future__ import annotations

import itertools
import math
import re
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple

Edge = Tuple[int, int]
Handful = Tuple[Edge, ...]


class DomainError(ValueError):
    """Input outside the domain of an operation."""


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"invalid rank n={n!r}; need n >= 1")


def canonical_edge(i: int, j: int, n: int | None = None) -> Edge:
    if i == j:
        raise DomainError(f"degenerate edge ({i},{j})")
    if n is not None and not (1 <= i <= n + 1 and 1 <= j <= n + 1):
        raise DomainError(f"edge ({i},{j}) has labels outside 1..{n + 1}")
    return (i, j) if i < j else (j, i)


def hyperplanes(n: int) -> List[Edge]:
    """All ``C(n+1, 2)`` edges of A_n in lex order."""
    _check_rank(n)
    return list(itertools.combinations(range(1, n + 2), 2))


def is_nbc(h: Iterable[Edge]) -> bool:
    """True iff no two edges share a wrist."""
    seen = 0
    for _, j in h:
        bit = 1 << j
        if seen & bit:
            return False
        seen |= bit
    return True


def minimal_broken_circuits(n: int) -> List[Handful]:
    """Pairs ``{(i,k), (j,k)}``, i<j<k: the triangle circuits minus ``(i,j)``."""
    if n < 2:
        raise DomainError("broken circuits need n >= 2")
    out = []
    for k in range(3, n + 2):
        for i, j in itertools.combinations(range(1, k), 2):
            out.append(((i, k), (j, k)))
    return sorted(out)


def contains_broken_circuit(h: Iterable[Edge], n: int) -> bool:
    s = set(h)
    return any(a in s and b in s for a, b in minimal_broken_circuits(n))


@lru_cache(maxsize=None)
def _suffix_esym(n: int) -> Tuple[Tuple[int, ...], ...]:
    """``table[s][r] = e_r(s-1, s, ..., n)``: weighted wrist subsets of {s..n+1}."""
    top = n + 1
    table = [[0] * (n + 2) for _ in range(top + 2)]
    table[top + 1][0] = 1
    for s in range(top, 1, -1):
        w = s - 1
        for r in range(n + 2):
            table[s][r] = table[s + 1][r] + (w * table[s + 1][r - 1] if r else 0)
    for s in (0, 1):
        table[s] = table[2][:]
    return tuple(tuple(row) for row in table)


def nbc_count(n: int, d: int) -> int:
    """``e_d(1, 2, ..., n)``."""
    _check_rank(n)
    if d < 0 or d > n:
        return 0
    return _suffix_esym(n)[2][d]


@lru_cache(maxsize=64)
def _nbc_list(n: int, d: int) -> Tuple[Handful, ...]:
    out = []
    for wrists in itertools.combinations(range(2, n + 2), d):
        for fingers in itertools.product(*(range(1, w) for w in wrists)):
            out.append(tuple(sorted(zip(fingers, wrists))))
    return tuple(out)


def nbc_monomials(n: int, d: int) -> List[Handful]:
    """All degree-``d`` NBC monomials.

    Ordered by the increasing wrist sequence, then by the fingers read in
    wrist order; each entry is the lex-sorted edge tuple.
    """
    _check_rank(n)
    if d < 0:
        raise DomainError("degree must be nonnegative")
    if d > n:
        return []
    return list(_nbc_list(n, d))


def _by_wrist(h: Handful) -> List[Edge]:
    return sorted(h, key=lambda e: e[1])


def rank_nbc(h: Sequence[Edge], n: int) -> int:
    """Position of ``h`` in ``nbc_monomials(n, len(h))``."""
    _check_rank(n)
    edges = [canonical_edge(i, j, n) for i, j in h]
    if not is_nbc(edges) or len(set(edges)) != len(edges):
        raise DomainError(f"not an NBC monomial: {format_handful(edges)}")
    d = len(edges)
    table = _suffix_esym(n)
    ordered = _by_wrist(tuple(edges))
    wrists = [e[1] for e in ordered]
    fingers = [e[0] for e in ordered]
    r = 0
    prev = 1
    prefix = 1  # finger choices for the wrists already fixed
    for t, w in enumerate(wrists):
        for v in range(prev + 1, w):
            r += prefix * (v - 1) * table[v + 1][d - t - 1]
        prev = w
        prefix *= w - 1
    radix = 1
    offset = 0
    for w, f in zip(reversed(wrists), reversed(fingers)):
        offset += (f - 1) * radix
        radix *= w - 1
    return r + offset


def unrank_nbc(n: int, d: int, index: int) -> Handful:
    """Inverse of :func:`rank_nbc`."""
    _check_rank(n)
    total = nbc_count(n, d)
    if not 0 <= index < total:
        raise DomainError(f"index {index} out of range for {total} monomials")
    table = _suffix_esym(n)
    wrists = []
    prev = 1
    prefix = 1
    rest = index
    for t in range(d):
        v = prev + 1
        while True:
            block = prefix * (v - 1) * table[v + 1][d - t - 1]
            if rest < block:
                break
            rest -= block
            v += 1
        wrists.append(v)
        prev = v
        prefix *= v - 1
    fingers = []
    for w in reversed(wrists):
        rest, digit = divmod(rest, w - 1)
        fingers.append(digit + 1)
    fingers.reverse()
    return tuple(sorted(zip(fingers, wrists)))


def set_partition(h: Iterable[Edge], n: int) -> Tuple[Tuple[int, ...], ...]:
    """Connected components of the edge set on vertices 1..n+1 (the flat it spans)."""
    parent = list(range(n + 2))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in h:
        a, b = find(i), find(j)
        if a != b:
            parent[max(a, b)] = min(a, b)
    blocks = {}
    for v in range(1, n + 2):
        blocks.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(b) for b in blocks.values()))


# --- text form ---------------------------------------------------------------

_FACTOR_RE = re.compile(r"([a-z])\[\s*(\d+)\s*,\s*(\d+)\s*\]")


def format_handful(h: Iterable[Edge], letter: str = "e") -> str:
    edges = sorted(h)
    if not edges:
        return "1"
    return "".join(f"{letter}[{i},{j}]" for i, j in edges)


def parse_factors(text: str, letters: str = "ex") -> List[Edge]:
    """Split ``"e[1,3]e[2,3]"`` into its edge factors, in written order, unsorted."""
    text = text.strip()
    if text in ("", "1"):
        return []
    pos = 0
    out = []
    for m in _FACTOR_RE.finditer(text):
        if m.start() != pos or m.group(1) not in letters:
            raise DomainError(f"malformed monomial {text!r}")
        out.append((int(m.group(2)), int(m.group(3))))
        pos = m.end()
    if pos != len(text):
        raise DomainError(f"malformed monomial {text!r}")
    return out


def parse_handful(text: str, letter: str = "e") -> Handful:
    edges = parse_factors(text, letter)
    canon = sorted(canonical_edge(i, j) for i, j in edges)
    if len(set(canon)) != len(canon):
        raise DomainError(f"repeated edge in handful {text!r}")
    return tuple(canon)


# --- permutations ------------------------------------------------------------

class Permutation:
    """A bijection of ``{1, ..., N}`` stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(range(1, size + 1))

    @classmethod
    def transposition(cls, size: int, i: int, j: int) -> "Permutation":
        img = list(range(1, size + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(img)

    @classmethod
    def from_cycles(cls, size: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(1, size + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(img)

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``(p * q)(i) = p(q(i))``."""
        if self.size != other.size:
            raise DomainError("permutations of different sizes")
        return Permutation(self.images[q - 1] for q in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, p in enumerate(self.images, 1):
            inv[p - 1] = i
        return Permutation(inv)

    def fixes(self, k: int) -> bool:
        return self(k) == k

    def cycle_type(self) -> Tuple[int, ...]:
        seen = set()
        lengths = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            length = 0
            x = start
            while x not in seen:
                seen.add(x)
                x = self(x)
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def moved_points(n: int, fix: str = "last") -> List[int]:
    """Labels permuted by S_n inside S_{n+1}.

    ``fix="last"`` is the stabiliser of ``n+1``; ``fix="first"`` the
    stabiliser of 1; ``fix="none"`` is all of S_{n+1}.
    """
    if fix == "last":
        return list(range(1, n + 1))
    if fix == "first":
        return list(range(2, n + 2))
    if fix == "none":
        return list(range(1, n + 2))
    raise DomainError(f"unknown convention {fix!r}")


def adjacent_transpositions(n: int, fix: str = "last") -> List[Permutation]:
    """Coxeter generators of the acting group on labels 1..n+1."""
    pts = moved_points(n, fix)
    return [Permutation.transposition(n + 1, a, b) for a, b in zip(pts, pts[1:])]


def group_elements(n: int, fix: str = "last") -> Iterator[Permutation]:
    pts = moved_points(n, fix)
    for perm in itertools.permutations(pts):
        img = list(range(1, n + 2))
        for a, b in zip(pts, perm):
            img[a - 1] = b
        yield Permutation(img)


def partitions(k: int, largest: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``k`` in reverse lex order."""
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def class_size(shape: Sequence[int]) -> int:
    """Number of permutations of cycle type ``shape`` in S_{|shape|}."""
    k = sum(shape)
    z = 1
    for part, mult in _multiplicities(shape):
        z *= part ** mult * math.factorial(mult)
    return math.factorial(k) // z


def _multiplicities(shape):
    counts = {}
    for part in shape:
        counts[part] = counts.get(part, 0) + 1
    return counts.items()


def class_representative(shape: Sequence[int], n: int, fix: str = "last") -> Permutation:
    """A permutation of the moved points with the given cycle type."""
    pts = moved_points(n, fix)
    if sum(shape) != len(pts):
        raise DomainError(f"cycle type {tuple(shape)} does not match {len(pts)} points")
    cycles = []
    pos = 0
    for part in shape:
        cycles.append(pts[pos:pos + part])
        pos += part
    return Permutation.from_cycles(n + 1, *cycles)
