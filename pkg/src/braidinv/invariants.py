"""Symmetric-group invariants of OS_n and VG_n.

Three independent routes to the invariant subspace of a graded piece:

* :func:`invariant_subspace` -- kernel of the stacked ``(s - id)`` matrices
  for the adjacent transpositions generating the group (the working method);
* :func:`reynolds` / :func:`reynolds_rank` -- group averaging (oracle only,
  cost grows like n!);
* :func:`character_dim` -- averaging traces over conjugacy classes.

``fix`` selects the acting group: ``"last"`` is S_n fixing n+1 (default),
``"first"`` is S_n fixing 1, ``"none"`` is all of S_{n+1}.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence

from .arrangement import (DomainError, Handful, Permutation, adjacent_transpositions, class_representative,
                          class_size, group_elements, moved_points, nbc_count, nbc_monomials, partitions,
                          set_partition)
from .element import AlgElement, _act_mono
from .linalg import SparseMatrix, nullspace_basis, rank
from .os_algebra import OSElement
from .vg_ring import VGElement

RINGS = {"OS": OSElement, "VG": VGElement}


def element_class(ring: str):
    try:
        return RINGS[ring.upper()]
    except KeyError:
        raise DomainError(f"unknown ring {ring!r}; expected OS or VG") from None


@dataclass(frozen=True)
class HilbertPolynomial:
    coefficients: tuple

    def __init__(self, coefficients: Sequence[int]):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if any(c < 0 for c in coeffs):
            raise ValueError("Hilbert coefficients must be nonnegative")
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def as_list(self) -> List[int]:
        return list(self.coefficients)

    def total(self) -> int:
        return sum(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, (list, tuple)):
            return self == HilbertPolynomial(other)
        if isinstance(other, HilbertPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)


@dataclass
class InvariantBasis:
    ring: str
    n: int
    d: int
    vectors: List[AlgElement] = field(default_factory=list)
    fix: str = "last"

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, x: AlgElement) -> bool:
        """Whether ``x`` (homogeneous of degree d, or zero) lies in the span."""
        if not x:
            return True
        if x.degree != self.d:
            return False
        index = {m: i for i, m in enumerate(nbc_monomials(self.n, self.d))}
        vecs = [v.to_vector(index) for v in self.vectors]
        cols = len(index)
        base = len(vecs)
        return rank(SparseMatrix.from_rows(vecs + [x.to_vector(index)], cols)) == base

    def to_dict(self) -> dict:
        return {"ring": self.ring, "n": self.n, "degree": self.d, "fix": self.fix,
                "dimension": self.dim, "basis": [str(v) for v in self.vectors]}


def action_matrix(ring: str, n: int, d: int, p: Permutation) -> SparseMatrix:
    """Matrix of ``p`` on the degree-d NBC basis; column c is the image of basis vector c."""
    cls = element_class(ring)
    basis = nbc_monomials(n, d)
    index = {m: i for i, m in enumerate(basis)}
    entries = {}
    for c, mono in enumerate(basis):
        for m, s in _act_mono(mono, p.images, cls.graded):
            entries[(index[m], c)] = s
    return SparseMatrix(len(basis), len(basis), entries)


def _fixed_space_matrix(ring: str, n: int, d: int, fix: str) -> SparseMatrix:
    cls = element_class(ring)
    basis = nbc_monomials(n, d)
    index = {m: i for i, m in enumerate(basis)}
    size = len(basis)
    rows: List[Dict[int, int]] = []
    for s in adjacent_transpositions(n, fix):
        block: List[Dict[int, int]] = [{} for _ in range(size)]
        for c, mono in enumerate(basis):
            for m, v in _act_mono(mono, s.images, cls.graded):
                r = index[m]
                block[r][c] = block[r].get(c, 0) + v
            block[c][c] = block[c].get(c, 0) - 1
        for row in block:
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    return SparseMatrix.from_rows(rows, size)


def invariant_subspace(ring: str, n: int, d: int, fix: str = "last") -> InvariantBasis:
    """Basis of the invariants in degree d (reduced echelon in NBC coordinates)."""
    cls = element_class(ring)
    ring = cls.ring
    if d < 0 or d > n:
        return InvariantBasis(ring, n, d, [], fix)
    basis = nbc_monomials(n, d)
    if d == 0 or not adjacent_transpositions(n, fix):
        vecs = [{i: Fraction(1)} for i in range(len(basis))]
    else:
        vecs = nullspace_basis(_fixed_space_matrix(ring, n, d, fix))
    return InvariantBasis(ring, n, d, [cls.from_vector(n, v, basis) for v in vecs], fix)


def is_invariant(x: AlgElement, fix: str = "last") -> bool:
    return all(x.act(s) == x for s in adjacent_transpositions(x.n, fix))


def reynolds(x: AlgElement, fix: str = "last") -> AlgElement:
    """Average of the group orbit of ``x``."""
    total = type(x).zero(x.n)
    count = 0
    for p in group_elements(x.n, fix):
        total = total + x.act(p)
        count += 1
    return total.scale(Fraction(1, count))


def reynolds_rank(ring: str, n: int, d: int, fix: str = "last") -> int:
    """Rank of the averaging projection on degree d."""
    cls = element_class(ring)
    basis = nbc_monomials(n, d)
    if not basis:
        return 0
    index = {m: i for i, m in enumerate(basis)}
    perms = list(group_elements(n, fix))
    rows = []
    for mono in basis:
        acc: Dict[Handful, int] = {}
        for p in perms:
            for m, s in _act_mono(mono, p.images, cls.graded):
                acc[m] = acc.get(m, 0) + s
        rows.append({index[m]: c for m, c in acc.items() if c})
    return rank(SparseMatrix.from_rows(rows, len(basis)))


def trace(ring: str, n: int, d: int, p: Permutation) -> int:
    """Trace of ``p`` on the degree-d piece.

    Straightening keeps a monomial inside its flat, so only monomials whose
    flat is carried to itself can contribute a diagonal entry.
    """
    cls = element_class(ring)
    total = 0
    img = p.images
    for mono in nbc_monomials(n, d):
        moved = [(img[i - 1], img[j - 1]) for i, j in mono]
        if set_partition(moved, n) != set_partition(mono, n):
            continue
        for m, s in _act_mono(mono, img, cls.graded):
            if m == mono:
                total += s
    return total


def character_dim(ring: str, n: int, d: int, fix: str = "last") -> int:
    """Invariant dimension as the class-weighted average of traces."""
    element_class(ring)
    if d < 0 or d > n:
        return 0
    k = len(moved_points(n, fix))
    acc = 0
    for shape in partitions(k):
        acc += class_size(shape) * trace(ring, n, d, class_representative(shape, n, fix))
    dim, rem = divmod(acc, math.factorial(k))
    if rem:
        raise ArithmeticError(f"character average not integral for {ring} n={n} d={d}")
    return dim


def hilbert_series(ring: str, n: int) -> HilbertPolynomial:
    """Graded dimensions of the whole ring: ``e_d(1, ..., n)``."""
    element_class(ring)
    return HilbertPolynomial([nbc_count(n, d) for d in range(n + 1)])


def hilbert_invariants(ring: str, n: int, fix: str = "last", method: str = "kernel") -> HilbertPolynomial:
    if method == "kernel":
        dims = [invariant_subspace(ring, n, d, fix).dim for d in range(n + 1)]
    elif method == "character":
        dims = [character_dim(ring, n, d, fix) for d in range(n + 1)]
    elif method == "reynolds":
        dims = [reynolds_rank(ring, n, d, fix) for d in range(n + 1)]
    else:
        raise DomainError(f"unknown method {method!r}")
    return HilbertPolynomial(dims)


def hilbert_json(ring: str, n: int, poly: HilbertPolynomial, invariant: bool = True) -> str:
    key = "invariant_hilbert" if invariant else "hilbert"
    return json.dumps({"ring": element_class(ring).ring, "n": n, key: poly.as_list()})
