"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` values.  Matrices are sparse maps
``(row, col) -> Fraction``.  Elimination runs over the integers (rows are
cleared of denominators and kept primitive), so coefficients never pick up
the denominators that plain rational pivoting accumulates.

Kernel bases are returned in reduced echelon form: each vector has leading
coordinate 1 and every other basis vector vanishes at that coordinate.  That
form is unique, so the sparse and dense paths return identical results.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

Scalar = Fraction
SparseVector = Dict[int, Fraction]

DENSE_CUTOFF = 256  # dense path only below this width, and only for >= 25% fill

_SCALAR_RE = re.compile(r"^\s*([-−]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"3"``, ``"-3/2"`` or ``"−3/2"`` into a Fraction."""
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational number: {text!r}")
    sign, num, den = m.groups()
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign else value


def format_scalar(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class SparseMatrix:
    """Immutable sparse matrix over the rationals."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[Tuple[int, int], object] = ()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        clean = {}
        for (r, c), v in dict(entries).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
            v = Fraction(v)
            if v:
                clean[(r, c)] = v
        self.rows = rows
        self.cols = cols
        self._entries = clean

    @classmethod
    def from_dense(cls, data) -> "SparseMatrix":
        data = [list(row) for row in data]
        cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise ValueError("ragged rows")
        return cls(len(data), cols,
                   {(r, c): v for r, row in enumerate(data) for c, v in enumerate(row)})

    @classmethod
    def from_rows(cls, rows: Iterable[Mapping[int, object]], cols: int) -> "SparseMatrix":
        entries = {}
        nrows = 0
        for r, row in enumerate(rows):
            nrows = r + 1
            for c, v in row.items():
                entries[(r, c)] = v
        return cls(nrows, cols, entries)

    @property
    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._entries)

    def __getitem__(self, key) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def nnz(self) -> int:
        return len(self._entries)

    def row_dicts(self) -> List[SparseVector]:
        out: List[SparseVector] = [{} for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def apply(self, vec: Mapping[int, object]) -> SparseVector:
        """Matrix-vector product with a sparse vector."""
        out: SparseVector = {}
        for (r, c), v in self._entries.items():
            x = vec.get(c)
            if x:
                out[r] = out.get(r, 0) + v * x
        return {r: v for r, v in out.items() if v}

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


def _integral_row(row: Mapping[int, Fraction]) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row."""
    if not row:
        return {}
    den = 1
    for v in row.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = {c: int(v * den) for c, v in row.items()}
    return _primitive(ints)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _echelon_sparse(rows: Iterable[Mapping[int, Fraction]]) -> Dict[int, Dict[int, int]]:
    """Fully reduced integer echelon form, keyed by pivot column.

    Each row's pivot is its largest column; pivot columns occur in no other
    row.  Rows are fed in order and reduced against the current pivots.
    """
    pivots: Dict[int, Dict[int, int]] = {}
    # occupancy: non-pivot column -> pivot columns whose row mentions it
    occ: Dict[int, set] = {}
    for raw in rows:
        row = _integral_row(raw)
        hits = [c for c in row if c in pivots]
        for p in hits:
            coef = row.get(p)
            if not coef:
                continue
            prow = pivots[p]
            pc = prow[p]
            g = math.gcd(pc, coef)
            a, b = pc // g, coef // g
            new = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                w = new.get(c, 0) - b * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            row = _primitive(new)
        if not row:
            continue
        piv = max(row)
        if row[piv] < 0:
            row = {c: -v for c, v in row.items()}
        # clear the new pivot column from older rows
        for q in list(occ.get(piv, ())):
            qrow = pivots[q]
            coef = qrow[piv]
            pc = row[piv]
            g = math.gcd(pc, coef)
            a, b = pc // g, coef // g
            new = {c: a * v for c, v in qrow.items()}
            for c, v in row.items():
                w = new.get(c, 0) - b * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            new = _primitive(new)
            for c in qrow:
                if c != q and c not in new:
                    occ[c].discard(q)
            for c in new:
                if c != q:
                    occ.setdefault(c, set()).add(q)
            pivots[q] = new
        occ.pop(piv, None)
        pivots[piv] = row
        for c in row:
            if c != piv:
                occ.setdefault(c, set()).add(piv)
    return pivots


def _echelon_dense(matrix: SparseMatrix) -> Dict[int, Dict[int, int]]:
    """Bareiss elimination on a dense copy, returning the same form as the sparse path."""
    cols = matrix.cols
    # reversed column order: leftmost pivot there is the largest original column
    work = []
    for row in matrix.row_dicts():
        irow = _integral_row(row)
        if irow:
            dense = [0] * cols
            for c, v in irow.items():
                dense[cols - 1 - c] = v
            work.append(dense)
    nrows = len(work)
    prev = 1
    r = 0
    pivcols = []
    for c in range(cols):
        if r >= nrows:
            break
        sel = next((i for i in range(r, nrows) if work[i][c]), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        piv = work[r]
        for i in range(r + 1, nrows):
            row = work[i]
            f = row[c]
            pc = piv[c]
            for j in range(c, cols):
                row[j] = (pc * row[j] - f * piv[j]) // prev
        prev = piv[c]
        pivcols.append(c)
        r += 1
    # back substitution over the integers
    echelon = work[:r]
    for k in range(r - 1, -1, -1):
        ck = pivcols[k]
        for i in range(k):
            f = echelon[i][ck]
            if f:
                pk = echelon[k][ck]
                g = math.gcd(pk, f)
                a, b = pk // g, f // g
                new = [a * x - b * y for x, y in zip(echelon[i], echelon[k])]
                g = math.gcd(*new)
                echelon[i] = [x // g for x in new] if g > 1 else new
    out: Dict[int, Dict[int, int]] = {}
    for k in range(r):
        row = {cols - 1 - j: v for j, v in enumerate(echelon[k]) if v}
        row = _primitive(row)
        piv = cols - 1 - pivcols[k]
        if row[piv] < 0:
            row = {c: -v for c, v in row.items()}
        out[piv] = row
    return out


def _echelon(matrix: SparseMatrix, method: str) -> Dict[int, Dict[int, int]]:
    if method == "auto":
        small = matrix.cols < DENSE_CUTOFF
        dense_enough = matrix.nnz() * 4 >= matrix.rows * matrix.cols
        method = "dense" if small and dense_enough else "sparse"
    if method == "dense":
        return _echelon_dense(matrix)
    if method == "sparse":
        rows = matrix.row_dicts()
        return _echelon_sparse(r for r in rows if r)
    raise ValueError(f"unknown elimination method {method!r}")


def rank(matrix: SparseMatrix, method: str = "auto") -> int:
    """Rank over the rationals."""
    return len(_echelon(matrix, method))


def row_space_basis(matrix: SparseMatrix, method: str = "auto") -> Dict[int, SparseVector]:
    """Reduced row basis keyed by pivot column (the largest column of each row).

    Pivot entries are normalised to 1 and pivot columns vanish in all other rows.
    """
    ech = _echelon(matrix, method)
    return {p: {c: Fraction(v, row[p]) for c, v in row.items()} for p, row in ech.items()}


def nullspace_basis(matrix: SparseMatrix, method: str = "auto") -> List[SparseVector]:
    """Basis of ``{v : M v = 0}`` in reduced echelon form, ordered by leading column."""
    ech = _echelon(matrix, method)
    free_cols = [c for c in range(matrix.cols) if c not in ech]
    contributions: Dict[int, SparseVector] = {f: {f: Fraction(1)} for f in free_cols}
    for p, row in ech.items():
        pc = row[p]
        for c, v in row.items():
            if c != p:
                contributions[c][p] = Fraction(-v, pc)
    return [contributions[f] for f in free_cols]


def in_span(vectors: List[Mapping[int, object]], target: Mapping[int, object]) -> bool:
    """Whether ``target`` lies in the rational span of ``vectors``."""
    if not target:
        return True
    cols = 1 + max(max(v, default=-1) for v in [*vectors, target])
    base = rank(SparseMatrix.from_rows(vectors, cols)) if vectors else 0
    return rank(SparseMatrix.from_rows([*vectors, target], cols)) == base
