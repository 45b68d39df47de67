"""Ideal-quotient oracle for the straightening normal forms.

Builds the degree-d part of the defining ideal directly from the presentations
(every ordered triple of distinct labels), as a span of vectors over all
degree-d monomials, and reads normal forms off its reduced row basis.  Nothing
here touches the rewrite code in :mod:`braidinv.element`.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Tuple

from .arrangement import Edge, Handful, hyperplanes, is_nbc
from .linalg import SparseMatrix, row_space_basis


def _sort_sign(word: List[Edge], graded: bool) -> Tuple[int, Handful]:
    """Sign and sorted monomial of a word of canonical edges (sign 0 if a square)."""
    if len(set(word)) != len(word):
        return 0, ()
    sign = 1
    if graded:
        inversions = sum(1 for a, b in itertools.combinations(word, 2) if a > b)
        sign = -1 if inversions % 2 else 1
    return sign, tuple(sorted(word))


def _gen(a: int, b: int, graded: bool) -> Tuple[Edge, int]:
    if a < b:
        return (a, b), 1
    return (b, a), (1 if graded else -1)


def _relations(n: int, graded: bool) -> List[List[Tuple[int, List[Edge]]]]:
    """Quadratic relations as lists of ``(coeff, word)``."""
    rels = []
    for i, j, k in itertools.permutations(range(1, n + 2), 3):
        if graded:
            # e_ik e_jk - e_ij e_jk + e_ij e_ik
            raw = [(1, [(i, k), (j, k)]), (-1, [(i, j), (j, k)]), (1, [(i, j), (i, k)])]
        else:
            # x_ij x_jk + x_jk x_ki + x_ki x_ij
            raw = [(1, [(i, j), (j, k)]), (1, [(j, k), (k, i)]), (1, [(k, i), (i, j)])]
        rel = []
        for c, word in raw:
            edges = []
            for a, b in word:
                e, s = _gen(a, b, graded)
                edges.append(e)
                c *= s
            rel.append((c, edges))
        rels.append(rel)
    return rels


def quotient_normal_forms(ring: str, n: int, d: int):
    """Normal forms of all degree-d monomials, computed from the ideal.

    Returns ``(normal_forms, quotient_dim)`` where ``normal_forms`` maps each
    lex-sorted monomial to ``{nbc_monomial: coefficient}``, or ``None`` when
    the NBC monomials fail to be a basis of the quotient in this degree.
    """
    graded = ring.upper() == "OS"
    gens = hyperplanes(n)
    monos = [tuple(m) for m in itertools.combinations(gens, d)]
    # NBC monomials get the low indices so pivots (largest column) avoid them
    nbc = [m for m in monos if is_nbc(m)]
    other = [m for m in monos if not is_nbc(m)]
    order = nbc + other
    index = {m: i for i, m in enumerate(order)}
    rows: List[Dict[int, int]] = []
    if d >= 2:
        for rel in _relations(n, graded):
            for tail in itertools.combinations(gens, d - 2):
                row: Dict[int, int] = {}
                for c, word in rel:
                    s, mono = _sort_sign(list(word) + list(tail), graded)
                    if s:
                        col = index[mono]
                        row[col] = row.get(col, 0) + c * s
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    reduced = row_space_basis(SparseMatrix.from_rows(rows, len(order))) if rows else {}
    quotient_dim = len(order) - len(reduced)
    if any(p < len(nbc) for p in reduced) or quotient_dim != len(nbc):
        return None, quotient_dim
    forms: Dict[Handful, Dict[Handful, Fraction]] = {}
    for m in nbc:
        forms[m] = {m: Fraction(1)}
    for m in other:
        row = reduced[index[m]]
        forms[m] = {order[c]: -v for c, v in row.items() if c != index[m]}
    return forms, quotient_dim
