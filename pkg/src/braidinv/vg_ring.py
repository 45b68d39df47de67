"""The Varchenko-Gel'fand ring VG_n via Cohen's presentation.

Generators ``x_ij`` with ``x_ji = -x_ij``, ``x_ij^2 = 0`` and the three-term
relation.  Substituting the antisymmetry into that relation for ``i < j < k``
gives the rewrite ``x_ik x_jk = x_ij x_jk - x_ij x_ik`` used for straightening.
"""
from __future__ import annotations

from typing import Sequence, Tuple

from .arrangement import DomainError, Edge, Permutation, canonical_edge
from .element import AlgElement


class VGElement(AlgElement):
    """Element of VG_n (commutative)."""

    ring = "VG"
    letter = "x"
    graded = False
    __slots__ = ()

    @classmethod
    def _canonical_generator(cls, i: int, j: int, n: int) -> Tuple[Edge, int]:
        return canonical_edge(i, j, n), (1 if i < j else -1)


def vg_straighten(n: int, edges: Sequence[Sequence[int]]) -> VGElement:
    return VGElement.straighten(n, edges)


def vg_multiply(x: VGElement, y: VGElement) -> VGElement:
    return x * y


def vg_act(p: Permutation, x: VGElement) -> VGElement:
    return x.act(p)


def elem_z(n: int, fix: str = "last") -> VGElement:
    """Degree-one invariant generator.

    With ``fix="last"`` (S_n fixes n+1) this is the sum of ``x_{i,n+1}``;
    with ``fix="first"`` (S_n fixes 1) it is the sum of ``x_{1,i}``.
    """
    if n < 1:
        raise DomainError(f"invalid rank n={n}")
    if fix == "last":
        return VGElement(n, {((i, n + 1),): 1 for i in range(1, n + 1)})
    if fix == "first":
        return VGElement(n, {((1, i),): 1 for i in range(2, n + 2)})
    raise DomainError(f"unknown convention {fix!r}")
