"""The Orlik-Solomon algebra OS_n of the braid arrangement on its NBC basis."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .arrangement import DomainError, Edge, Handful, Permutation, canonical_edge
from .element import AlgElement


class OSElement(AlgElement):
    """Element of OS_n.  Generators satisfy ``e_ij = e_ji`` and anticommute."""

    ring = "OS"
    letter = "e"
    graded = True
    __slots__ = ()

    @classmethod
    def _canonical_generator(cls, i: int, j: int, n: int) -> Tuple[Edge, int]:
        return canonical_edge(i, j, n), 1

    def differential(self) -> "OSElement":
        """Alternating omit-one-factor map; NBC sets are closed under taking subsets."""
        out: Dict[Handful, Fraction] = {}
        for mono, c in self.items():
            for k in range(len(mono)):
                sub = mono[:k] + mono[k + 1:]
                out[sub] = out.get(sub, 0) + (c if k % 2 == 0 else -c)
        return OSElement(self.n, out, check=False)


def straighten(n: int, edges: Sequence[Sequence[int]]) -> OSElement:
    return OSElement.straighten(n, edges)


def multiply(x: OSElement, y: OSElement) -> OSElement:
    return x * y


def differential(x: OSElement) -> OSElement:
    return x.differential()


def act(p: Permutation, x: OSElement) -> OSElement:
    return x.act(p)


def power(x: OSElement, k: int) -> OSElement:
    return x ** k


def p_value(n: int) -> int:
    return (n + 1) // 2


def _need(n: int) -> None:
    if n < 2:
        raise DomainError(f"named invariants need n >= 2, got {n}")


def elem_a(n: int) -> OSElement:
    """Sum of ``e_ij`` over ``i < j <= n``."""
    _need(n)
    return OSElement(n, {((i, j),): 1 for i in range(1, n + 1) for j in range(i + 1, n + 1)})


def elem_m(n: int) -> OSElement:
    """Sum of ``e_{i,n+1}`` over ``i <= n``."""
    _need(n)
    return OSElement(n, {((i, n + 1),): 1 for i in range(1, n + 1)})


def elem_c(n: int) -> OSElement:
    _need(n)
    terms: Dict[Handful, int] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in (i, j):
                mono = tuple(sorted([(i, j), (k, n + 1)]))
                terms[mono] = terms.get(mono, 0) + 1
    return OSElement(n, terms)


def elem_g(n: int) -> OSElement:
    """``a*m - p*c`` with ``p = floor((n+1)/2)``."""
    return elem_a(n) * elem_m(n) - elem_c(n).scale(p_value(n))
