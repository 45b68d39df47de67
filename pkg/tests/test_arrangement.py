import itertools
from math import comb, factorial, perm

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidinv.arrangement import (
    DomainError, Permutation, adjacent_transpositions, canonical_edge, class_representative, class_size,
    contains_broken_circuit, format_handful, group_elements, hyperplanes, is_nbc, minimal_broken_circuits,
    nbc_count, nbc_monomials, parse_handful, partitions, rank_nbc, set_partition, unrank_nbc,
)


def esym(values, d):
    total = 0
    for combo in itertools.combinations(values, d):
        prod = 1
        for v in combo:
            prod *= v
        total += prod
    return total


def brute_nbc(n, d):
    return [h for h in itertools.combinations(hyperplanes(n), d) if is_nbc(h)]


def test_hyperplanes():
    assert hyperplanes(2) == [(1, 2), (1, 3), (2, 3)]
    assert hyperplanes(1) == [(1, 2)]
    assert len(hyperplanes(4)) == 10


def test_canonical_edge():
    assert canonical_edge(3, 1) == (1, 3)
    with pytest.raises(DomainError):
        canonical_edge(2, 2)
    with pytest.raises(DomainError):
        canonical_edge(1, 5, n=3)


def test_is_nbc_examples():
    assert is_nbc([(1, 2), (2, 3), (2, 4)])
    assert not is_nbc([(1, 4), (3, 4)])
    assert is_nbc([])


def test_nbc_monomials_examples():
    assert len(nbc_monomials(3, 2)) == 11
    assert len(brute_nbc(3, 2)) == 11
    for n in range(1, 5):
        assert nbc_monomials(n, 0) == [()]
    assert sum(len(nbc_monomials(3, d)) for d in range(4)) == 24


def test_minimal_broken_circuits():
    assert minimal_broken_circuits(2) == [((1, 3), (2, 3))]
    assert minimal_broken_circuits(3) == [
        ((1, 3), (2, 3)), ((1, 4), (2, 4)), ((1, 4), (3, 4)), ((2, 4), (3, 4))]


@pytest.mark.parametrize("n", range(2, 6))
def test_nbc_iff_no_broken_circuit(n):
    for d in range(0, n + 2):
        for h in itertools.combinations(hyperplanes(n), d):
            assert is_nbc(h) == (not contains_broken_circuit(h, n))


@pytest.mark.parametrize("n", range(1, 8))
def test_dimension_counts(n):
    counts = [nbc_count(n, d) for d in range(n + 1)]
    assert counts == [esym(range(1, n + 1), d) for d in range(n + 1)]
    assert sum(counts) == factorial(n + 1)
    assert nbc_count(n, n + 1) == 0
    if n <= 5:
        for d in range(n + 1):
            assert sorted(nbc_monomials(n, d)) == brute_nbc(n, d)


@pytest.mark.parametrize("n", range(1, 6))
def test_rank_unrank_roundtrip(n):
    for d in range(n + 1):
        monos = nbc_monomials(n, d)
        for k, h in enumerate(monos):
            assert unrank_nbc(n, d, k) == h
            assert rank_nbc(h, n) == k


def test_rank_examples():
    assert unrank_nbc(3, 0, 0) == ()
    assert [rank_nbc(h, 3) for h in nbc_monomials(3, 2)] == list(range(11))
    with pytest.raises(DomainError):
        unrank_nbc(3, 2, 11)


def test_set_partition():
    assert set_partition([(1, 2), (3, 4)], 3) == ((1, 2), (3, 4))
    assert set_partition([], 2) == ((1,), (2,), (3,))
    assert set_partition([(1, 3), (2, 3)], 2) == ((1, 2, 3),)


def test_handful_text():
    h = ((1, 2), (2, 3))
    assert format_handful(h) == "e[1,2]e[2,3]"
    assert format_handful((), "x") == "1"
    assert parse_handful("e[2,3]e[1,2]") == h


@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)))
def test_permutation_group_laws(a, b):
    p, q = Permutation(a), Permutation(b)
    assert (p * q)(2) == p(q(2))
    assert p * p.inverse() == Permutation.identity(5)
    assert sum(p.cycle_type()) == 5


def test_groups_and_classes():
    for n in range(2, 6):
        elems = list(group_elements(n))
        assert len(elems) == factorial(n)
        assert all(g.fixes(n + 1) for g in elems)
        assert len(list(group_elements(n, "none"))) == factorial(n + 1)
        assert all(g.fixes(1) for g in group_elements(n, "first"))
        assert len(adjacent_transpositions(n)) == n - 1
        assert sum(class_size(s) for s in partitions(n)) == factorial(n)
        for s in partitions(n):
            rep = class_representative(s, n)
            assert rep.fixes(n + 1)
            assert rep.cycle_type()[: len(s)] == s or sorted(rep.cycle_type()) == sorted(s + (1,))
    assert class_size((2, 1, 1)) == comb(4, 2)
    assert class_size((3,)) == perm(3, 3) // 3
