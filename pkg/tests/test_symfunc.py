import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidinv.arrangement import DomainError
from braidinv.symfunc import (
    HSum, format_partition, frobenius_characteristic, h_inner, h_poly, parse_partition, pieri_single_row,
    predicted_invariant_dims, schur_poly, schur_sum,
)


def brute_tables(rows, cols):
    """Count nonnegative integer matrices with the given margins by full enumeration."""
    import itertools

    def rows_with_sum(total, width):
        for cut in itertools.combinations(range(total + width - 1), width - 1):
            parts, prev = [], -1
            for c in cut + (total + width - 1,):
                parts.append(c - prev - 1)
                prev = c
            yield parts

    count = 0
    for choice in itertools.product(*(list(rows_with_sum(r, len(cols))) for r in rows)):
        if all(sum(row[j] for row in choice) == cols[j] for j in range(len(cols))):
            count += 1
    return count


def test_partition_text():
    assert parse_partition("2,1,1") == (2, 1, 1)
    assert format_partition((2, 1, 1)) == "2,1,1"
    assert parse_partition("1,2") == (2, 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_inner_product_examples(n):
    assert h_inner((1,) * (n + 1), (n, 1)) == n + 1
    assert h_inner((2,) + (1,) * (n - 1), (n, 1)) == n
    assert h_inner((2,) + (1,) * (n - 1), (n + 1,)) == 1
    assert h_inner((n,), (n,)) == 1


small_partitions = st.lists(st.integers(1, 3), min_size=1, max_size=3)


@settings(max_examples=60, deadline=None)
@given(small_partitions, small_partitions)
def test_inner_product_counts_tables(lam, mu):
    if sum(lam) != sum(mu):
        assert h_inner(lam, mu) == 0
        return
    assert h_inner(lam, mu) == h_inner(mu, lam) == brute_tables(lam, mu)


def test_pieri():
    assert pieri_single_row(2, 1) == [(3,), (2, 1)]
    assert pieri_single_row(1, 1) == [(2,), (1, 1)]
    with pytest.raises(DomainError):
        pieri_single_row(2, 0)
    for l1 in range(1, 4):
        for k in range(1, 4):
            nv = l1 + k
            assert h_poly((l1, k), nv) == schur_sum(pieri_single_row(l1, k), nv)


def test_polynomials():
    assert schur_poly((1, 1), 2) == {(1, 1): 1}
    assert h_poly((1,), 2) == {(1, 0): 1, (0, 1): 1}
    assert h_poly((2, 1), 3) == schur_sum(pieri_single_row(2, 1), 3)


def test_hsum():
    x = HSum.parse("2*h[2,1,1,1]")
    assert x == frobenius_characteristic("OS", 4)
    assert str(x) == "2*h[2,1,1,1]"
    assert HSum.h(2) * HSum.h(1) == HSum.h(2, 1)
    assert (HSum.h(1) * 3).inner(HSum.h(1)) == 3
    assert HSum.parse("h[2] - h[1,1]").inner(HSum.h(2)) == 0


@pytest.mark.parametrize("n", range(2, 9))
def test_predicted_dims(n):
    assert predicted_invariant_dims("OS", n) == 2 * n
    assert predicted_invariant_dims("VG", n) == n + 1
    assert predicted_invariant_dims("OS", n, full=True) == 2
    assert predicted_invariant_dims("VG", n, full=True) == 1
