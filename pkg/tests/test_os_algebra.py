import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidinv.arrangement import DomainError, Permutation, hyperplanes, nbc_monomials
from braidinv.os_algebra import (
    OSElement, act, differential, elem_a, elem_c, elem_g, elem_m, multiply, p_value, power, straighten,
)

E = OSElement.gen


def parse(n, text):
    return OSElement.parse(n, text)


def test_straighten_examples():
    assert straighten(2, [(1, 3), (2, 3)]) == parse(2, "e[1,2]e[2,3] - e[1,2]e[1,3]")
    assert straighten(2, [(2, 3), (1, 3)]) == parse(2, "-e[1,2]e[2,3] + e[1,2]e[1,3]")
    assert straighten(2, [(1, 2), (1, 2)]) == 0
    x = straighten(3, [(1, 4), (2, 4), (3, 4)])
    assert len(x) == 4
    assert x == parse(3, "e[1,2]e[1,3]e[1,4] - e[1,2]e[1,3]e[3,4] - e[1,2]e[2,3]e[2,4] + e[1,2]e[2,3]e[3,4]")


def test_arnold_relation_holds():
    for n in range(2, 5):
        for i, j, k in itertools.combinations(range(1, n + 2), 3):
            rel = E(i, j, n) * E(j, k, n) - E(i, j, n) * E(i, k, n) - E(i, k, n) * E(j, k, n)
            assert rel == 0


def test_text_roundtrip_and_format():
    x = parse(3, "e[1,3]e[2,3]")
    assert str(x) == "-e[1,2]e[1,3] + e[1,2]e[2,3]"
    assert parse(3, str(x)) == x
    assert str(OSElement.zero(3)) == "0"
    assert parse(2, "3/2*e[2,1] + 2") == E(1, 2, 2).scale(Fraction(3, 2)) + OSElement.one(2).scale(2)
    with pytest.raises(DomainError):
        parse(2, "e[1,5]")


def test_named_elements():
    assert elem_a(2) == E(1, 2, 2)
    assert elem_m(2) == E(1, 3, 2) + E(2, 3, 2)
    assert len(elem_c(3)) == 6
    for n in range(2, 7):
        assert elem_g(n) == elem_a(n) * elem_m(n) - elem_c(n).scale(p_value(n))
    with pytest.raises(DomainError):
        elem_a(1)


def test_am_versus_c_at_rank_three():
    # a*m and c are different elements; only their differentials are proportional
    a, m, c = elem_a(3), elem_m(3), elem_c(3)
    assert a * m - c == parse(3, "e[1,2]e[3,4] + e[1,3]e[2,4] - e[1,4]e[2,3]")
    assert (a * m).differential().scale(2) == c.differential().scale(3)


def test_multiply_identity_and_squares():
    for n in range(2, 7):
        a = elem_a(n)
        assert a * OSElement.one(n) == a
        assert multiply(a, a) == 0
        assert multiply(elem_m(n), elem_m(n)) == 0


def test_differential_examples():
    for n in range(2, 7):
        one = OSElement.one(n)
        assert differential(elem_a(n)) == one.scale(comb(n, 2))
        assert differential(elem_m(n)) == one.scale(n)
        assert differential(one) == 0
        c = elem_c(n)
        cp = [one]
        for d in range(1, n // 2 + 1):
            cp.append(cp[-1] * c)
            rhs = (elem_a(n) * cp[d - 1]).scale(-2 * d) + (elem_m(n) * cp[d - 1]).scale(d * (n - 1))
            assert differential(cp[d]) == rhs
    c5 = elem_c(5)
    assert differential(power(c5, 2)) == (c5 * differential(c5)).scale(2)


def test_power():
    x = elem_c(4)
    assert power(x, 0) == OSElement.one(4)
    assert power(elem_g(4), 2) == 0
    assert power(x, 2) == x * x


def test_action_examples():
    s = Permutation.transposition(3, 1, 2)
    assert act(s, E(1, 2, 2)) == E(1, 2, 2)
    assert act(s, E(1, 3, 2)) == E(2, 3, 2)
    x = elem_c(3) + elem_a(3)
    assert act(Permutation.identity(4), x) == x


def monomial(n, d):
    return st.lists(st.sampled_from(hyperplanes(n)), min_size=d, max_size=d)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_product_properties(data):
    n = data.draw(st.integers(2, 4))
    words = [data.draw(monomial(n, data.draw(st.integers(0, 2)))) for _ in range(3)]
    x, y, z = (straighten(n, w) for w in words)
    assert (x * y) * z == x * (y * z)
    dx, dy = len(words[0]), len(words[1])
    assert x * y == (y * x).scale((-1) ** (dx * dy))
    # the differential is a graded derivation
    assert differential(x * y) == differential(x) * y + (x * differential(y)).scale((-1) ** dx)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_action_is_automorphism(data):
    n = data.draw(st.integers(2, 5))
    p = Permutation(data.draw(st.permutations(range(1, n + 2))))
    x = straighten(n, data.draw(monomial(n, data.draw(st.integers(0, 2)))))
    y = straighten(n, data.draw(monomial(n, data.draw(st.integers(0, 2)))))
    assert act(p, x * y) == act(p, x) * act(p, y)
    q = Permutation(data.draw(st.permutations(range(1, n + 2))))
    assert act(p, act(q, x)) == act(p * q, x)


@pytest.mark.parametrize("n", range(2, 5))
def test_straightened_monomials_are_nbc(n):
    basis = set()
    for d in range(n + 1):
        basis.update(nbc_monomials(n, d))
    for w in itertools.combinations(hyperplanes(n), 2):
        x = straighten(n, list(w))
        assert all(m in basis for m, _ in x.items())
