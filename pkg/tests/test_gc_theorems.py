import pytest

from braidinv.gc_algebra import GCElement, gc_reduce, ideal_p, quotient_basis, quotient_hilbert
from braidinv.os_algebra import elem_a, elem_g, elem_m
from braidinv.theorems import (
    STATEMENTS, VerificationReport, partial_identity_checks, phi, verify, verify_all, verify_basis_B,
    verify_ideal_relations, verify_os_hilbert, verify_presentation_iso, verify_vg_presentation,
)
from braidinv.vg_ring import VGElement, elem_z

A, M, G = GCElement.alpha(), GCElement.mu(), GCElement.gamma()


def test_graded_commutativity():
    assert A * M == -(M * A)
    assert A * A == GCElement() and M * M == GCElement()
    assert A * G == G * A and M * G == G * M
    assert str(A * M * G ** 2 + M.__mul__(3)) == "3*mu + alpha*mu*gamma^2"


def test_reduce_examples():
    assert gc_reduce(G ** 2, 4) == GCElement()
    assert gc_reduce(A * G, 3) == M * G
    assert gc_reduce(A * M * G, 3) == GCElement()
    assert gc_reduce(A * G ** 2, 5) == (M * G ** 2) * 2


@pytest.mark.parametrize("n", range(2, 11))
def test_quotient_dimensions(n):
    assert quotient_hilbert(n) == [1] + [2] * (n - 1) + [1]
    assert len(quotient_basis(n)) == 2 * n


def test_reduce_is_idempotent_and_compatible():
    for n in range(2, 8):
        for u in quotient_basis(n):
            for v in quotient_basis(n):
                x = GCElement.monomial(*u) * GCElement.monomial(*v)
                r = gc_reduce(x, n)
                assert gc_reduce(r, n) == r
                # reduce(x*y) = reduce(reduce(x)*y)
                assert gc_reduce(r * A, n) == gc_reduce(x * A, n)


def test_phi_on_generators():
    assert phi(A, 4) == elem_a(4)
    assert phi(M * A, 4) == elem_m(4) * elem_a(4)
    assert phi(G, 5) == elem_g(5)


@pytest.mark.parametrize("n", range(2, 6))
def test_all_statements_pass(n):
    for name, fn in STATEMENTS.items():
        rep = fn(n)
        assert rep.passed, rep.line()
        assert rep.n == n and rep.statement == name


def test_report_json():
    rep = verify_os_hilbert(5)
    assert rep.to_json() == '{"statement": "os_hilbert", "n": 5, "pass": true, ' \
        '"expected": [1, 2, 2, 2, 2, 1], "actual": [1, 2, 2, 2, 2, 1]}'
    assert verify("os_hilbert", 2).actual == [1, 2, 1]
    with pytest.raises(KeyError):
        verify("nope", 3)
    assert len(verify_all(3)) == 2 * len(STATEMENTS)


def test_partial_identity_examples():
    labels = {n: {label: (l, r) for label, l, r in partial_identity_checks(n)} for n in (3, 4)}
    dg3 = next(v for k, v in labels[3].items() if k.startswith("d(g)"))
    assert dg3[0] == elem_a(3) - elem_m(3) and dg3[0] == dg3[1]
    dg4 = next(v for k, v in labels[4].items() if k.startswith("d(g)"))
    assert dg4[0] == 0


def test_ideal_relation_examples():
    assert elem_g(4) ** 2 == 0
    assert elem_a(3) * elem_g(3) == elem_m(3) * elem_g(3)
    g2 = elem_g(5) ** 2
    assert elem_a(5) * g2 == (elem_m(5) * g2).scale(2)
    for n in range(2, 6):
        assert verify_ideal_relations(n).passed


def test_rank_three_basis_notes():
    rep = verify_basis_B(3)
    assert rep.passed
    assert any("am - c" in note for note in rep.notes)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_negative_control_corrupted_z(n):
    z = elem_z(n)
    terms = dict(z.terms)
    terms.pop(next(iter(terms)))
    rep = verify_vg_presentation(n, VGElement(n, terms))
    assert not rep.passed
    assert rep.witness and "moved" in rep.witness


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_negative_control_wrong_exponent(n):
    rep = verify_presentation_iso(n, p=ideal_p(n) + 1)
    assert not rep.passed
    assert rep.witness and "= 0" in rep.witness


def test_vg_presentation_both_conventions():
    for n in (2, 5):
        assert verify_vg_presentation(n).passed
        assert verify_vg_presentation(n, fix="first").passed
    # z from one convention is not invariant for the other group
    assert not verify_vg_presentation(3, elem_z(3, "first"), fix="last").passed


def test_report_line():
    rep = VerificationReport("x", 2, False, 1, 2, witness="w")
    assert rep.line() == "FAIL x n=2 expected=1 actual=2 witness: w"
    assert rep.to_dict()["witness"] == "w"
