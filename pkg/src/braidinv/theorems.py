"""Per-instance verification of the structural results on OS_n^{S_n} and VG_n^{S_n}.

Each ``verify_*`` function checks one statement at one rank ``n`` and returns a
:class:`VerificationReport`.  Failures carry a witness (an offending element
in text form).  ``STATEMENTS`` maps statement ids to verifiers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable, Dict, List, Optional

from .arrangement import adjacent_transpositions, nbc_count, nbc_monomials
from .gc_algebra import GCElement, format_gc_monomial, gc_degree, gc_reduce, ideal_p, quotient_basis
from .invariants import character_dim, hilbert_invariants, invariant_subspace
from .linalg import SparseMatrix, rank
from .os_algebra import OSElement, elem_a, elem_c, elem_g, elem_m
from .symfunc import predicted_invariant_dims
from .vg_ring import VGElement, elem_z


@dataclass
class VerificationReport:
    statement: str
    n: int
    passed: bool
    expected: Any = None
    actual: Any = None
    witness: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {"statement": self.statement, "n": self.n, "pass": self.passed,
               "expected": self.expected, "actual": self.actual}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.statement} n={self.n} expected={self.expected} actual={self.actual}"
        if self.witness is not None:
            text += f" witness: {self.witness}"
        return text


def _independent(elements) -> bool:
    elements = [x for x in elements]
    if any(not x for x in elements):
        return False
    degs = {x.degree for x in elements}
    if len(degs) != 1:
        # different degrees: independent iff each degree class is
        return all(_independent([y for y in elements if y.degree == d]) for d in degs)
    n = elements[0].n
    index = {m: i for i, m in enumerate(nbc_monomials(n, degs.pop()))}
    rows = [x.to_vector(index) for x in elements]
    return rank(SparseMatrix.from_rows(rows, len(index))) == len(rows)


def _first_noninvariant(x, fix="last"):
    for s in adjacent_transpositions(x.n, fix):
        diff = x.act(s) - x
        if diff:
            return s, diff
    return None


# --- VG ---------------------------------------------------------------------

def verify_vg_presentation(n: int, z: VGElement | None = None, fix: str = "last") -> VerificationReport:
    """VG_n^{S_n} = Q[z]/(z^{n+1})."""
    z = elem_z(n, fix) if z is None else z
    expected = [1] * (n + 1)
    bad = _first_noninvariant(z, fix)
    if bad is not None:
        s, diff = bad
        return VerificationReport("vg_presentation", n, False, expected, None,
                                  witness=f"z = {z} is moved by {list(s.images)}: s.z - z = {diff}")
    powers = [VGElement.one(n)]
    for _ in range(n + 1):
        powers.append(powers[-1] * z)
    for d in range(n + 1):
        if not powers[d]:
            return VerificationReport("vg_presentation", n, False, expected, None,
                                      witness=f"z^{d} = 0")
    if powers[n + 1]:
        return VerificationReport("vg_presentation", n, False, expected, None,
                                  witness=f"z^{n + 1} = {powers[n + 1]}")
    dims = []
    for d in range(n + 1):
        inv = invariant_subspace("VG", n, d, fix)
        dims.append(inv.dim)
        if not inv.contains(powers[d]):
            return VerificationReport("vg_presentation", n, False, expected, dims,
                                      witness=f"z^{d} not in computed invariants")
    return VerificationReport("vg_presentation", n, dims == expected, expected, dims)


# --- Hilbert series -----------------------------------------------------------

def expected_os_hilbert(n: int) -> List[int]:
    """Coefficients of (1+t)(1+t+...+t^(n-1))."""
    out = [0] * (n + 1)
    for i in range(n):
        out[i] += 1
        out[i + 1] += 1
    return out


def verify_os_hilbert(n: int) -> VerificationReport:
    expected = expected_os_hilbert(n)
    actual = hilbert_invariants("OS", n).as_list()
    rep = VerificationReport("os_hilbert", n, actual == expected, expected, actual)
    if not rep.passed:
        rep.witness = f"degreewise dims {actual}"
    return rep


# --- differential ---------------------------------------------------------------

def partial_identity_checks(n: int):
    """Yield ``(label, lhs, rhs)`` for every instance of the six identities."""
    a, m, c = elem_a(n), elem_m(n), elem_c(n)
    p = ideal_p(n)
    one = OSElement.one(n)
    yield "d(a) = C(n,2)", a.differential(), one.scale(comb(n, 2))
    yield "d(m) = n", m.differential(), one.scale(n)
    am = a * m
    yield "d(am) = -n a + C(n,2) m", am.differential(), a.scale(-n) + m.scale(comb(n, 2))
    cpow = [one]
    while 2 * len(cpow) <= n + 2:
        cpow.append(cpow[-1] * c)
    for d in range(1, n // 2 + 1):
        rhs = (a * cpow[d - 1]).scale(-2 * d) + (m * cpow[d - 1]).scale(d * (n - 1))
        yield f"d(c^{d}) = -2d a c^{d - 1} + d(n-1) m c^{d - 1}", cpow[d].differential(), rhs
    for d in range(0, (n - 2) // 2 + 1):
        lhs = (am * cpow[d]).differential()
        rhs = (a * cpow[d]).scale(-n) + (m * cpow[d]).scale(comb(n, 2))
        yield f"d(am c^{d}) = -n a c^{d} + C(n,2) m c^{d}", lhs, rhs
    g = elem_g(n)
    rhs = OSElement.zero(n) if n % 2 == 0 else a - m.scale(p - 1)
    yield "d(g) = 0 (n even) | a - (p-1) m (n odd)", g.differential(), rhs


def verify_partial_identities(n: int) -> VerificationReport:
    count = 0
    for label, lhs, rhs in partial_identity_checks(n):
        count += 1
        if lhs != rhs:
            return VerificationReport("partial_identities", n, False, "all hold", f"failed: {label}",
                                      witness=f"lhs - rhs = {lhs - rhs}")
    return VerificationReport("partial_identities", n, True, "all hold", f"{count} instances hold")


def differential_matrix(n: int, d: int) -> SparseMatrix:
    """Matrix of the differential from degree d to degree d-1 on NBC bases."""
    src = nbc_monomials(n, d)
    dst = {m: i for i, m in enumerate(nbc_monomials(n, d - 1))} if d >= 1 else {}
    entries = {}
    for col, mono in enumerate(src):
        for k in range(len(mono)):
            entries[(dst[mono[:k] + mono[k + 1:]], col)] = 1 if k % 2 == 0 else -1
    return SparseMatrix(len(dst), len(src), entries)


def verify_acyclic_differential(n: int) -> VerificationReport:
    """The differential squares to zero and the complex is exact in every degree."""
    for d in range(2, n + 1):
        for mono in nbc_monomials(n, d):
            x = OSElement(n, {mono: 1}, check=False)
            dd = x.differential().differential()
            if dd:
                return VerificationReport("acyclic_differential", n, False, "d^2 = 0", None,
                                          witness=f"d(d({x})) = {dd}")
    ranks = [0] + [rank(differential_matrix(n, d)) for d in range(1, n + 1)] + [0]
    dims = [nbc_count(n, d) for d in range(n + 1)]
    sums = [ranks[d] + ranks[d + 1] for d in range(n + 1)]
    rep = VerificationReport("acyclic_differential", n, sums == dims, dims, sums)
    rep.notes.append(f"ranks of d_1..d_n: {ranks[1:n + 1]}")
    if not rep.passed:
        d = next(i for i in range(n + 1) if sums[i] != dims[i])
        rep.witness = f"homology in degree {d}: dim {dims[d]} vs rank sum {sums[d]}"
    return rep


# --- linear basis -----------------------------------------------------------------

def basis_B(n: int, use_g: bool = False):
    """The basis with c-powers (or g-powers when ``use_g``), as ``(label, element)``."""
    a, m = elem_a(n), elem_m(n)
    y = elem_g(n) if use_g else elem_c(n)
    name = "g" if use_g else "c"
    p = ideal_p(n)
    one = OSElement.one(n)
    pw = [one]
    for _ in range(p):
        pw.append(pw[-1] * y)
    out = []
    top = p if n % 2 == 0 else p - 1
    for d in range(top):
        for eps in (0, 1):
            for delta in (0, 1):
                x = pw[d]
                label = f"{name}^{d}"
                if delta:
                    x = m * x
                    label = "m " + label
                if eps:
                    x = a * x
                    label = "a " + label
                out.append((label, x))
    if n % 2 == 1:
        out.append((f"{name}^{p - 1}", pw[p - 1]))
        out.append((f"a {name}^{p - 1} + m {name}^{p - 1}", a * pw[p - 1] + m * pw[p - 1]))
    return out


def verify_basis_B(n: int) -> VerificationReport:
    """B and B' are graded bases of OS_n^{S_n}."""
    expected = hilbert_invariants("OS", n).as_list()
    results = {}
    for variant, use_g in (("B", False), ("B'", True)):
        elements = basis_B(n, use_g)
        counts = [0] * (n + 1)
        for label, x in elements:
            if not x:
                return VerificationReport("basis_B", n, False, expected, None,
                                          witness=f"{variant}: {label} = 0")
            if x.degree > n:
                return VerificationReport("basis_B", n, False, expected, None,
                                          witness=f"{variant}: {label} has degree {x.degree} > n")
            bad = _first_noninvariant(x)
            if bad is not None:
                return VerificationReport("basis_B", n, False, expected, None,
                                          witness=f"{variant}: {label} not invariant; s.x - x = {bad[1]}")
            counts[x.degree] += 1
        if not _independent([x for _, x in elements]):
            return VerificationReport("basis_B", n, False, expected, counts,
                                      witness=f"{variant} is linearly dependent")
        results[variant] = counts
    rep = VerificationReport("basis_B", n, results["B"] == expected and results["B'"] == expected,
                             expected, results["B"])
    a, m, c, g = elem_a(n), elem_m(n), elem_c(n), elem_g(n)
    if g - a * m + c.scale(ideal_p(n)):
        rep.passed = False
        rep.witness = "{am, c, g} fails the defining dependence"
    if n == 3:
        am = a * m
        # both differentials are multiples of m - a, so the degree argument is blind here
        if am.differential().scale(2) != c.differential().scale(3):
            rep.passed = False
            rep.witness = f"n=3: 2 d(am) != 3 d(c): {am.differential()} vs {c.differential()}"
        rep.notes.append(f"n=3: am - c = {am - c}")
    return rep


def verify_low_degree_independence(n: int) -> VerificationReport:
    """{a, m} independent for n >= 2; {am, c} independent for n >= 3."""
    a, m, c = elem_a(n), elem_m(n), elem_c(n)
    if not _independent([a, m]):
        return VerificationReport("low_degree_independence", n, False, True, False,
                                  witness=f"a = {a}, m = {m}")
    if n >= 3 and not _independent([a * m, c]):
        return VerificationReport("low_degree_independence", n, False, True, False,
                                  witness=f"am = {a * m}, c = {c}")
    return VerificationReport("low_degree_independence", n, True, True, True)


def _c_family(n: int):
    a, m, c = elem_a(n), elem_m(n), elem_c(n)
    one = OSElement.one(n)
    pw = [one]
    while len(pw) <= n // 2 + 1:
        pw.append(pw[-1] * c)
    return a, m, a * m, pw


def verify_consecutive_degree(n: int) -> VerificationReport:
    """Independence propagates between consecutive degrees (n != 3)."""
    if n == 3:
        rep = VerificationReport("consecutive_degree", n, True, "n/a", "n/a")
        rep.notes.append("hypothesis n != 3 excludes this rank")
        return rep
    dims = hilbert_invariants("OS", n).as_list() + [0, 0]
    a, m, am, pw = _c_family(n)
    used = 0
    for d in range(0, n // 2 + 1):
        if 2 * d + 1 <= n and _independent([a * pw[d], m * pw[d]]) and dims[2 * d + 2] >= 2:
            used += 1
            if not _independent([am * pw[d], pw[d + 1]]):
                return VerificationReport("consecutive_degree", n, False, True, False,
                                          witness=f"{{am c^{d}, c^{d + 1}}} dependent")
        if d >= 1 and 2 * d <= n and _independent([am * pw[d - 1], pw[d]]) and dims[2 * d + 1] >= 2:
            used += 1
            if not _independent([a * pw[d], m * pw[d]]):
                return VerificationReport("consecutive_degree", n, False, True, False,
                                          witness=f"{{a c^{d}, m c^{d}}} dependent")
    return VerificationReport("consecutive_degree", n, True, True, True,
                              notes=[f"{used} implications exercised"])


def verify_nonvanishing(n: int) -> VerificationReport:
    """Independence of a pair forces the next basis element to be nonzero."""
    a, m, am, pw = _c_family(n)
    used = 0
    for d in range(0, n // 2 + 1):
        if 2 * d + 1 <= n and _independent([a * pw[d], m * pw[d]]):
            used += 1
            if not am * pw[d]:
                return VerificationReport("nonvanishing", n, False, True, False, witness=f"am c^{d} = 0")
        if d >= 1 and 2 * d <= n and _independent([am * pw[d - 1], pw[d]]):
            used += 1
            if not (a * pw[d] + m * pw[d]):
                return VerificationReport("nonvanishing", n, False, True, False,
                                          witness=f"a c^{d} + m c^{d} = 0")
    return VerificationReport("nonvanishing", n, True, True, True, notes=[f"{used} implications exercised"])


# --- ring structure ---------------------------------------------------------------

def verify_ideal_relations(n: int) -> VerificationReport:
    """g^p = 0; a g^(p-1) = (p-1) m g^(p-1) for odd n, independence for even n."""
    a, m, g = elem_a(n), elem_m(n), elem_g(n)
    p = ideal_p(n)
    gq = g ** (p - 1)
    gp = gq * g
    if gp:
        return VerificationReport("ideal_relations", n, False, "g^p = 0", "g^p != 0", witness=f"g^{p} = {gp}")
    agq, mgq = a * gq, m * gq
    if n % 2 == 1:
        diff = agq - mgq.scale(p - 1)
        if diff:
            return VerificationReport("ideal_relations", n, False, "a g^(p-1) = (p-1) m g^(p-1)", "differs",
                                      witness=f"a g^{p - 1} - {p - 1} m g^{p - 1} = {diff}")
        return VerificationReport("ideal_relations", n, True, "g^p = 0; a g^(p-1) = (p-1) m g^(p-1)", "holds")
    if not _independent([agq, mgq]):
        return VerificationReport("ideal_relations", n, False, "a g^(p-1), m g^(p-1) independent", "dependent",
                                  witness=f"a g^{p - 1} = {agq}; m g^{p - 1} = {mgq}")
    return VerificationReport("ideal_relations", n, True, "g^p = 0; a g^(p-1), m g^(p-1) independent", "holds")


class _Phi:
    """The algebra map alpha -> a, mu -> m, gamma -> g into OS_n."""

    def __init__(self, n: int):
        self.n = n
        self.a, self.m, self.g = elem_a(n), elem_m(n), elem_g(n)
        self._gpow = [OSElement.one(n)]
        self._cache: Dict[tuple, OSElement] = {}

    def _g(self, d):
        while len(self._gpow) <= d:
            self._gpow.append(self._gpow[-1] * self.g)
        return self._gpow[d]

    def monomial(self, mono) -> OSElement:
        if mono not in self._cache:
            eps, delta, d = mono
            x = self._g(d)
            if delta:
                x = self.m * x
            if eps:
                x = self.a * x
            self._cache[mono] = x
        return self._cache[mono]

    def __call__(self, x: GCElement) -> OSElement:
        out = OSElement.zero(self.n)
        for mono, c in x.items():
            out = out + self.monomial(mono).scale(c)
        return out


def phi(x: GCElement, n: int) -> OSElement:
    return _Phi(n)(x)


def verify_presentation_iso(n: int, p: int | None = None) -> VerificationReport:
    """phi induces an isomorphism Q{alpha, mu, gamma}/I_n -> OS_n^{S_n}.

    ``p`` overrides the exponent in the ideal (for negative controls only);
    the element g always uses the true value.
    """
    basis = quotient_basis(n, p)
    f = _Phi(n)
    expected = hilbert_invariants("OS", n).as_list()
    graded: Dict[int, list] = {}
    for mono in basis:
        image = f.monomial(mono)
        label = format_gc_monomial(mono)
        if not image:
            return VerificationReport("os_presentation", n, False, expected, None,
                                      witness=f"phi({label}) = 0")
        graded.setdefault(gc_degree(mono), []).append((label, image))
    actual = [len(graded.get(k, [])) for k in range(max(graded) + 1)]
    for k, items in sorted(graded.items()):
        inv = invariant_subspace("OS", n, k)
        for label, image in items:
            if not inv.contains(image):
                return VerificationReport("os_presentation", n, False, expected, actual,
                                          witness=f"phi({label}) = {image} is not invariant")
        if not _independent([x for _, x in items]) or len(items) != inv.dim:
            return VerificationReport("os_presentation", n, False, expected, actual,
                                      witness=f"degree {k}: {len(items)} images vs invariant dim {inv.dim}")
    if actual != expected:
        return VerificationReport("os_presentation", n, False, expected, actual,
                                  witness=f"graded image dims {actual}")
    for u in basis:
        for v in basis:
            prod = gc_reduce(GCElement.monomial(*u) * GCElement.monomial(*v), n, p)
            lhs = f(prod)
            rhs = f.monomial(u) * f.monomial(v)
            if lhs != rhs:
                return VerificationReport(
                    "os_presentation", n, False, expected, actual,
                    witness=(f"phi(reduce({format_gc_monomial(u)} * {format_gc_monomial(v)})) - "
                             f"phi(u) phi(v) = {lhs - rhs}"))
    return VerificationReport("os_presentation", n, True, expected, actual,
                              notes=[f"{len(basis) ** 2} basis products multiplicative"])


# --- Frobenius --------------------------------------------------------------------

def verify_frobenius_consistency(n: int) -> VerificationReport:
    """Symmetric-function totals agree with character averages and kernel dimensions."""
    expected = {}
    actual = {}
    for ring in ("OS", "VG"):
        for fix, full in (("last", False), ("none", True)):
            key = f"{ring}/S_{n + 1 if full else n}"
            expected[key] = predicted_invariant_dims(ring, n, full)
            chars = sum(character_dim(ring, n, d, fix) for d in range(n + 1))
            kernel = sum(invariant_subspace(ring, n, d, fix).dim for d in range(n + 1))
            actual[key] = [chars, kernel]
    passed = all(actual[k] == [v, v] for k, v in expected.items())
    rep = VerificationReport("frobenius", n, passed, expected, actual)
    if not passed:
        k = next(k for k, v in expected.items() if actual[k] != [v, v])
        rep.witness = f"{k}: predicted {expected[k]}, character/kernel {actual[k]}"
    return rep


STATEMENTS: Dict[str, Callable[[int], VerificationReport]] = {
    "vg_presentation": verify_vg_presentation,
    "os_hilbert": verify_os_hilbert,
    "partial_identities": verify_partial_identities,
    "acyclic_differential": verify_acyclic_differential,
    "low_degree_independence": verify_low_degree_independence,
    "consecutive_degree": verify_consecutive_degree,
    "nonvanishing": verify_nonvanishing,
    "basis_B": verify_basis_B,
    "ideal_relations": verify_ideal_relations,
    "os_presentation": verify_presentation_iso,
    "frobenius": verify_frobenius_consistency,
}


def verify(statement: str, n: int) -> VerificationReport:
    try:
        fn = STATEMENTS[statement]
    except KeyError:
        raise KeyError(f"unknown statement {statement!r}") from None
    return fn(n)


def verify_all(max_n: int, min_n: int = 2) -> List[VerificationReport]:
    return [fn(n) for n in range(min_n, max_n + 1) for fn in STATEMENTS.values()]
