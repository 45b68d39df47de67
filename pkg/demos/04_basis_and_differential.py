"""The elements a, m, c, g, their differentials, and the graded basis they build."""
from braidinv import elem_a, elem_c, elem_g, elem_m
from braidinv.theorems import basis_B, partial_identity_checks, verify_basis_B

n = 4
a, m, c, g = elem_a(n), elem_m(n), elem_c(n), elem_g(n)
print("a =", a)
print("m =", m)
print("d(a) =", a.differential(), " d(m) =", m.differential())
print("d(g) =", g.differential())

for label, lhs, rhs in partial_identity_checks(n):
    print(f"{label:55s} {'ok' if lhs == rhs else 'FAILS'}")

for label, x in basis_B(n):
    print(f"degree {x.degree}: {label} ({len(x)} terms)")
print(verify_basis_B(n).line())

# a*m and c are not equal at rank three, though their differentials are proportional
a3, m3, c3 = elem_a(3), elem_m(3), elem_c(3)
print("n=3: am - c =", a3 * m3 - c3)
