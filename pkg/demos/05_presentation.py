"""The quotient of the free graded-commutative algebra on alpha, mu, gamma."""
from braidinv import GCElement, gc_reduce, quotient_basis
from braidinv.gc_algebra import format_gc_monomial, quotient_hilbert
from braidinv.theorems import phi, verify_ideal_relations, verify_presentation_iso

A, M, G = GCElement.alpha(), GCElement.mu(), GCElement.gamma()
print("alpha*mu + mu*alpha =", A * M + M * A)
print("reduce(alpha*gamma) at n=3:", gc_reduce(A * G, 3))
print("reduce(gamma^2) at n=4:", gc_reduce(G ** 2, 4))

for n in (4, 5):
    print(n, [format_gc_monomial(b) for b in quotient_basis(n)], quotient_hilbert(n))
    print(verify_ideal_relations(n).line())
    print(verify_presentation_iso(n).line())

print("phi(alpha*mu) at n=3 =", phi(A * M, 3))
