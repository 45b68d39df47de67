"""Symmetric-function predictions versus linear algebra."""
from braidinv import HSum, h_inner, predicted_invariant_dims
from braidinv.symfunc import frobenius_characteristic, pieri_single_row
from braidinv.theorems import verify_frobenius_consistency

n = 4
print("Frob(OS_4) =", frobenius_characteristic("OS", n))
print("<h_1^5, h_4 h_1> =", h_inner((1,) * 5, (4, 1)))
print("h_2 h_1 =", pieri_single_row(2, 1))
print((HSum.h(2) * HSum.h(1, 1)).inner(HSum.h(3, 1)))
for ring in ("OS", "VG"):
    print(ring, predicted_invariant_dims(ring, n), predicted_invariant_dims(ring, n, full=True))
print(verify_frobenius_consistency(n).line())
