"""VG_n^{S_n} is a truncated polynomial ring in z."""
from braidinv import VGElement, elem_z, invariant_subspace

n = 4
z = elem_z(n)
print("z =", z)
power = VGElement.one(n)
for d in range(n + 2):
    inv = invariant_subspace("VG", n, d)
    print(f"z^{d}: {len(power)} terms, invariants dim {inv.dim}, contains z^{d}: {inv.contains(power)}")
    power = power * z

# with the other convention z = sum of x[1,i], every power has positive coefficients
zf = elem_z(3, "first")
print("z^3 =", zf ** 3)
