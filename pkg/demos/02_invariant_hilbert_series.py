"""Invariant Hilbert series of OS_n and VG_n, computed three ways."""
import time

from braidinv import hilbert_invariants, hilbert_series

for n in range(2, 7):
    t = time.perf_counter()
    os_inv = hilbert_invariants("OS", n)
    vg_inv = hilbert_invariants("VG", n)
    print(f"n={n} full={hilbert_series('OS', n).as_list()}")
    print(f"     OS^S_n={os_inv.as_list()} VG^S_n={vg_inv.as_list()} ({time.perf_counter() - t:.2f}s)")

# the character average gives the same numbers without building any kernel
print(hilbert_invariants("OS", 5, method="character").as_list())
print(hilbert_invariants("OS", 4, method="reynolds").as_list())

# invariants of the full symmetric group on n+1 letters
print(hilbert_invariants("OS", 4, fix="none").as_list(), hilbert_invariants("VG", 4, fix="none").as_list())
