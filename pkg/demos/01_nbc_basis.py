"""Walk through the NBC basis of OS_n and straightening into it."""
from math import factorial

from braidinv import OSElement, hyperplanes, is_nbc, nbc_count, nbc_monomials
from braidinv.arrangement import format_handful, minimal_broken_circuits

n = 3
print("hyperplanes for n = 3:", hyperplanes(n))
print("minimal broken circuits:", minimal_broken_circuits(n))

# at most one edge per larger endpoint
print(is_nbc([(1, 2), (2, 3), (2, 4)]), is_nbc([(1, 4), (3, 4)]))

for d in range(n + 1):
    print(d, nbc_count(n, d), [format_handful(h) for h in nbc_monomials(n, d)][:4], "...")
print("total", sum(nbc_count(n, d) for d in range(n + 1)), "=", factorial(n + 1))

# a broken product gets rewritten with the three-term relation
x = OSElement.straighten(n, [(1, 4), (2, 4), (3, 4)])
print("e[1,4]e[2,4]e[3,4] =", x)
print("e[1,3]e[2,3] =", OSElement.parse(n, "e[1,3]e[2,3]"))
