"""
Counting Hopf Galois structures on Galois extensions.

A Galois extension with group G has one structure per regular subgroup N of
Perm(G) normalized by λ(G). The count splits by the isomorphism type of N.
"""

from hgkit.groups import groups_of_order
from hgkit.hopf import ExtensionDatum, count_structures

for order in (4, 6, 8, 9):
    for entry in groups_of_order(order):
        rep = count_structures(ExtensionDatum.galois(entry.group(), name=entry.name))
        split = ", ".join(f"{t}: {c}" for t, c in rep.per_type.items())
        print(f"{entry.name:<10} s = {rep.total:<4} {split}")

# Burnside numbers n (gcd(n, φ(n)) = 1) admit only the classical structure.
for n in (5, 7, 15):
    entry = groups_of_order(n)[0]
    print(f"{entry.name:<10} s = {count_structures(ExtensionDatum.galois(entry.group())).total}")
