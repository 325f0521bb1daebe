"""
Intermediate extensions K ⊂ F ⊂ K̃ for a quartic with group S4.

For each G'' inside G' = S3, the field F fixed by G'' is classified as an
extension of Q. Rows group the conjugacy classes by [F:Q].
"""

from hgkit.groups import transitive_group
from hgkit.hopf import ExtensionDatum
from hgkit.lattice import intermediate_report, transitivity_check

E = ExtensionDatum.from_transitive(transitive_group(4, "S4").group())
for row in intermediate_report(E):
    print(f"[F:Q] = {row.degree:<3} {row.verdict}")
    for c in row.classes:
        gens = ", ".join(str(g) for g in c.subgroup.generators)
        print(f"    G'' = <{gens}>  {c.verdict} ({c.decided_by})")
        rec = transitivity_check(E, c.subgroup)
        print(f"        K/Q {rec.K_over_k}, F/K {rec.F_over_K}, F/Q {rec.F_over_k}")
