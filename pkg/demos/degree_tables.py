"""
Which separable extensions of small degree are Hopf Galois?

For each transitive group G of the given degree, with G' a point stabilizer,
print the verdict, how it was reached and the normal complements of G'.

    python demos/degree_tables.py 6
"""

import sys

from hgkit.hopf import classify_degree

degree = int(sys.argv[1]) if len(sys.argv) > 1 else 7

rows = classify_degree(degree)
width = max(len(r.name) for r in rows)
print(f"degree {degree}: {len(rows)} transitive groups\n")
for r in rows:
    comps = ", ".join(r.complements) or "-"
    print(f"{r.name:<{width}}  |G|={r.order:<8}  {r.verdict:<42}  {r.decided_by:<15}  complements: {comps}")

# Groups whose order exceeds every |Hol(N)| with |N| = degree are settled by
# the order argument alone; the rest need the embedding search.
by_order = [r.name for r in rows if r.decided_by == "order-precheck"]
print(f"\nsettled by the order argument: {', '.join(by_order) or 'none'}")
