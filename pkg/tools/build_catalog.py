"""Regenerate src/hgkit/data/{small_groups,transitive_groups}.json.

Small groups are written down as abstract constructions (cyclic groups,
direct and semidirect products, dicyclic groups) and stored through their
left regular representation, identity first. The script checks that every
order has the expected number of classes and that entries of equal order are
pairwise non-isomorphic, so a wrong construction cannot slip in silently.

Run from the repository root:  python3 tools/build_catalog.py
"""

from __future__ import annotations

import json
import random
import sys
from itertools import combinations
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from hgkit.groups import are_isomorphic  # noqa: E402
from hgkit.perm import Permutation, PermGroup, generate, small_generating_set  # noqa: E402

DATA = ROOT / "src" / "hgkit" / "data"

# number of isomorphism classes per order
EXPECTED = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5, 13: 1,
            14: 2, 15: 1, 16: 14, 18: 5, 20: 5, 21: 2, 24: 15, 30: 4, 36: 14, 40: 14, 60: 13}


# -- abstract groups: (elements, mul) with the identity listed first --------

class Abstract:
    def __init__(self, gens, mul, identity):
        self.mul = mul
        els = [identity]
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(g, x)
                    if y not in seen:
                        seen.add(y)
                        els.append(y)
                        nxt.append(y)
            frontier = nxt
        self.elements = els
        self.gens = list(gens)
        self.identity = identity

    def regular(self) -> PermGroup:
        idx = {x: i for i, x in enumerate(self.elements)}
        perms = [Permutation([idx[self.mul(g, x)] + 1 for x in self.elements]) for g in self.gens]
        return generate(perms, len(self.elements))


def cyc(n):
    return Abstract([1 % n] if n > 1 else [], lambda a, b: (a + b) % n, 0)


def prod(*groups):
    def mul(a, b):
        return tuple(G.mul(x, y) for G, x, y in zip(groups, a, b))
    ident = tuple(G.identity for G in groups)
    gens = []
    for i, G in enumerate(groups):
        for g in G.gens:
            gens.append(ident[:i] + (g,) + ident[i + 1:])
    return Abstract(gens, mul, ident)


def semi(A, B, act):
    """A ⋊ B where act(b, a) is the image of a under the automorphism b."""
    def mul(p, q):
        return (A.mul(p[0], act(p[1], q[0])), B.mul(p[1], q[1]))
    gens = [(a, B.identity) for a in A.gens] + [(A.identity, b) for b in B.gens]
    return Abstract(gens, mul, (A.identity, B.identity))


def meta(n, m, r):
    """Z_n ⋊ Z_m, the generator of Z_m acting as x -> r x."""
    assert pow(r, m, n) == 1 % n
    return semi(cyc(n), cyc(m), lambda b, a: (a * pow(r, b, n)) % n)


def dih(n):
    return meta(n, 2, n - 1)


def dic(n):
    """Dicyclic group of order 4n: a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1."""
    m = 2 * n

    def mul(p, q):
        k, e = p
        l, f = q
        k2 = (k + (l if e == 0 else -l)) % m
        if e and f:
            k2 = (k2 + n) % m
        return (k2, (e + f) % 2)
    return Abstract([(1, 0), (0, 1)], mul, (0, 0))


def perm(*cycles, degree):
    gens = [Permutation.from_cycles(c, degree) for c in cycles]
    return Abstract(gens, lambda a, b: a * b, Permutation.identity(degree))


def lin(mat, mods):
    """Automorphism of a product of cyclic groups given by an integer matrix
    acting on coordinate tuples (row i gives the image coordinate i)."""
    def f(v):
        return tuple(sum(mat[i][j] * v[j] for j in range(len(v))) % mods[i] for i in range(len(mods)))
    return f


def powers(f):
    """act(b, a) for B = Z_m acting through the automorphism f."""
    def act(b, a):
        for _ in range(b):
            a = f(a)
        return a
    return act


def abel(*ns):
    A = prod(*[cyc(n) for n in ns])
    return A


def sl23():
    # SL(2,3) acting on the 8 nonzero vectors of F_3^2
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    idx = {v: i + 1 for i, v in enumerate(vecs)}

    def mat(a, b, c, d):
        return Permutation([idx[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vecs])
    gens = [mat(1, 1, 0, 1), mat(0, 2, 1, 0)]
    return Abstract(gens, lambda p, q: p * q, Permutation.identity(8))


S3 = lambda: perm("(1,2,3)", "(1,2)", degree=3)  # noqa: E731
A4 = lambda: perm("(1,2,3)", "(1,2)(3,4)", degree=4)  # noqa: E731
S4 = lambda: perm("(1,2,3,4)", "(1,2)", degree=4)  # noqa: E731
A5 = lambda: perm("(1,2,3,4,5)", "(1,2,3)", degree=5)  # noqa: E731
D8p = lambda: perm("(1,2,3,4)", "(1,3)", degree=4)  # noqa: E731


def catalog():
    Z = cyc
    c = {}
    c[1] = [("C1", Z(1))]
    c[2] = [("C2", Z(2))]
    c[3] = [("C3", Z(3))]
    c[4] = [("C4", Z(4)), ("V4", abel(2, 2))]
    c[5] = [("C5", Z(5))]
    c[6] = [("C6", Z(6)), ("S3", S3())]
    c[7] = [("C7", Z(7))]
    c[8] = [("C8", Z(8)), ("C4×C2", abel(4, 2)), ("C2×C2×C2", abel(2, 2, 2)), ("D8", dih(4)), ("Q8", dic(2))]
    c[9] = [("C9", Z(9)), ("C3×C3", abel(3, 3))]
    c[10] = [("C10", Z(10)), ("D_{2·5}", dih(5))]
    c[11] = [("C11", Z(11))]
    c[12] = [("C12", Z(12)), ("C6×C2", abel(6, 2)), ("D_{2·6}", dih(6)), ("A4", A4()), ("Dic3", dic(3))]
    c[13] = [("C13", Z(13))]
    c[14] = [("C14", Z(14)), ("D_{2·7}", dih(7))]
    c[15] = [("C15", Z(15))]
    c[16] = [
        ("C16", Z(16)),
        ("C4×C4", abel(4, 4)),
        ("(C4×C2)⋊C2", semi(abel(4, 2), Z(2), powers(lin([[1, 0], [1, 1]], (4, 2))))),
        ("C4⋊C4", meta(4, 4, 3)),
        ("C8×C2", abel(8, 2)),
        ("M16", meta(8, 2, 5)),
        ("D_{2·8}", dih(8)),
        ("SD16", meta(8, 2, 3)),
        ("Q16", dic(4)),
        ("C4×C2×C2", abel(4, 2, 2)),
        ("D8×C2", prod(dih(4), Z(2))),
        ("Q8×C2", prod(dic(2), Z(2))),
        ("C4∘D8", semi(abel(4, 2), Z(2), powers(lin([[1, 2], [0, 1]], (4, 2))))),
        ("C2^4", abel(2, 2, 2, 2)),
    ]
    c[18] = [
        ("C18", Z(18)),
        ("C6×C3", abel(6, 3)),
        ("D_{2·9}", dih(9)),
        ("F18", prod(S3(), Z(3))),
        ("(C3×C3)⋊C2", semi(abel(3, 3), Z(2), powers(lin([[2, 0], [0, 2]], (3, 3))))),
    ]
    c[20] = [("C20", Z(20)), ("C10×C2", abel(10, 2)), ("D_{2·10}", dih(10)), ("Dic5", dic(5)), ("F20", meta(5, 4, 2))]
    c[21] = [("C21", Z(21)), ("F21", meta(7, 3, 2))]
    # C3 ⋊ D8 with kernel <r^2, s>: r inverts, s centralizes
    d8 = dih(4)
    c[24] = [
        ("C3⋊C8", meta(3, 8, 2)),
        ("C24", Z(24)),
        ("SL(2,3)", sl23()),
        ("Dic6", dic(6)),
        ("C4×S3", prod(Z(4), S3())),
        ("D_{2·12}", dih(12)),
        ("C2×Dic3", prod(Z(2), dic(3))),
        ("C3⋊D8", semi(Z(3), d8, lambda b, a: (a * (2 if b[0] % 2 else 1)) % 3)),
        ("C12×C2", abel(12, 2)),
        ("C3×D8", prod(Z(3), d8)),
        ("C3×Q8", prod(Z(3), dic(2))),
        ("S4", S4()),
        ("C2×A4", prod(Z(2), A4())),
        ("C2×C2×S3", prod(Z(2), Z(2), S3())),
        ("C6×C2×C2", abel(6, 2, 2)),
    ]
    c[30] = [("C30", Z(30)), ("D_{2·15}", dih(15)), ("C5×S3", prod(Z(5), S3())), ("C3×D_{2·5}", prod(Z(3), dih(5)))]
    c[36] = [
        ("Dic9", dic(9)),
        ("C36", Z(36)),
        ("(C2×C2)⋊C9", semi(abel(2, 2), Z(9), powers(lin([[0, 1], [1, 1]], (2, 2))))),
        ("D_{2·18}", dih(18)),
        ("C18×C2", abel(18, 2)),
        ("C3×Dic3", prod(Z(3), dic(3))),
        ("(C3×C3)⋊C4", semi(abel(3, 3), Z(4), powers(lin([[2, 0], [0, 2]], (3, 3))))),
        ("C12×C3", abel(12, 3)),
        ("F36", semi(abel(3, 3), Z(4), powers(lin([[0, 1], [2, 0]], (3, 3))))),
        ("F_{18}:2", prod(S3(), S3())),
        ("C3×A4", prod(Z(3), A4())),
        ("C6×S3", prod(Z(6), S3())),
        ("C2×((C3×C3)⋊C2)", prod(Z(2), semi(abel(3, 3), Z(2), powers(lin([[2, 0], [0, 2]], (3, 3)))))),
        ("C6×C6", abel(6, 6)),
    ]
    c[40] = [
        ("C5⋊C8", meta(5, 8, 4)),
        ("C40", Z(40)),
        ("C5⋊₂C8", meta(5, 8, 2)),
        ("Dic10", dic(10)),
        ("C4×D_{2·5}", prod(Z(4), dih(5))),
        ("D_{2·20}", dih(20)),
        ("C2×Dic5", prod(Z(2), dic(5))),
        ("C5⋊D8", semi(Z(5), d8, lambda b, a: (a * (4 if b[0] % 2 else 1)) % 5)),
        ("C20×C2", abel(20, 2)),
        ("C5×D8", prod(Z(5), d8)),
        ("C5×Q8", prod(Z(5), dic(2))),
        ("C2×F20", prod(Z(2), meta(5, 4, 2))),
        ("C2×C2×D_{2·5}", prod(Z(2), Z(2), dih(5))),
        ("C10×C2×C2", abel(10, 2, 2)),
    ]
    c[60] = [
        ("C5×Dic3", prod(Z(5), dic(3))),
        ("C3×Dic5", prod(Z(3), dic(5))),
        ("Dic15", dic(15)),
        ("C60", Z(60)),
        ("A5", A5()),
        ("C3×F20", prod(Z(3), meta(5, 4, 2))),
        ("C15⋊C4", meta(15, 4, 2)),
        ("S3×D_{2·5}", prod(S3(), dih(5))),
        ("C5×A4", prod(Z(5), A4())),
        ("C6×D_{2·5}", prod(Z(6), dih(5))),
        ("C10×S3", prod(Z(10), S3())),
        ("D_{2·30}", dih(30)),
        ("C30×C2", abel(30, 2)),
    ]
    return c


def build_small() -> list[dict]:
    records = []
    for m, entries in sorted(catalog().items()):
        assert len(entries) == EXPECTED[m], (m, len(entries))
        groups = []
        for name, A in entries:
            G = A.regular()
            assert G.order == m, (name, G.order, m)
            groups.append((name, G))
        for (n1, G1), (n2, G2) in combinations(groups, 2):
            assert not are_isomorphic(G1, G2), f"{n1} ≅ {n2}"
        for name, G in groups:
            gens = small_generating_set(G)
            records.append({"name": name, "degree": m, "order": m, "generators": [str(g) for g in gens]})
        print(f"order {m}: {len(groups)} classes ok", flush=True)
    return records


# -- transitive groups --------------------------------------------------------

def _find(degree, base, order, rng, tries=20000):
    """Random search for an element t with <base, t> of the given order."""
    for _ in range(tries):
        img = list(range(1, degree + 1))
        rng.shuffle(img)
        t = Permutation(img)
        if t.order() not in (2, 3):
            continue
        gens = base + [t]
        try:
            from hgkit.perm import _closure
            if len(_closure(gens, degree, limit=order)) == order:
                return str(t)
        except Exception:  # closure exceeded the target order
            continue
    raise RuntimeError(f"no generator found for order {order}")


TRANSITIVE = {
    2: [("C2", ["(1,2)"], 2)],
    3: [("C3", ["(1,2,3)"], 3), ("S3", ["(1,2,3)", "(2,3)"], 6)],
    4: [
        ("C4", ["(1,2,3,4)"], 4),
        ("V4", ["(1,2)(3,4)", "(1,3)(2,4)"], 4),
        ("D_{2·4}", ["(1,2,3,4)", "(1,3)"], 8),
        ("A4", ["(1,2,3)", "(2,3,4)"], 12),
        ("S4", ["(1,2,3,4)", "(1,2)"], 24),
    ],
    5: [
        ("C5", ["(1,2,3,4,5)"], 5),
        ("D_{2·5}", ["(1,2,3,4,5)", "(2,5)(3,4)"], 10),
        ("F20", ["(1,2,3,4,5)", "(2,3,5,4)"], 20),
        ("A5", ["(1,2,3,4,5)", "(1,2,3)"], 60),
        ("S5", ["(1,2,3,4,5)", "(1,2)"], 120),
    ],
    6: [
        ("C6", ["(1,2,3,4,5,6)"], 6),
        ("S3", ["(1,2,3)(4,5,6)", "(1,4)(2,6)(3,5)"], 6),
        ("D_{2·6}", ["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"], 12),
        ("A4", ["(1,2,3)(4,5,6)", "(2,5)(3,6)"], 12),
        ("F18", ["(1,2,3)", "(1,4)(2,5)(3,6)"], 18),
        ("2A4", ["(1,2,3)(4,5,6)", "(2,5)(3,6)", "(1,4)(2,5)(3,6)"], 24),
        # S4 on the six 2-subsets of {1,2,3,4}: {12,13,14,23,24,34} -> 1..6
        ("S4(6d)", ["(1,4,6,3)(2,5)", "(2,4)(3,5)"], 24),
        # S4 as rotations of a cube on its faces, antipodal pairs 1-4, 2-5, 3-6
        ("S4(6c)", ["(1,2,3)(4,5,6)", "(2,3,5,6)"], 24),
        ("F_{18}:2", ["(1,2,3)", "(1,4)(2,5)(3,6)", "(2,3)(5,6)"], 36),
        ("F36", ["(1,2,3)", "(4,5,6)", "(1,4)(2,5,3,6)"], 36),
        ("2S4", ["(1,2,3)(4,5,6)", "(1,4)", "(2,3)(5,6)"], 48),
        ("A5", ["(1,2,3,4,5)", "(1,6)(2,5)"], 60),
        ("F_{36}:2", ["(1,2,3)", "(1,2)", "(1,4)(2,5)(3,6)"], 72),
        ("S5", ["(1,2,3,4,5)", "(1,6)(2,5)", "(2,3,5,4)"], 120),
        ("A6", ["(1,2,3,4,5)", "(4,5,6)"], 360),
        ("S6", ["(1,2,3,4,5,6)", "(1,2)"], 720),
    ],
    7: [
        ("C7", ["(1,2,3,4,5,6,7)"], 7),
        ("D_{2·7}", ["(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)"], 14),
        ("F21", ["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"], 21),
        ("F42", ["(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"], 42),
        ("PSL(2,7)", ["(1,2,3,4,5,6,7)", None], 168),
        ("A7", ["(1,2,3,4,5,6,7)", "(1,2,3)"], 2520),
        ("S7", ["(1,2,3,4,5,6,7)", "(1,2)"], 5040),
    ],
    11: [
        ("C11", ["(1,2,3,4,5,6,7,8,9,10,11)"], 11),
        # points 1..11 stand for x = 0..10; reflections and multipliers fix x = 0
        ("D_{2·11}", ["(1,2,3,4,5,6,7,8,9,10,11)", "(2,11)(3,10)(4,9)(5,8)(6,7)"], 22),
        ("F55", ["(1,2,3,4,5,6,7,8,9,10,11)", "(2,4,10,6,5)(3,7,8,11,9)"], 55),
        ("F110", ["(1,2,3,4,5,6,7,8,9,10,11)", "(2,3,5,9,6,11,10,8,4,7)"], 110),
        ("PSL(2,11)", "psl211", 660),
        ("M11", [], 7920),
        ("A11", [], 19958400),
        ("S11", [], 39916800),
    ],
}


def _psl211(rng):
    """PSL(2,11) on the 11 cosets of an A5, found inside the projective-line action."""
    from hgkit.perm import _closure, left_coset_action
    pts = list(range(11)) + ["inf"]
    idx = {x: i + 1 for i, x in enumerate(pts)}

    def mob(f):
        return Permutation([idx[f(x)] for x in pts])
    inv = {x: pow(x, -1, 11) for x in range(1, 11)}
    gens = [
        mob(lambda x: "inf" if x == "inf" else (x + 1) % 11),
        mob(lambda x: "inf" if x == "inf" else (4 * x) % 11),
        mob(lambda x: 0 if x == "inf" else ("inf" if x == 0 else (-inv[x]) % 11)),
    ]
    P = generate(gens, 12)
    assert P.order == 660
    els = P.elements
    while True:
        a, b = rng.choice(els), rng.choice(els)
        try:
            sub = _closure([a, b], 12, limit=60)
        except Exception:
            continue
        if len(sub) == 60:
            break
    image, _ = left_coset_action(P, PermGroup.from_elements(sub, 12))
    return [str(g) for g in small_generating_set(image)]


def _cycle_type_histogram(G: PermGroup):
    from collections import Counter
    return tuple(sorted(Counter(g.cycle_type() for g in G.element_set).items()))


def build_transitive() -> list[dict]:
    rng = random.Random(20240601)
    records = []
    for degree, rows in sorted(TRANSITIVE.items()):
        invariants = {}
        for name, gens, order in rows:
            if gens == "psl211":
                gens = _psl211(rng)
            elif None in gens:
                base = [Permutation.from_cycles(g, degree) for g in gens if g is not None]
                gens = [g for g in gens if g is not None] + [_find(degree, base, order, rng)]
            if gens and order <= 5040:
                G = generate([Permutation.from_cycles(g, degree) for g in gens], degree)
                assert G.order == order, (name, G.order, order)
                assert G.is_transitive(), name
                gens = [str(g) for g in small_generating_set(G)] if len(gens) > 2 else gens
                key = (order, _cycle_type_histogram(G)) if order <= 720 else (order,)
                assert key not in invariants, f"{name} looks conjugate to {invariants.get(key)}"
                invariants[key] = name
            records.append({"name": name, "degree": degree, "order": order, "generators": gens})
        print(f"degree {degree}: {len(rows)} transitive classes ok", flush=True)
    return records


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    trans = build_transitive()
    (DATA / "transitive_groups.json").write_text(json.dumps(trans, indent=1, ensure_ascii=False) + "\n")
    small = build_small()
    (DATA / "small_groups.json").write_text(json.dumps(small, indent=1, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
