"""
Deciding and counting Hopf Galois structures.

An extension K/k is modelled by G = Gal(K̃/k) and the subgroup G' fixing K.
Structures are regular subgroups of Sym(G/G') normalized by λ(G). Two
searches produce them independently:

* ``gp_regular_subgroups`` looks for them directly inside S_n;
* ``byott_embedding_classes`` embeds G into Hol(N) for each N of order n,
  requiring the image of G' to be exactly the stabilizer of the identity of N.

The decision procedure tries a normal complement first, then rules out types
N by order (|G| must divide |Hol(N)|), then searches for an embedding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable

from .groups import CatalogEntry, GroupError, groups_of_order, identify, transitive_groups
from .holomorph import HolomorphGroup, holomorph
from .homs import PartialHom
from .perm import (BoundExceeded, Permutation, PermGroup, _closure, _perm, core,
                   generate, is_normalized_by, is_regular, left_coset_action, normal_subgroups,
                   small_generating_set)

GALOIS = "Galois"
ACG = "almost classically Galois"
HG_NOT_ACG = "Hopf Galois not almost classically Galois"
NOT_HG = "not Hopf Galois"

GP_MAX_DEGREE = 8


# -- extension data -------------------------------------------------------

class ExtensionDatum:
    """A pair (G, G') with G' core-free; K/k has degree n = [G:G']."""

    def __init__(self, G: PermGroup, Gp: PermGroup, *, name: str | None = None):
        if not Gp.is_subgroup_of(G):
            raise GroupError("G' is not a subgroup of G")
        if core(G, Gp).order != 1:
            raise GroupError("G' has nontrivial core in G; (G, G') is not a Galois-closure datum")
        self.G = G
        self.Gp = Gp
        self.name = name or G.name
        self.lambda_G, self.space = left_coset_action(G, Gp)
        self.n = len(self.space)
        self.base_point = 1

    @classmethod
    def from_transitive(cls, G: PermGroup, *, name: str | None = None) -> "ExtensionDatum":
        """Degree-n datum with G' the stabilizer of point 1."""
        if not G.is_transitive():
            raise GroupError("group is not transitive")
        return cls(G, G.stabilizer(1), name=name)

    @classmethod
    def galois(cls, G: PermGroup, *, name: str | None = None) -> "ExtensionDatum":
        return cls(G, PermGroup((), G.degree), name=name)

    @property
    def is_galois(self) -> bool:
        return self.Gp.order == 1

    @property
    def lambda_Gp(self) -> PermGroup:
        """Image of G' in λ(G): the stabilizer of the base point."""
        key = "_lambda_Gp"
        if key not in self.__dict__:
            self.__dict__[key] = self.lambda_G.stabilizer(1)
        return self.__dict__[key]

    def lam(self, g: Permutation) -> Permutation:
        return self.space.action(g)

    def image(self, H: PermGroup) -> PermGroup:
        """λ(H) for a subgroup H of G."""
        return PermGroup.from_elements({self.space.action(h) for h in H.element_set}, self.n)

    @property
    def rho_G(self) -> PermGroup:
        """ρ(G) in the Galois case: ρ(σ)(τ) = τσ⁻¹."""
        if not self.is_galois:
            raise GroupError("ρ(G) is defined for Galois data only")
        sp = self.space
        gens = [_perm(sp.point_of(t * s.inverse()) - 1 for t in sp.representatives) for s in self.G.generators]
        return generate(gens, self.n)

    def __repr__(self) -> str:
        return f"<ExtensionDatum {self.name or ''} |G|={self.G.order} n={self.n}>"


# -- structures -----------------------------------------------------------

@dataclass(eq=False)
class HGStructure:
    regular_N: PermGroup
    type_name: str
    is_classical: bool = False
    is_canonical_nonclassical: bool = False
    acg_witness: PermGroup | None = None
    embedding: tuple[Permutation, ...] | None = field(default=None, repr=False)

    def verify(self, E: ExtensionDatum) -> bool:
        return is_regular(self.regular_N, E.n) and is_normalized_by(self.regular_N, E.lambda_G)

    def to_record(self) -> dict:
        rec = {"type": self.type_name, "generators": [str(g) for g in self.regular_N.generators]}
        if self.is_classical:
            rec["classical"] = True
        if self.is_canonical_nonclassical:
            rec["canonical_nonclassical"] = True
        if self.acg_witness is not None:
            rec["almost_classical"] = True
        return rec


@dataclass
class CountReport:
    per_type: dict[str, int]
    total: int
    witnesses: list[HGStructure]

    def to_record(self) -> dict:
        return {"total": self.total, "per_type": dict(self.per_type),
                "witnesses": [w.to_record() for w in self.witnesses]}


def _annotate(E: ExtensionDatum, N: PermGroup, type_name: str, embedding=None) -> HGStructure:
    s = HGStructure(N, type_name, embedding=embedding)
    if E.is_galois:
        s.is_classical = N == E.rho_G
        s.is_canonical_nonclassical = (not E.G.is_abelian) and N == E.lambda_G
    for M in normal_complement(E.G, E.Gp):
        if N == centralizer_in_symmetric(E.image(M)):
            s.acg_witness = M
            break
    return s


def centralizer_in_symmetric(R: PermGroup) -> PermGroup:
    """Centralizer in Sym(n) of a regular group R.

    For R regular, an element commuting with R is fixed by where it sends
    point 1: c(r(1)) = r(c(1)). So the centralizer is again regular.
    """
    n = R.degree
    by_point = {r[0]: r for r in R.element_set}
    if len(by_point) != n or R.order != n:
        raise GroupError("centralizer shortcut needs a regular group")
    out = []
    for b in range(n):
        # c(r(1)) = r(c(1)) = r(b)
        img = [0] * n
        for p, r in by_point.items():
            img[p] = r[b]
        c = _perm(img)
        if all(c * r == r * c for r in R.generators):
            out.append(c)
    return PermGroup.from_elements(out, n)


# -- step 0 -----------------------------------------------------------------

def normal_complement(G: PermGroup, Gp: PermGroup) -> list[PermGroup]:
    """Normal subgroups N of G with N ∩ G' = 1 and |N||G'| = |G|."""
    target = G.order // Gp.order
    out = []
    for N in normal_subgroups(G):
        if N.order == target and not (N.element_set & Gp.element_set) - {G.identity}:
            out.append(N)
    return out


def is_almost_classically_galois(E: ExtensionDatum) -> tuple[bool, list[PermGroup]]:
    comps = normal_complement(E.G, E.Gp)
    return bool(comps), comps


# -- direct search in S_n -----------------------------------------------------

def _semiregular(x: Permutation) -> bool:
    lengths = {len(c) for c in x.cycles()} if not x.is_identity() else set()
    n = len(x)
    # cycles() omits fixed points; a semiregular element moves every point
    return not x.is_identity() and len(x.support()) == n and len(lengths) == 1


def _is_semiregular_group(els: Iterable[Permutation], n: int) -> bool:
    return all(x.is_identity() or _semiregular(x) for x in els)


def gp_regular_subgroups(E: ExtensionDatum, max_degree: int = GP_MAX_DEGREE) -> list[PermGroup]:
    """Every regular subgroup of Sym(n) normalized by λ(G), found inside S_n.

    Such an N is a union of λ(G)-conjugacy orbits, so it is a join of the
    groups generated by single orbits. Only semiregular pieces are kept.
    """
    n = E.n
    if n > max_degree:
        raise BoundExceeded(f"direct search limited to degree {max_degree}")
    if n == 1:
        return [PermGroup((), 1)]
    L = E.lambda_G
    lgens = [(g, g.inverse()) for g in L.generators]
    atoms: dict[frozenset, tuple[Permutation, ...]] = {}
    seen: set[Permutation] = set()
    for img in permutations(range(n)):
        x = _perm(img)
        if x in seen or not _semiregular(x) or n % x.order():
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g, gi in lgens:
                    z = g * y * gi
                    if z not in orbit:
                        orbit.add(z)
                        nxt.append(z)
            frontier = nxt
        seen |= orbit
        try:
            els = _closure(sorted(orbit), n, limit=n)
        except BoundExceeded:
            continue
        if len(els) <= n and n % len(els) == 0 and _is_semiregular_group(els, n):
            atoms.setdefault(frozenset(els), tuple(sorted(orbit)))
    found = dict(atoms)
    frontier = list(atoms.items())
    while frontier:
        nxt = []
        for A, gA in frontier:
            for B, gB in atoms.items():
                if B <= A:
                    continue
                try:
                    J = frozenset(_closure(list(gA) + list(gB), n, limit=n))
                except BoundExceeded:
                    continue
                if J not in found and n % len(J) == 0 and _is_semiregular_group(J, n):
                    found[J] = gA + gB
                    nxt.append((J, gA + gB))
        frontier = nxt
    regular = [PermGroup.from_elements(J, n) for J in found if len(J) == n]
    return sorted(regular, key=PermGroup.sort_key)


# -- Byott embeddings -------------------------------------------------------

@dataclass
class EmbeddingClasses:
    N: CatalogEntry
    count: int
    representatives: list[tuple[Permutation, ...]]
    domain_generators: tuple[Permutation, ...]
    hol: HolomorphGroup | None
    decided_by: str = "byott-search"

    @property
    def e(self) -> int:
        return self.count


def _conj_orbits(pool: list[Permutation], A: PermGroup) -> list[tuple[Permutation, list[Permutation]]]:
    """Orbit representatives of A acting on ``pool`` by conjugation, each with
    its centralizer in A."""
    gens = [(a, a.inverse()) for a in A.generators]
    remaining = set(pool)
    out = []
    for y in pool:
        if y not in remaining:
            continue
        orb = {y}
        frontier = [y]
        while frontier:
            nxt = []
            for z in frontier:
                for a, ai in gens:
                    w = a * z * ai
                    if w not in orb:
                        orb.add(w)
                        nxt.append(w)
            frontier = nxt
        remaining -= orb
        cent = [a for a in A.elements if a * y == y * a]
        out.append((y, cent))
    return out


def _generator_sequence(E: ExtensionDatum, costs: dict[tuple[int, bool], int]) -> tuple[Permutation, ...]:
    """Generators of λ(G): those of the base stabilizer first, then extra
    elements picked to keep the candidate image pools small."""
    L, Lp = E.lambda_G, E.lambda_Gp
    gens = list(small_generating_set(Lp)) if Lp.order > 1 else []
    current = _closure(gens, E.n) if gens else {L.identity}

    def cost(x):
        return costs.get((x.order(), x[0] == 0), 0)

    candidates = sorted((x for x in L.elements if x[0] != 0), key=lambda x: (cost(x), x))
    while len(current) < L.order:
        best = None
        tried = 0
        for x in candidates:
            if x in current:
                continue
            size = len(_closure(gens + [x], E.n))
            key = (cost(x), -size)
            if best is None or key < best[0]:
                best = (key, x, size)
            tried += 1
            if tried >= 12 and best is not None and cost(x) > best[0][0]:
                break
        gens.append(best[1])
        current = _closure(gens, E.n)
    return tuple(gens)


def byott_embedding_classes(E: ExtensionDatum, N: CatalogEntry, *, first_only: bool = False) -> EmbeddingClasses:
    """Classes, modulo Aut(N)-conjugation, of injective β: G → Hol(N) with
    β(G') equal to the stabilizer of the identity inside β(G)."""
    n = E.n
    if N.order != n:
        raise GroupError(f"type N has order {N.order}, extension has degree {n}")
    NG = N.group()
    hol = holomorph(NG)
    L = E.lambda_G
    if hol.order % L.order or hol.automorphism_part.order % E.lambda_Gp.order:
        return EmbeddingClasses(N, 0, [], (), hol, decided_by="order-precheck")
    pools = hol.split_pools
    costs = {k: len(v) for k, v in pools.items()}
    gens = _generator_sequence(E, costs)
    A = hol.automorphism_part
    level_pools = [pools.get((g.order(), g[0] == 0), []) for g in gens]

    def reject(x: Permutation, fx: Permutation) -> bool:
        return (x[0] == 0) != (fx[0] == 0)

    reps: dict[tuple, tuple[Permutation, ...]] = {}
    start = PartialHom(n, n)
    depth = len(gens)
    stop = False

    def rec(h: PartialHom, i: int, cent: list[Permutation]):
        nonlocal stop
        if stop:
            return
        if i == depth:
            if len(h.mapping) != L.order:
                return
            imgs = h.imgs
            key = (imgs[0],) + min(tuple(c * y * c.inverse() for y in imgs[1:]) for c in cent)
            if key not in reps:
                reps[key] = imgs
                if first_only:
                    stop = True
            return
        for y in level_pools[i]:
            nh = h.extend(gens[i], y, reject)
            if nh is not None:
                rec(nh, i + 1, cent)
                if stop:
                    return

    if depth == 0:
        # trivial group: the only datum is n = 1
        reps[()] = ()
    else:
        for y, cent in _conj_orbits(level_pools[0], A):
            nh = start.extend(gens[0], y, reject)
            if nh is None:
                continue
            rec(nh, 1, cent)
            if stop:
                break
    ordered = [reps[k] for k in sorted(reps)]
    return EmbeddingClasses(N, len(ordered), ordered, gens, hol)


def structure_from_embedding(E: ExtensionDatum, classes: EmbeddingClasses, images: tuple[Permutation, ...]) -> HGStructure:
    """Regular subgroup of Sym(G/G') attached to β, using the point bijection
    φ(gG') = β(g)(e_N)."""
    n = E.n
    hol = classes.hol
    h = PartialHom(n, n)
    for g, y in zip(classes.domain_generators, images):
        h = h.extend(g, y)
        if h is None:
            raise GroupError("images do not define a homomorphism")
    phi = [None] * n
    for x, bx in h.mapping.items():
        phi[x[0]] = bx[0]
    if None in phi:
        raise GroupError("embedding is not transitive on the points")
    phi_inv = [0] * n
    for p, q in enumerate(phi):
        phi_inv[q] = p
    gens = [_perm(phi_inv[nu[phi[p]]] for p in range(n)) for nu in hol.left_regular_N.generators]
    N = generate(gens, n) if gens else PermGroup((), n)
    return _annotate(E, N, classes.N.name, embedding=tuple(images))


def structure_from_regular(E: ExtensionDatum, N: PermGroup) -> HGStructure:
    """Wrap a given regular subgroup of Sym(G/G') normalized by λ(G)."""
    if N.degree != E.n or not is_regular(N, E.n):
        raise GroupError("N is not a regular subgroup of Sym(G/G')")
    if not is_normalized_by(N, E.lambda_G):
        raise GroupError("N is not normalized by λ(G)")
    return _annotate(E, N, identify(N))


def _types(n: int) -> list[CatalogEntry]:
    return groups_of_order(n)


def count_structures(E: ExtensionDatum) -> CountReport:
    """s(G,G') = Σ_N e(G,N) with one witness structure per class."""
    per_type: dict[str, int] = {}
    witnesses: list[HGStructure] = []
    for N in _types(E.n):
        cls = byott_embedding_classes(E, N)
        if cls.count:
            per_type[N.name] = cls.count
            for imgs in cls.representatives:
                witnesses.append(structure_from_embedding(E, cls, imgs))
    return CountReport(per_type, sum(per_type.values()), witnesses)


def all_structures(E: ExtensionDatum) -> list[HGStructure]:
    return count_structures(E).witnesses


# -- decision -------------------------------------------------------------

@dataclass
class Verdict:
    hopf_galois: bool
    verdict: str
    decided_by: str
    trace: list[str]
    complements: list[PermGroup] = field(default_factory=list)
    witness: HGStructure | None = None

    def __bool__(self) -> bool:
        return self.hopf_galois


def order_precheck(n: int, group_order: int) -> list[CatalogEntry]:
    """Types N of order n with |G| dividing |Hol(N)|."""
    out = []
    for N in _types(n):
        if holomorph(N.group()).order % group_order == 0:
            out.append(N)
    return out


_verdicts: dict[tuple, Verdict] = {}


def clear_verdict_cache() -> None:
    _verdicts.clear()


def is_hopf_galois(E: ExtensionDatum) -> Verdict:
    """Step 0, the order pre-check, then a Byott search; memoized on (G, G')."""
    key = (E.G.degree, E.G.element_set, E.Gp.element_set)
    hit = _verdicts.get(key)
    if hit is None:
        hit = _verdicts.setdefault(key, _decide(E))
    return hit


def _decide(E: ExtensionDatum) -> Verdict:
    trace: list[str] = []
    if E.is_galois:
        trace.append("step0: G' trivial, Galois")
        return Verdict(True, GALOIS, "step0", trace, [E.G])
    ok, comps = is_almost_classically_galois(E)
    if ok:
        trace.append(f"step0: normal complement of order {comps[0].order} found")
        return Verdict(True, ACG, "step0", trace, comps)
    trace.append("step0: no normal complement")
    candidates = order_precheck(E.n, E.G.order)
    trace.append("order-precheck: candidate types " + (", ".join(N.name for N in candidates) or "none"))
    if not candidates:
        return Verdict(False, NOT_HG, "order-precheck", trace)
    for N in candidates:
        cls = byott_embedding_classes(E, N, first_only=True)
        if cls.count:
            trace.append(f"byott-search: embedding into Hol({N.name}) found")
            s = structure_from_embedding(E, cls, cls.representatives[0])
            return Verdict(True, HG_NOT_ACG, "byott-search", trace, [], s)
        trace.append(f"byott-search: no embedding into Hol({N.name})")
    return Verdict(False, NOT_HG, "byott-search", trace)


def decide_by_order(n: int, group_order: int) -> Verdict:
    """Verdict for a datum known only by |G|; conclusive only when no type
    survives the order pre-check."""
    candidates = order_precheck(n, group_order)
    trace = ["order-precheck: candidate types " + (", ".join(N.name for N in candidates) or "none")]
    if candidates:
        raise GroupError(f"order data alone does not decide |G| = {group_order} in degree {n}")
    return Verdict(False, NOT_HG, "order-precheck", trace)


@dataclass
class ClassificationRow:
    name: str
    order: int
    verdict: str
    decided_by: str
    complements: list[str] = field(default_factory=list)
    witnesses: list[str] = field(default_factory=list)
    per_type_counts: dict[str, int] | None = None

    def to_record(self) -> dict:
        return {"name": self.name, "order": self.order, "verdict": self.verdict,
                "decided_by": self.decided_by, "complements": list(self.complements),
                "witnesses": list(self.witnesses), "per_type_counts": self.per_type_counts}

    @classmethod
    def from_record(cls, rec: dict) -> "ClassificationRow":
        return cls(rec["name"], rec["order"], rec["verdict"], rec["decided_by"],
                   list(rec.get("complements", [])), list(rec.get("witnesses", [])),
                   rec.get("per_type_counts"))


def classify_extension(E: ExtensionDatum, *, name: str | None = None, counts: bool = False) -> ClassificationRow:
    v = is_hopf_galois(E)
    comps = [identify(M) for M in v.complements] if v.verdict in (GALOIS, ACG) else []
    witnesses: list[str] = []
    if v.witness is not None:
        witnesses = [str(g) for g in v.witness.regular_N.generators]
    elif v.complements:
        R = centralizer_in_symmetric(E.image(v.complements[0]))
        witnesses = [str(g) for g in small_generating_set(R)]
    per_type = count_structures(E).per_type if counts and v.hopf_galois else ({} if counts else None)
    return ClassificationRow(name or E.name or "", E.G.order, v.verdict, v.decided_by, comps, witnesses, per_type)


def classify_degree(n: int, *, counts: bool = False) -> list[ClassificationRow]:
    """One row per transitive group of degree n, with G' a point stabilizer."""
    rows = []
    for entry in transitive_groups(n):
        if not entry.has_generators:
            v = decide_by_order(n, entry.order)
            rows.append(ClassificationRow(entry.name, entry.order, v.verdict, v.decided_by,
                                          per_type_counts={} if counts else None))
            continue
        E = ExtensionDatum.from_transitive(entry.group(), name=entry.name)
        rows.append(classify_extension(E, name=entry.name, counts=counts))
    return rows
