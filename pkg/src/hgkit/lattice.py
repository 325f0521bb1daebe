"""
The group-level fundamental theorem: λ(G)-stable subgroups of N, the
subgroups of λ(G) they correspond to, strong-form detection, and reports on
intermediate extensions K ⊂ F ⊂ K̃.

For a stable N' ⊆ N the corresponding field is the fixed field of

    S(N') = { x ∈ λ(G) : x(1) lies in the N'-orbit of 1 },

a subgroup between the image of G' and λ(G) with |S(N')| = |G'|·|N'|. The
descent module recomputes these fields from the Hopf action as a check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import catalog_orders
from .hopf import (ACG, HG_NOT_ACG, NOT_HG, ExtensionDatum, HGStructure, is_hopf_galois)
from .perm import (BoundExceeded, GroupError, PermGroup, _closure, all_subgroups, conjugate,
                   left_coset_action, subgroup_classes)

INTERMEDIATE_MAX_DEGREE = 60


def _is_stable(Np: PermGroup, L: PermGroup) -> bool:
    return all(conjugate(Np, g).element_set == Np.element_set for g in L.generators)


def stable_subgroups(structure: HGStructure, E: ExtensionDatum) -> list[PermGroup]:
    """Subgroups of N invariant under conjugation by λ(G)."""
    return [M for M in all_subgroups(structure.regular_N) if _is_stable(M, E.lambda_G)]


def corresponding_subgroup(Np: PermGroup, E: ExtensionDatum, *, check: bool = True) -> PermGroup:
    """S(N') ⊆ λ(G); its fixed field is the image of N' under the correspondence."""
    if check and not _is_stable(Np, E.lambda_G):
        raise GroupError("subgroup is not stable under λ(G)")
    orbit = Np.orbit(1)
    return PermGroup.from_elements((x for x in E.lambda_G.element_set if x[0] + 1 in orbit), E.n)


@dataclass(frozen=True)
class StableSubgroupRecord:
    subgroup: PermGroup
    corresponding_subgroup: PermGroup
    orbit_of_base: frozenset[int]


def stable_records(structure: HGStructure, E: ExtensionDatum) -> list[StableSubgroupRecord]:
    return [StableSubgroupRecord(M, corresponding_subgroup(M, E, check=False), M.orbit(1))
            for M in stable_subgroups(structure, E)]


def overgroups(L: PermGroup, H: PermGroup) -> list[PermGroup]:
    """All subgroups of L containing H."""
    found = {H.element_set}
    frontier = [H.element_set]
    gens_of = {H.element_set: list(H.generators)}
    while frontier:
        nxt = []
        for K in frontier:
            for x in L.elements:
                if x in K:
                    continue
                gens = gens_of[K] + [x]
                J = frozenset(_closure(gens, L.degree))
                if J not in found:
                    found.add(J)
                    gens_of[J] = gens
                    nxt.append(J)
        frontier = nxt
    return sorted((PermGroup.from_elements(J, L.degree) for J in found), key=PermGroup.sort_key)


@dataclass
class StrongFormReport:
    structure: HGStructure
    image_subgroups: list[PermGroup]
    all_intermediate_subgroups: list[PermGroup]
    holds: bool

    @property
    def missing(self) -> list[PermGroup]:
        img = {S.element_set for S in self.image_subgroups}
        return [S for S in self.all_intermediate_subgroups if S.element_set not in img]


def strong_form_holds(structure: HGStructure, E: ExtensionDatum) -> StrongFormReport:
    image = sorted({corresponding_subgroup(M, E, check=False) for M in stable_subgroups(structure, E)},
                   key=PermGroup.sort_key)
    every = overgroups(E.lambda_G, E.lambda_Gp)
    holds = {S.element_set for S in image} == {S.element_set for S in every}
    return StrongFormReport(structure, image, every, holds)


# -- intermediate extensions ------------------------------------------------

def datum_for_subgroup(G: PermGroup, H: PermGroup) -> ExtensionDatum:
    """The faithful datum (G/core, H/core) of the fixed field of H."""
    image, _ = left_coset_action(G, H)
    return ExtensionDatum(image, image.stabilizer(1))


@dataclass
class IntermediateClass:
    subgroup: PermGroup
    verdict: str
    decided_by: str


@dataclass
class IntermediateRow:
    degree: int
    verdict: str
    classes: list[IntermediateClass] = field(default_factory=list)
    skipped: str | None = None

    def to_record(self) -> dict:
        return {"degree": self.degree, "verdict": self.verdict, "skipped": self.skipped,
                "classes": [{"order": c.subgroup.order, "verdict": c.verdict, "decided_by": c.decided_by,
                             "generators": [str(g) for g in c.subgroup.generators]} for c in self.classes]}


_RANK = {ACG: 2, HG_NOT_ACG: 1, NOT_HG: 0}


def combine_verdicts(verdicts: list[str]) -> str:
    """One verdict per [F:k]; ``∃`` marks that only some classes reach the best one."""
    distinct = set(verdicts)
    if len(distinct) == 1:
        return verdicts[0]
    best = max(distinct, key=_RANK.__getitem__)
    return f"∃ {best}"


def intermediate_report(E: ExtensionDatum, *, max_degree: int = INTERMEDIATE_MAX_DEGREE,
                        skip_large: bool = True) -> list[IntermediateRow]:
    """Rows over proper nontrivial G'' ⊂ G' (up to G-conjugacy), grouped by [F:k]."""
    G, Gp = E.G, E.Gp
    subs = [H for H in all_subgroups(Gp, max_order=max(120, Gp.order)) if 1 < H.order < Gp.order]
    reps = [cls[0] for cls in subgroup_classes(subs, G)]
    by_degree: dict[int, list[PermGroup]] = {}
    for H in reps:
        by_degree.setdefault(G.order // H.order, []).append(H)
    covered = set(catalog_orders())
    rows = []
    for d in sorted(by_degree):
        if d > max_degree or d not in covered:
            reason = f"[F:k] = {d} beyond bound {max_degree}" if d > max_degree else f"no group catalog for order {d}"
            if not skip_large:
                raise BoundExceeded(reason)
            rows.append(IntermediateRow(d, "skipped", [], reason))
            continue
        classes = []
        for H in by_degree[d]:
            v = is_hopf_galois(datum_for_subgroup(G, H))
            classes.append(IntermediateClass(H, v.verdict, v.decided_by))
        rows.append(IntermediateRow(d, combine_verdicts([c.verdict for c in classes]), classes))
    return rows


@dataclass
class TransitivityRecord:
    K_over_k: bool
    F_over_K: bool
    F_over_k: bool

    @property
    def hypothesis(self) -> bool:
        return self.K_over_k and self.F_over_K

    @property
    def consistent(self) -> bool:
        return not self.hypothesis or self.F_over_k

    @property
    def vacuous(self) -> bool:
        return not self.hypothesis


def transitivity_check(E: ExtensionDatum, Gpp: PermGroup) -> TransitivityRecord:
    """For K ⊂ F ⊂ K̃ with F fixed by G'' ⊆ G': HG(K/k) and HG(F/K) ⇒ HG(F/k)."""
    if not Gpp.is_subgroup_of(E.Gp):
        raise GroupError("G'' must lie in G'")
    k_hg = bool(is_hopf_galois(E))
    if Gpp.order == E.Gp.order:
        f_over_K = True
    else:
        f_over_K = bool(is_hopf_galois(datum_for_subgroup(E.Gp, Gpp)))
    if Gpp.order == 1:
        f_hg = True
    else:
        f_hg = bool(is_hopf_galois(datum_for_subgroup(E.G, Gpp)))
    return TransitivityRecord(k_hg, f_over_K, f_hg)
