"""
Abstract-group identification: fingerprints, isomorphism testing and the
embedded catalogs (small groups by order, transitive groups by degree).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .homs import order_pools, search_injective_homs
from .perm import (BoundExceeded, GroupError, Permutation, PermGroup, center,
                   derived_subgroup, generate, small_generating_set)

ISO_BOUND = 120


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    element_order_histogram: tuple[tuple[int, int], ...]
    is_abelian: bool
    center_order: int
    derived_subgroup_order: int

    @property
    def histogram(self) -> dict[int, int]:
        return dict(self.element_order_histogram)


def fingerprint(G: PermGroup) -> GroupFingerprint:
    fp = G.__dict__.get("_fingerprint")
    if fp is None:
        hist = Counter(g.order() for g in G.element_set)
        fp = GroupFingerprint(
            order=G.order,
            element_order_histogram=tuple(sorted(hist.items())),
            is_abelian=G.is_abelian,
            center_order=center(G).order,
            derived_subgroup_order=derived_subgroup(G).order,
        )
        G.__dict__["_fingerprint"] = fp
    return fp


def find_isomorphism(G: PermGroup, H: PermGroup, bound: int = ISO_BOUND) -> dict[Permutation, Permutation] | None:
    """An isomorphism G -> H as an element mapping, or None."""
    if G.order != H.order:
        return None
    if G.order > bound:
        raise BoundExceeded(f"isomorphism test above order {bound}")
    if fingerprint(G) != fingerprint(H):
        return None
    pools = order_pools(H.elements)
    gens = sorted(small_generating_set(G), key=lambda g: (len(pools.get(g.order(), ())), g))
    for h in search_injective_homs(gens, [pools.get(g.order(), []) for g in gens],
                                   G.degree, H.degree, first_only=True):
        if len(h.mapping) == G.order:
            return h.mapping
    return None


def are_isomorphic(G: PermGroup, H: PermGroup, bound: int = ISO_BOUND) -> bool:
    return find_isomorphism(G, H, bound) is not None


# -- catalogs -------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: int
    generators: tuple[str, ...]
    order: int
    transitive: bool = False
    notes: str = ""
    _group: list = field(default_factory=list, compare=False, repr=False, hash=False)

    @property
    def has_generators(self) -> bool:
        return bool(self.generators) or self.order == 1

    def group(self) -> PermGroup:
        if not self.has_generators:
            raise GroupError(f"catalog entry {self.name} carries order metadata only")
        if not self._group:
            gens = [Permutation.from_cycles(s, self.degree) for s in self.generators]
            G = generate(gens, self.degree, name=self.name)
            if G.order != self.order:
                raise GroupError(f"catalog entry {self.name}: order {G.order} != {self.order}")
            if self.transitive and not G.is_transitive():
                raise GroupError(f"catalog entry {self.name} is not transitive")
            self._group.append(G)
        return self._group[0]

    def to_record(self) -> dict:
        rec = {"name": self.name, "degree": self.degree, "generators": list(self.generators), "order": self.order}
        if self.notes:
            rec["notes"] = self.notes
        return rec


def _load(filename: str) -> list[dict]:
    return json.loads(resources.files("hgkit.data").joinpath(filename).read_text())


@lru_cache(maxsize=None)
def _small_groups() -> dict[int, tuple[CatalogEntry, ...]]:
    out: dict[int, list[CatalogEntry]] = {}
    for rec in _load("small_groups.json"):
        e = CatalogEntry(rec["name"], rec["degree"], tuple(rec["generators"]), rec["order"], notes=rec.get("notes", ""))
        out.setdefault(e.order, []).append(e)
    return {m: tuple(v) for m, v in out.items()}


@lru_cache(maxsize=None)
def _transitive_groups() -> dict[int, tuple[CatalogEntry, ...]]:
    out: dict[int, list[CatalogEntry]] = {}
    for rec in _load("transitive_groups.json"):
        e = CatalogEntry(rec["name"], rec["degree"], tuple(rec["generators"]), rec["order"],
                         transitive=True, notes=rec.get("notes", ""))
        out.setdefault(e.degree, []).append(e)
    return {d: tuple(v) for d, v in out.items()}


def catalog_orders() -> list[int]:
    return sorted(_small_groups())


def transitive_degrees() -> list[int]:
    return sorted(_transitive_groups())


def groups_of_order(m: int) -> list[CatalogEntry]:
    """One representative per isomorphism class of groups of order m."""
    table = _small_groups()
    if m not in table:
        raise GroupError(f"no embedded group data for order {m} (have {sorted(table)})")
    entries = list(table[m])
    for e in entries:
        e.group()
    return entries


def transitive_groups(degree: int) -> list[CatalogEntry]:
    """Conjugacy-class representatives of transitive subgroups of S_degree."""
    table = _transitive_groups()
    if degree not in table:
        raise GroupError(f"no transitive group data for degree {degree} (have {sorted(table)})")
    entries = list(table[degree])
    for e in entries:
        if e.has_generators:
            e.group()
    return entries


def transitive_group(degree: int, name: str) -> CatalogEntry:
    for e in transitive_groups(degree):
        if e.name == name:
            return e
    raise GroupError(f"no transitive group {name!r} of degree {degree}")


def small_group(name: str) -> CatalogEntry:
    for entries in _small_groups().values():
        for e in entries:
            if e.name == name:
                e.group()
                return e
    raise GroupError(f"no catalog group named {name!r}")


def identify(G: PermGroup) -> str:
    """Catalog name of G's isomorphism class, or ``unknown(order=m)``."""
    m = G.order
    table = _small_groups()
    if m not in table or m > ISO_BOUND:
        return f"unknown(order={m})"
    fp = fingerprint(G)
    for e in groups_of_order(m):
        H = e.group()
        if fingerprint(H) == fp and are_isomorphic(H, G):
            return e.name
    return f"unknown(order={m})"


def catalog_document(*, degree: int | None = None, order: int | None = None) -> list[dict]:
    if degree is not None:
        return [e.to_record() for e in transitive_groups(degree)]
    if order is not None:
        return [e.to_record() for e in groups_of_order(order)]
    raise GroupError("need a degree or an order")
