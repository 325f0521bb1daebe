"""
Aut(N) and Hol(N) = N ⋊ Aut(N) as permutation groups on the elements of N.

N's elements are labelled in canonical order, so the identity is always
point 1. Automorphisms then become permutations fixing 1, and left
translations give the regular copy of N inside the holomorph.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from pathlib import Path

from .homs import order_pools, search_injective_homs
from .perm import (BoundExceeded, GroupError, Permutation, PermGroup, _perm,
                   generate, small_generating_set)

AUT_BOUND = 64


def _relabel(N: PermGroup) -> tuple[tuple[Permutation, ...], dict[Permutation, int]]:
    labels = N.elements
    return labels, {x: i for i, x in enumerate(labels)}


def _enumerate_automorphisms(N: PermGroup) -> list[Permutation]:
    """Every automorphism as a permutation of N's canonical labels."""
    labels, index = _relabel(N)
    if N.order == 1:
        return [Permutation.identity(1)]
    pools = order_pools(labels)
    gens = small_generating_set(N)
    auts = []
    for h in search_injective_homs(gens, [pools[g.order()] for g in gens], N.degree, N.degree):
        if len(h.mapping) != N.order:
            continue
        auts.append(_perm(index[h.mapping[x]] for x in labels))
    return auts


def automorphism_group(N: PermGroup, bound: int = AUT_BOUND) -> PermGroup:
    """Aut(N) acting on the |N| canonical element labels (point 1 = identity)."""
    return holomorph(N, bound).automorphism_part


@dataclass(frozen=True, eq=False)
class HolomorphGroup:
    N: PermGroup
    n_labels: tuple[Permutation, ...]
    left_regular_N: PermGroup
    automorphism_part: PermGroup

    @property
    def degree(self) -> int:
        return len(self.n_labels)

    @property
    def order(self) -> int:
        return self.degree * self.automorphism_part.order

    @cached_property
    def ambient(self) -> PermGroup:
        gens = list(self.left_regular_N.generators) + list(self.automorphism_part.generators)
        els = frozenset(self.elements)
        G = PermGroup(gens, self.degree, name=f"Hol({self.N.name})" if self.N.name else None)
        G.__dict__["element_set"] = els
        return G

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        """Every element exactly once, as translation ∘ automorphism."""
        out = []
        for t in self.left_regular_N.elements:
            for a in self.automorphism_part.elements:
                out.append(_perm(t[j] for j in a))
        return tuple(sorted(out))

    @cached_property
    def pools(self) -> dict[int, list[Permutation]]:
        return order_pools(self.elements)

    @cached_property
    def split_pools(self) -> dict[tuple[int, bool], list[Permutation]]:
        """Elements keyed by (order, fixes point 1)."""
        pools: dict[tuple[int, bool], list[Permutation]] = {}
        for h in self.elements:
            pools.setdefault((h.order(), h[0] == 0), []).append(h)
        return pools

    def label(self, point: int) -> Permutation:
        """The element of N carried by a 1-based point."""
        return self.n_labels[point - 1]


def left_regular(N: PermGroup) -> tuple[PermGroup, tuple[Permutation, ...]]:
    """λ(N) on N's canonical labels: λ_ν(x) = νx."""
    labels, index = _relabel(N)
    gens = [_perm(index[nu * x] for x in labels) for nu in N.generators]
    return generate(gens, len(labels)), labels


def right_regular(N: PermGroup) -> PermGroup:
    """ρ(N) on N's canonical labels: ρ_ν(x) = xν⁻¹."""
    labels, index = _relabel(N)
    gens = [_perm(index[x * nu.inverse()] for x in labels) for nu in N.generators]
    return generate(gens, len(labels))


# -- memo cache -----------------------------------------------------------

_cache: dict[tuple, HolomorphGroup] = {}
_cache_lock = threading.Lock()
_key_locks: dict[tuple, threading.Lock] = {}


def _disk_path(key_hash: str) -> Path | None:
    root = os.environ.get("HGKIT_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"aut-{key_hash}.json"


def _key(N: PermGroup) -> tuple:
    return (N.degree, N.element_set)


def _key_hash(N: PermGroup) -> str:
    h = hashlib.sha256()
    h.update(str(N.degree).encode())
    for x in N.elements:
        h.update(bytes(x))
    return h.hexdigest()[:32]


def holomorph(N: PermGroup, bound: int = AUT_BOUND) -> HolomorphGroup:
    """Hol(N) with λ(N) regular normal and Aut(N) = stabilizer of point 1."""
    if N.order > bound:
        raise BoundExceeded(f"|N| = {N.order} exceeds automorphism bound {bound}")
    key = _key(N)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    with _cache_lock:
        lock = _key_locks.setdefault(key, threading.Lock())
    with lock:
        hit = _cache.get(key)
        if hit is None:
            hit = _compute(N)
            _cache[key] = hit
    return hit


def _compute(N: PermGroup) -> HolomorphGroup:
    lam, labels = left_regular(N)
    m = len(labels)
    path = _disk_path(_key_hash(N))
    aut = None
    if path is not None and path.exists():
        try:
            doc = json.loads(path.read_text())
            aut = generate([Permutation.from_cycles(s, m) for s in doc["generators"]], m)
            if aut.order != doc["order"]:
                aut = None
        except (OSError, ValueError, KeyError, GroupError):
            aut = None
    if aut is None:
        auts = _enumerate_automorphisms(N)
        aut = PermGroup.from_elements(auts, m)
        if path is not None:
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                doc = {"order": aut.order, "generators": [str(g) for g in aut.generators]}
                path.write_text(json.dumps(doc))
            except OSError:
                pass
    return HolomorphGroup(N=N, n_labels=labels, left_regular_N=lam, automorphism_part=aut)


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()
        _key_locks.clear()


# -- order formulas -------------------------------------------------------

def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def holomorph_order_formula(kind: str, n: int) -> int:
    """|Hol(C_n)| = nφ(n); |Hol(D_{2n})| = 2n²φ(n) for n ≥ 3."""
    if kind == "cyclic":
        if n < 1:
            raise ValueError("n must be positive")
        return n * euler_phi(n)
    if kind == "dihedral":
        if n < 3:
            raise ValueError("dihedral formula needs n >= 3")
        return 2 * n * n * euler_phi(n)
    raise ValueError(f"unknown kind {kind!r}")
