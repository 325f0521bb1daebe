"""
Permutations and permutation groups on {1..n}.

Everything here is exhaustive: groups are small enough (a few thousand
elements at most) that we materialize the full element set and cache it.
Points are 1-based in every public interface; internally a permutation is
a tuple of 0-based images so that hashing and ordering are plain tuple ops.

Composition is right-to-left, ``(p * q)(x) = p(q(x))``.
"""

from __future__ import annotations

import json
import re
from functools import cached_property, reduce
from math import factorial, gcd
from typing import Iterable, Iterator, Sequence


class GroupError(ValueError):
    pass


class BoundExceeded(GroupError):
    """An exhaustive computation was asked for a group above its size bound."""


_CYCLE = re.compile(r"\(([^()]*)\)")


class Permutation(tuple):
    """A bijection of {1..degree}.

    Stored as the tuple of 0-based images; ``p(i)`` and ``p.images`` use
    1-based points.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        img = tuple(int(i) - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise GroupError(f"not a bijection of 1..{len(img)}: {[i + 1 for i in img]}")
        return tuple.__new__(cls, img)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return _perm(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree: int | None = None) -> "Permutation":
        """Build from cycle notation, either a string like ``"(1,2,3)(4,5)"``
        or a list of point sequences."""
        if isinstance(cycles, str):
            text = cycles.strip()
            if _CYCLE.sub("", text).strip():
                raise GroupError(f"cannot parse cycle notation {cycles!r}")
            cycles = [
                [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
                for body in _CYCLE.findall(text)
            ]
        cycles = [list(c) for c in cycles]
        top = max((max(c) for c in cycles if c), default=0)
        if degree is None:
            degree = max(top, 1)
        if top > degree:
            raise GroupError(f"point {top} exceeds degree {degree}")
        img = list(range(degree))
        seen = set()
        for c in cycles:
            for a in c:
                if a < 1 or a in seen:
                    raise GroupError(f"bad or repeated point {a} in {cycles}")
                seen.add(a)
            for a, b in zip(c, c[1:] + c[:1]):
                img[a - 1] = b - 1
        return _perm(img)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self)

    def __call__(self, point: int) -> int:
        return self[point - 1] + 1

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise GroupError("degree mismatch in composition")
        return _perm(self[j] for j in other)

    __rmul__ = None

    def __add__(self, other):
        raise TypeError("permutations do not add")

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return _perm(inv)

    __invert__ = inverse

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self[i]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), (len(c) for c in self.cycles()), 1)

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, j in enumerate(self) if i != j)

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({str(self)!r}, degree={len(self)})"


def _perm(img) -> Permutation:
    # unchecked constructor for internal hot paths
    return tuple.__new__(Permutation, img)


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    return Permutation.from_cycles(text, degree)


def _closure(gens: Sequence[Permutation], degree: int, limit: int | None = None) -> set[Permutation]:
    ident = Permutation.identity(degree)
    els = {ident}
    frontier = [ident]
    gens = [g for g in gens if not g.is_identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _perm(g[j] for j in x)
                if y not in els:
                    els.add(y)
                    nxt.append(y)
        if limit is not None and len(els) > limit:
            raise BoundExceeded(f"closure exceeded {limit} elements")
        frontier = nxt
    return els


class PermGroup:
    """A finitely generated subgroup of Sym(degree).

    The element set is materialized on first use and cached; elements are
    kept in canonical (lexicographic image) order. Groups compare equal
    when they have the same degree and element set.
    """

    def __init__(self, generators: Iterable[Permutation] = (), degree: int | None = None,
                 *, name: str | None = None, order: int | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation.from_cycles(g, degree) for g in generators]
        degrees = {len(g) for g in gens}
        if degree is not None:
            degrees.add(degree)
        if len(degrees) > 1:
            raise GroupError(f"generators of mixed degree {sorted(degrees)}")
        if not degrees:
            raise GroupError("degree required for a group without generators")
        self.degree = degrees.pop()
        self._gens = tuple(gens)
        self.name = name
        self._order_hint = order

    @classmethod
    def from_elements(cls, elements: Iterable[Permutation], degree: int, *, name: str | None = None) -> "PermGroup":
        """Wrap a set already known to be a group (not re-verified)."""
        els = frozenset(elements)
        grp = cls((), degree, name=name)
        grp.__dict__["element_set"] = els
        grp._gens = None
        return grp

    # -- element set -----------------------------------------------------

    @cached_property
    def element_set(self) -> frozenset[Permutation]:
        return frozenset(_closure(self._gens, self.degree))

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(sorted(self.element_set))

    @property
    def order(self) -> int:
        if "element_set" not in self.__dict__ and self._order_hint is not None:
            return self._order_hint
        return len(self.element_set)

    @cached_property
    def generators(self) -> tuple[Permutation, ...]:
        if self._gens is not None:
            return self._gens
        return small_generating_set(self)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, p) -> bool:
        return p in self.element_set

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.order == other.order and self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash((self.degree, self.element_set))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        gens = ", ".join(str(g) for g in self.generators)
        return f"<PermGroup{label} degree={self.degree} order={self.order} gens=[{gens}]>"

    def sort_key(self):
        return (self.order, self.elements)

    # -- basic structure ------------------------------------------------

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def orbit(self, point: int) -> frozenset[int]:
        return orbit(self, point)

    def stabilizer(self, point: int) -> "PermGroup":
        return stabilizer(self, point)

    def is_transitive(self) -> bool:
        return len(orbit(self, 1)) == self.degree

    def to_document(self) -> dict:
        doc = {"degree": self.degree, "generators": [str(g) for g in self.generators]}
        if self.name:
            doc["name"] = self.name
        return doc


def generate(generators: Sequence[Permutation], degree: int | None = None, name: str | None = None) -> PermGroup:
    """Closure of ``generators`` under composition and inversion."""
    grp = PermGroup(generators, degree, name=name)
    grp.element_set  # noqa: B018 - force materialization so errors surface here
    return grp


def small_generating_set(G: PermGroup) -> tuple[Permutation, ...]:
    """Greedy generating set: walk elements by decreasing order, keep those
    that enlarge the current closure."""
    target = G.order
    gens: list[Permutation] = []
    current = {G.identity}
    for g in sorted(G.elements, key=lambda p: (-p.order(), p)):
        if len(current) == target:
            break
        if g in current:
            continue
        gens.append(g)
        current = _closure(gens, G.degree)
    return tuple(gens)


# -- group documents ------------------------------------------------------

def group_from_document(doc: dict | str) -> PermGroup:
    if isinstance(doc, str):
        doc = json.loads(doc)
    degree = int(doc["degree"])
    gens = [Permutation.from_cycles(s, degree) for s in doc.get("generators", [])]
    return generate(gens, degree, name=doc.get("name"))


def load_group(path) -> PermGroup:
    with open(path) as fh:
        return group_from_document(json.load(fh))


def group_to_document(G: PermGroup) -> dict:
    return G.to_document()


# -- orbits, stabilizers, cosets -----------------------------------------

def orbit(G: PermGroup, point: int) -> frozenset[int]:
    seen = {point - 1}
    frontier = [point - 1]
    while frontier:
        nxt = []
        for x in frontier:
            for g in G.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(i + 1 for i in seen)


def stabilizer(G: PermGroup, point: int) -> PermGroup:
    i = point - 1
    return PermGroup.from_elements((g for g in G.element_set if g[i] == i), G.degree)


def conjugate(H: PermGroup, g: Permutation) -> PermGroup:
    """g H g^-1."""
    gi = g.inverse()
    return PermGroup.from_elements((g * h * gi for h in H.element_set), H.degree)


def is_normal_in(H: PermGroup, G: PermGroup) -> bool:
    if not H.is_subgroup_of(G):
        raise GroupError("not a subgroup")
    return all(g * h * g.inverse() in H for g in G.generators for h in H.generators)


def is_regular(N: PermGroup, domain_size: int) -> bool:
    return N.degree == domain_size and N.order == domain_size and len(orbit(N, 1)) == domain_size


def is_normalized_by(N: PermGroup, G: PermGroup) -> bool:
    """True iff g N g^-1 = N for every generator g of G."""
    if N.degree != G.degree:
        raise GroupError("degree mismatch")
    els = N.element_set
    for g in G.generators:
        gi = g.inverse()
        if any(g * h * gi not in els for h in N.generators):
            return False
    return True


def core(G: PermGroup, Gp: PermGroup) -> PermGroup:
    """Largest normal subgroup of G contained in Gp."""
    if not Gp.is_subgroup_of(G):
        raise GroupError("Gp is not a subgroup of G")
    els = set(Gp.element_set)
    for conj in conjugacy_orbit(Gp, G):
        els &= conj.element_set
    return PermGroup.from_elements(els, G.degree)


def conjugacy_orbit(H: PermGroup, G: PermGroup) -> list[PermGroup]:
    """All distinct G-conjugates of H, H first."""
    seen = {H.element_set: H}
    frontier = [H]
    while frontier:
        nxt = []
        for K in frontier:
            for g in G.generators:
                C = conjugate(K, g)
                if C.element_set not in seen:
                    seen[C.element_set] = C
                    nxt.append(C)
        frontier = nxt
    return list(seen.values())


class CosetSpace:
    """Left cosets gG' of a subgroup, enumerated by their smallest element.

    The coset G' itself contains the identity, the global minimum, so it is
    always point 1.
    """

    def __init__(self, parent: PermGroup, subgroup: PermGroup):
        if not subgroup.is_subgroup_of(parent):
            raise GroupError("not a subgroup of the parent group")
        self.parent = parent
        self.subgroup = subgroup
        label: dict[Permutation, int] = {}
        reps: list[Permutation] = []
        for g in parent.elements:
            if g in label:
                continue
            idx = len(reps)
            reps.append(g)
            for h in subgroup.element_set:
                label[g * h] = idx
        self.representatives = tuple(reps)
        self._label = label
        self.base_point_index = 0

    def __len__(self) -> int:
        return len(self.representatives)

    def point_of(self, g: Permutation) -> int:
        """1-based point of the coset gG'."""
        return self._label[g] + 1

    def action(self, g: Permutation) -> Permutation:
        """lambda(g): xG' -> gxG' as a permutation of the coset points."""
        return _perm(self._label[g * x] for x in self.representatives)


def left_coset_action(G: PermGroup, Gp: PermGroup) -> tuple[PermGroup, CosetSpace]:
    """Action of G on the left cosets of Gp; the base coset is point 1."""
    space = CosetSpace(G, Gp)
    gens = [space.action(g) for g in G.generators]
    image = generate(gens, len(space))
    return image, space


# -- subgroups ------------------------------------------------------------

class _Table:
    """Index-based multiplication table for fast closures inside a fixed group."""

    def __init__(self, G: PermGroup):
        self.elements = G.elements
        self.index = {g: i for i, g in enumerate(self.elements)}
        idx = self.index
        els = self.elements
        self.mul = [[idx[_perm(a[j] for j in b)] for b in els] for a in els]
        self.identity = idx[G.identity]

    def closure(self, gens: Iterable[int], start: Iterable[int] = ()) -> frozenset[int]:
        gens = [g for g in gens if g != self.identity]
        els = set(start) | {self.identity}
        frontier = list(els)
        mul = self.mul
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul[g][x]
                    if y not in els:
                        els.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(els)


def _table(G: PermGroup) -> _Table:
    tab = G.__dict__.get("_table")
    if tab is None:
        tab = _Table(G)
        G.__dict__["_table"] = tab
    return tab


def all_subgroups(G: PermGroup, max_order: int = 120) -> list[PermGroup]:
    """Every subgroup of G exactly once, sorted by (order, elements).

    Cyclic subgroups first, then closed under joins with cyclic subgroups.
    """
    if G.order > max_order:
        raise BoundExceeded(f"|G| = {G.order} exceeds subgroup bound {max_order}")
    tab = _table(G)
    cyclic: dict[frozenset[int], int] = {}
    for i in range(len(tab.elements)):
        cyclic.setdefault(tab.closure([i]), i)
    found = {C: (g,) for C, g in cyclic.items()}
    frontier = list(found.items())
    while frontier:
        nxt = []
        for A, gens in frontier:
            for C, g in cyclic.items():
                if C <= A:
                    continue
                J = tab.closure(gens + (g,), A)
                if J not in found:
                    found[J] = gens + (g,)
                    nxt.append((J, gens + (g,)))
        frontier = nxt
    groups = [PermGroup.from_elements((tab.elements[i] for i in S), G.degree) for S in found]
    groups.sort(key=PermGroup.sort_key)
    return groups


def conjugacy_classes(G: PermGroup) -> list[frozenset[Permutation]]:
    """Element conjugacy classes, each sorted by its smallest member."""
    remaining = set(G.element_set)
    classes = []
    for x in G.elements:
        if x not in remaining:
            continue
        cls = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in G.generators:
                    z = g * y * g.inverse()
                    if z not in cls:
                        cls.add(z)
                        nxt.append(z)
            frontier = nxt
        remaining -= cls
        classes.append(frozenset(cls))
    return classes


def normal_closure(G: PermGroup, elements: Iterable[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing ``elements``."""
    gens = [x for x in elements if not x.is_identity()]
    els = _closure(gens, G.degree)
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            gi = g.inverse()
            for h in list(gens):
                c = g * h * gi
                if c not in els:
                    gens.append(c)
                    els = _closure(gens, G.degree)
                    changed = True
    return PermGroup.from_elements(els, G.degree)


def normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """All normal subgroups: joins of normal closures of conjugacy classes."""
    basic = {}
    for cls in conjugacy_classes(G):
        N = normal_closure(G, [min(cls)])
        basic.setdefault(N.element_set, N)
    found = dict(basic)
    frontier = list(found.values())
    while frontier:
        nxt = []
        for A in frontier:
            for B in basic.values():
                if B.element_set <= A.element_set:
                    continue
                J = PermGroup.from_elements(_closure(list(A.generators) + list(B.generators), G.degree), G.degree)
                if J.element_set not in found:
                    found[J.element_set] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=PermGroup.sort_key)


def subgroup_classes(subgroups: Iterable[PermGroup], G: PermGroup) -> list[list[PermGroup]]:
    """Partition ``subgroups`` into G-conjugacy classes (in input order)."""
    classes: list[list[PermGroup]] = []
    assigned: dict[frozenset, int] = {}
    for H in subgroups:
        if H.element_set in assigned:
            classes[assigned[H.element_set]].append(H)
            continue
        idx = len(classes)
        classes.append([H])
        for C in conjugacy_orbit(H, G):
            assigned.setdefault(C.element_set, idx)
    return classes


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup((), 1, name="S1")
    gens = [Permutation.from_cycles([list(range(1, n + 1))], n), Permutation.from_cycles([[1, 2]], n)]
    return PermGroup(gens, n, name=f"S{n}", order=factorial(n))


def cyclic_group(n: int) -> PermGroup:
    return PermGroup([Permutation.from_cycles([list(range(1, n + 1))], n)], n, name=f"C{n}", order=n)


def is_solvable(G: PermGroup) -> bool:
    H = G
    while H.order > 1:
        D = derived_subgroup(H)
        if D.order == H.order:
            return False
        H = D
    return True


def derived_subgroup(G: PermGroup) -> PermGroup:
    comms = {a.inverse() * b.inverse() * a * b for a in G.generators for b in G.generators}
    return normal_closure(G, comms)


def center(G: PermGroup) -> PermGroup:
    gens = G.generators
    return PermGroup.from_elements((z for z in G.element_set if all(z * g == g * z for g in gens)), G.degree)
