"""
Injective homomorphisms between permutation groups, built one generator at
a time.

A :class:`PartialHom` is defined on the subgroup generated so far. Adding a
generator re-walks the Cayley graph and checks ``f(s*x) == f(s)*f(x)`` for
every generator ``s`` and every element ``x``; that check on all
(generator, element) pairs is exactly the homomorphism condition. Injectivity
is tracked through the image set.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .perm import Permutation, PermGroup, _perm


class PartialHom:
    __slots__ = ("gens", "imgs", "mapping", "image_set")

    def __init__(self, src_degree: int, dst_degree: int):
        e_src = Permutation.identity(src_degree)
        e_dst = Permutation.identity(dst_degree)
        self.gens: tuple[Permutation, ...] = ()
        self.imgs: tuple[Permutation, ...] = ()
        self.mapping: dict[Permutation, Permutation] = {e_src: e_dst}
        self.image_set: set[Permutation] = {e_dst}

    def __len__(self) -> int:
        return len(self.mapping)

    def extend(self, g: Permutation, y: Permutation,
               reject: Callable[[Permutation, Permutation], bool] | None = None) -> "PartialHom | None":
        """Extend by ``g -> y``; None when no injective extension exists.

        ``reject(x, f(x))`` may veto individual assignments early.
        """
        new = PartialHom.__new__(PartialHom)
        new.gens = self.gens + (g,)
        new.imgs = self.imgs + (y,)
        mapping = dict(self.mapping)
        image_set = set(self.image_set)
        pairs = list(zip(new.gens, new.imgs))

        def visit(x: Permutation, fx: Permutation, steps) -> list | None:
            out = []
            for s, fs in steps:
                sx = _perm(s[j] for j in x)
                fsx = _perm(fs[j] for j in fx)
                known = mapping.get(sx)
                if known is not None:
                    if known != fsx:
                        return None
                    continue
                if fsx in image_set:
                    return None
                if reject is not None and reject(sx, fsx):
                    return None
                mapping[sx] = fsx
                image_set.add(fsx)
                out.append(sx)
            return out

        # old elements only need the new generator; new ones need all of them
        frontier = []
        for x, fx in self.mapping.items():
            got = visit(x, fx, [(g, y)])
            if got is None:
                return None
            frontier.extend(got)
        while frontier:
            nxt = []
            for x in frontier:
                got = visit(x, mapping[x], pairs)
                if got is None:
                    return None
                nxt.extend(got)
            frontier = nxt
        new.mapping = mapping
        new.image_set = image_set
        return new

    def image_group(self, degree: int) -> PermGroup:
        return PermGroup.from_elements(self.image_set, degree)


def order_pools(elements: Sequence[Permutation]) -> dict[int, list[Permutation]]:
    pools: dict[int, list[Permutation]] = {}
    for x in elements:
        pools.setdefault(x.order(), []).append(x)
    return pools


def search_injective_homs(domain_gens: Sequence[Permutation], pools: Sequence[Sequence[Permutation]],
                          src_degree: int, dst_degree: int, *,
                          reject: Callable[[Permutation, Permutation], bool] | None = None,
                          accept: Callable[[PartialHom], bool] | None = None,
                          first_only: bool = False):
    """Depth-first enumeration of injective homs fixing generator images from
    ``pools[i]`` for ``domain_gens[i]``. Yields completed PartialHoms."""
    start = PartialHom(src_degree, dst_degree)
    depth = len(domain_gens)

    def rec(h: PartialHom, i: int):
        if i == depth:
            if accept is None or accept(h):
                yield h
            return
        g = domain_gens[i]
        if g in h.mapping:
            # redundant generator: its image is forced
            yield from rec(_forced(h, g), i + 1)
            return
        for y in pools[i]:
            nh = h.extend(g, y, reject)
            if nh is not None:
                yield from rec(nh, i + 1)

    gen = rec(start, 0)
    if first_only:
        for h in gen:
            yield h
            return
    else:
        yield from gen


def _forced(h: PartialHom, g: Permutation) -> PartialHom:
    new = PartialHom.__new__(PartialHom)
    new.gens = h.gens + (g,)
    new.imgs = h.imgs + (h.mapping[g],)
    new.mapping = h.mapping
    new.image_set = h.image_set
    return new
