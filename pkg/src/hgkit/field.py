"""
Exact arithmetic in a number field k(θ) = Q[x]/(f), given by a primitive
element, and splitting-field presentations binding a permutation group to
field automorphisms.

Elements are coordinate vectors in the power basis 1, θ, …, θ^{d−1}.
Linear algebra is done with sympy's DomainMatrix over QQ, so nothing here
ever touches floating point.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field as dfield
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from sympy import QQ, Poly, symbols
from sympy.polys.matrices import DomainMatrix

from .perm import GroupError, Permutation, PermGroup, generate

_x = symbols("x")


class FieldError(ValueError):
    """Invalid field presentation or element."""


def to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _qq(value) -> object:
    q = Fraction(value)
    return QQ(q.numerator, q.denominator)


def vector(values: Iterable) -> DomainMatrix:
    """Column vector over QQ."""
    vals = [_qq(v) for v in values]
    return DomainMatrix([[v] for v in vals], (len(vals), 1), QQ)


def column(M: DomainMatrix, j: int) -> list:
    return [row[j] for row in M.to_list()]


def from_columns(cols: Sequence[Sequence], nrows: int) -> DomainMatrix:
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]
    return DomainMatrix(rows, (nrows, len(cols)), QQ)


def from_rows(rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), QQ)


def row_basis(M: DomainMatrix) -> DomainMatrix:
    """Reduced echelon basis of the row space (deterministic)."""
    if M.shape[0] == 0:
        return M
    R, pivots = M.rref()
    return from_rows(R.to_list()[:len(pivots)], M.shape[1])


def kernel(M: DomainMatrix) -> DomainMatrix:
    """Reduced echelon basis (as rows) of {v : Mv = 0}."""
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return DomainMatrix.eye(ncols, QQ)
    ns = M.nullspace()
    if ns.shape[0] == 0:
        return DomainMatrix.zeros((0, ncols), QQ)
    return row_basis(ns)


def same_row_space(A: DomainMatrix, B: DomainMatrix) -> bool:
    return row_basis(A).to_list() == row_basis(B).to_list()


def rank(M: DomainMatrix) -> int:
    return 0 if M.shape[0] == 0 else M.rank()


@dataclass(frozen=True)
class NumberField:
    """k(θ) with k = Q and θ a root of the monic irreducible ``min_poly``."""

    min_poly: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.min_poly)
        object.__setattr__(self, "min_poly", cs)
        if len(cs) < 2 or cs[-1] != 1:
            raise FieldError("min_poly must be monic of degree at least 1, listed from the constant term")
        if len(cs) > 2 and not Poly(list(reversed(cs)), _x, domain=QQ).is_irreducible:
            raise FieldError("min_poly is reducible over Q")

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    @cached_property
    def companion(self) -> DomainMatrix:
        """Matrix of multiplication by θ."""
        d = self.degree
        rows = [[QQ(0)] * d for _ in range(d)]
        for i in range(1, d):
            rows[i][i - 1] = QQ(1)
        for i in range(d):
            rows[i][d - 1] = -_qq(self.min_poly[i])
        return DomainMatrix(rows, (d, d), QQ)

    def element(self, coeffs: Sequence) -> "FieldElement":
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) > self.degree:
            raise FieldError(f"element has {len(cs)} coordinates, field degree is {self.degree}")
        return FieldElement(self, cs + (Fraction(0),) * (self.degree - len(cs)))

    @property
    def one(self) -> "FieldElement":
        return self.element([1])

    @property
    def zero(self) -> "FieldElement":
        return self.element([])

    @property
    def theta(self) -> "FieldElement":
        return self.element([0, 1]) if self.degree > 1 else self.element([-self.min_poly[0]])

    def multiplication_matrix(self, a: "FieldElement") -> DomainMatrix:
        """Matrix of y ↦ a·y, i.e. a(C) for the companion matrix C (Horner)."""
        d = self.degree
        M = DomainMatrix.zeros((d, d), QQ)
        eye = DomainMatrix.eye(d, QQ)
        for c in reversed(a.coeffs):
            M = self.companion * M + eye * _qq(c)
        return M

    def evaluate(self, poly: Sequence, at: "FieldElement") -> "FieldElement":
        """p(at) for a polynomial p given by its coefficients from the constant term."""
        acc = self.zero
        for c in reversed(list(poly)):
            acc = acc * at + self.element([c])
        return acc


@dataclass(frozen=True)
class FieldElement:
    field: NumberField = dfield(repr=False)
    coeffs: tuple[Fraction, ...]

    def _vec(self) -> DomainMatrix:
        return vector(self.coeffs)

    @classmethod
    def _from_vec(cls, F: NumberField, v: DomainMatrix) -> "FieldElement":
        return cls(F, tuple(to_fraction(q) for q in column(v, 0)))

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        return self._from_vec(self.field, self.field.multiplication_matrix(self) * other._vec())

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise FieldError("zero has no inverse")
        M = self.field.multiplication_matrix(self)
        return self._from_vec(self.field, M.inv() * self.field.one._vec())

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** -k
        out = self.field.one
        for _ in range(k):
            out = out * self
        return out

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                mono = "" if j == 0 else ("θ" if j == 1 else f"θ^{j}")
                coef = str(c) if (j == 0 or c not in (1, -1)) else ("-" if c == -1 else "")
                terms.append(f"{coef}{'*' if coef not in ('', '-') and mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


# -- presentations ---------------------------------------------------------

@dataclass
class SplittingFieldPresentation:
    """K̃ = k(θ) with each named generator of G sending θ to a polynomial in θ."""

    field: NumberField
    generator_images: dict[str, tuple[Fraction, ...]]
    binding: dict[str, str]
    elements: dict[str, tuple[Fraction, ...]] = dfield(default_factory=dict)
    name: str | None = None

    @classmethod
    def from_document(cls, doc: Mapping | str) -> "SplittingFieldPresentation":
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            F = NumberField(tuple(Fraction(c) for c in doc["min_poly"]))
            images = {g: tuple(Fraction(c) for c in cs) for g, cs in doc["generators"].items()}
            binding = dict(doc["binding"])
            elements = {e: tuple(Fraction(c) for c in cs) for e, cs in doc.get("elements", {}).items()}
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, FieldError):
                raise
            raise FieldError(f"malformed field presentation: {exc}") from exc
        if set(images) != set(binding):
            raise FieldError("generator names and binding names differ")
        for g, cs in images.items():
            if len(cs) > F.degree:
                raise FieldError(f"image of θ under {g} has degree ≥ {F.degree}")
        return cls(F, images, binding, elements, doc.get("name"))

    def to_document(self) -> dict:
        doc = {"min_poly": [str(c) for c in self.field.min_poly],
               "generators": {g: [str(c) for c in cs] for g, cs in self.generator_images.items()},
               "binding": dict(self.binding)}
        if self.elements:
            doc["elements"] = {e: [str(c) for c in cs] for e, cs in self.elements.items()}
        if self.name:
            doc["name"] = self.name
        return doc

    def named(self, name: str) -> FieldElement:
        if name not in self.elements:
            raise FieldError(f"no named element {name!r}")
        return self.field.element(self.elements[name])


def load_presentation(path) -> SplittingFieldPresentation:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FieldError(f"{path}: not valid JSON ({exc})") from exc
    return SplittingFieldPresentation.from_document(doc)


@dataclass
class BoundPresentation:
    """A validated presentation: one d×d automorphism matrix per element of G."""

    presentation: SplittingFieldPresentation
    G: PermGroup
    matrices: dict[Permutation, DomainMatrix]

    @property
    def field(self) -> NumberField:
        return self.presentation.field

    @property
    def degree(self) -> int:
        return self.field.degree

    def apply(self, g: Permutation, a: FieldElement) -> FieldElement:
        return FieldElement._from_vec(self.field, self.matrices[g] * a._vec())


def _automorphism_matrix(F: NumberField, image: FieldElement) -> DomainMatrix:
    """Columns: coordinates of image^j, the images of θ^j."""
    cols, p = [], F.one
    for _ in range(F.degree):
        cols.append([_qq(c) for c in p.coeffs])
        p = p * image
    return from_columns(cols, F.degree)


def validate_presentation(P: SplittingFieldPresentation, G: PermGroup) -> BoundPresentation:
    """Check roots, relations and faithfulness, and tabulate every M_g."""
    F = P.field
    if F.degree != G.order:
        raise FieldError(f"[K̃:k] = {F.degree} but |G| = {G.order}")
    gens: list[tuple[Permutation, DomainMatrix]] = []
    for name, cycles in P.binding.items():
        try:
            g = Permutation.from_cycles(cycles, G.degree)
        except (GroupError, ValueError) as exc:
            raise FieldError(f"binding of {name}: {exc}") from exc
        if g not in G:
            raise FieldError(f"binding of {name} is not an element of G")
        image = F.element(P.generator_images[name])
        if not F.evaluate(F.min_poly, image).is_zero:
            raise FieldError(f"image of θ under {name} is not a root of min_poly")
        gens.append((g, _automorphism_matrix(F, image)))
    if generate([g for g, _ in gens], G.degree).order != G.order:
        raise FieldError("bound generators do not generate G")
    d = F.degree
    matrices = {G.identity: DomainMatrix.eye(d, QQ).to_dense()}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for g, Mg in gens:
            y, My = g * x, Mg * matrices[x]
            seen = matrices.get(y)
            if seen is None:
                matrices[y] = My
                queue.append(y)
            elif seen.to_list() != My.to_list():
                raise FieldError("automorphisms violate a defining relation of G")
    if len({tuple(map(tuple, M.to_list())) for M in matrices.values()}) != G.order:
        raise FieldError("G does not act faithfully on the field")
    return BoundPresentation(P, G, matrices)


def fixed_subspace(B: BoundPresentation, S: PermGroup) -> DomainMatrix:
    """Reduced echelon basis (rows, θ-coordinates) of K̃^S."""
    d = B.degree
    eye = DomainMatrix.eye(d, QQ)
    blocks = [B.matrices[g] - eye for g in S.generators]
    if not blocks:
        return eye
    return kernel(DomainMatrix.vstack(*blocks))


def coordinates_in(basis: DomainMatrix, v: Sequence) -> list | None:
    """Coordinates of a QQ row vector in a reduced echelon basis, or None if outside."""
    rows = basis.to_list()
    pivots = [next(j for j, c in enumerate(r) if c) for r in rows]
    coeffs = [v[p] for p in pivots]
    recon = [sum((coeffs[i] * rows[i][j] for i in range(len(rows))), QQ(0)) for j in range(basis.shape[1])]
    return coeffs if recon == list(v) else None
