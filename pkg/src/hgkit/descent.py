"""
The Hopf algebra H = K̃[N]^G of a Hopf Galois structure, its action on K,
sub-Hopf algebras and their fixed fields, all by exact linear algebra.

G acts on K̃[N] semilinearly: g·(Σ u_η η) = Σ g(u_η) λ(g)ηλ(g)⁻¹. An element
is fixed iff u_{λ(g)ηλ(g)⁻¹} = g(u_η) for every generator g, a linear system
in the n·d rational unknowns (d = [K̃:k]).

The action of η ∈ N on x ∈ K goes through a coset of G':

    canonical   η·x = g(x) with gG' = η⁻¹(G')   (the standard action)
    direct      η·x = g(x) with gG' = η(G')

``direct`` is ``canonical`` precomposed with the antipode η ↦ η⁻¹, so it is a
module action only when N is abelian. Both give the same fixed fields.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .field import (BoundPresentation, FieldElement, FieldError, NumberField, SplittingFieldPresentation,
                    coordinates_in, fixed_subspace, from_columns, from_rows, kernel, rank, row_basis,
                    to_fraction, validate_presentation)
from .hopf import ExtensionDatum, HGStructure, structure_from_regular
from .lattice import corresponding_subgroup, stable_subgroups
from .perm import Permutation, PermGroup, all_subgroups, generate, group_from_document

CANONICAL = "canonical"
DIRECT = "direct"
CONVENTIONS = {
    CANONICAL: "η acts through the coset η⁻¹(G'): (Σ c_η η)·x = Σ c_η g_η(x), g_η G' = η⁻¹(G')",
    DIRECT: "η acts through the coset η(G'): the canonical action composed with the antipode η ↦ η⁻¹",
}


class DescentError(ValueError):
    """Inconsistent structure, presentation or Hopf algebra element."""


# -- group algebra ------------------------------------------------------------

@dataclass(frozen=True)
class GroupAlgebraElement:
    """Σ u_η η in K̃[N], with coefficients indexed by the elements of N."""

    field: NumberField = dfield(repr=False)
    coefficients: dict[Permutation, FieldElement]

    @classmethod
    def from_terms(cls, F: NumberField, terms: Iterable[tuple[FieldElement | int | Fraction, Permutation]]
                   ) -> "GroupAlgebraElement":
        coeffs: dict[Permutation, FieldElement] = {}
        for c, eta in terms:
            c = c if isinstance(c, FieldElement) else F.element([c])
            coeffs[eta] = coeffs.get(eta, F.zero) + c
        return cls(F, {eta: c for eta, c in coeffs.items() if not c.is_zero})

    def coefficient(self, eta: Permutation) -> FieldElement:
        return self.coefficients.get(eta, self.field.zero)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        terms = list((c, e) for e, c in self.coefficients.items())
        terms += [(c, e) for e, c in other.coefficients.items()]
        return GroupAlgebraElement.from_terms(self.field, terms)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(self.field.element([-1]))

    def scale(self, c: FieldElement) -> "GroupAlgebraElement":
        return GroupAlgebraElement.from_terms(self.field, ((c * u, e) for e, u in self.coefficients.items()))

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        terms = [(a * b, e * f) for e, a in self.coefficients.items() for f, b in other.coefficients.items()]
        return GroupAlgebraElement.from_terms(self.field, terms)

    def epsilon(self) -> FieldElement:
        """Counit: the sum of the coefficients."""
        total = self.field.zero
        for c in self.coefficients.values():
            total = total + c
        return total

    def antipode(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement.from_terms(self.field, ((c, e.inverse()) for e, c in self.coefficients.items()))

    def act(self, B: BoundPresentation, E: ExtensionDatum, g: Permutation) -> "GroupAlgebraElement":
        """The semilinear action of g ∈ G."""
        lg = E.lam(g)
        lgi = lg.inverse()
        return GroupAlgebraElement.from_terms(
            self.field, ((B.apply(g, c), lg * e * lgi) for e, c in self.coefficients.items()))

    def to_vector(self, N_elements: Sequence[Permutation]) -> list:
        out = []
        for eta in N_elements:
            out.extend(QQ(c.numerator, c.denominator) for c in self.coefficient(eta).coeffs)
        extra = set(self.coefficients) - set(N_elements)
        if extra:
            raise DescentError("element is supported outside N")
        return out

    @classmethod
    def from_vector(cls, F: NumberField, N_elements: Sequence[Permutation], v: Sequence) -> "GroupAlgebraElement":
        d = F.degree
        terms = [(F.element([to_fraction(q) for q in v[i * d:(i + 1) * d]]), eta)
                 for i, eta in enumerate(N_elements)]
        return cls.from_terms(F, terms)

    def to_record(self) -> dict:
        return {str(e): [str(c) for c in u.coeffs] for e, u in sorted(self.coefficients.items())}

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(f"({c})·{e}" for e, c in sorted(self.coefficients.items()))


@dataclass
class HopfAlgebraBasis:
    """A k-basis of H ⊆ K̃[N], kept as reduced echelon rows over n·d coordinates."""

    field: NumberField = dfield(repr=False)
    N_elements: tuple[Permutation, ...]
    matrix: DomainMatrix = dfield(repr=False)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def basis(self) -> list[GroupAlgebraElement]:
        return [GroupAlgebraElement.from_vector(self.field, self.N_elements, row) for row in self.matrix.to_list()]

    def __len__(self) -> int:
        return self.n

    def contains(self, h: GroupAlgebraElement) -> bool:
        return self.coordinates(h) is not None

    def coordinates(self, h: GroupAlgebraElement) -> list[Fraction] | None:
        if self.n == 0:
            return [] if not h.coefficients else None
        c = coordinates_in(self.matrix, h.to_vector(self.N_elements))
        return None if c is None else [to_fraction(q) for q in c]

    def same_span(self, elements: Sequence[GroupAlgebraElement]) -> bool:
        """Row-space equality with the k-span of ``elements``."""
        rows = from_rows([h.to_vector(self.N_elements) for h in elements], self.matrix.shape[1])
        return row_basis(rows).to_list() == self.matrix.to_list()

    def to_record(self) -> list[dict]:
        return [h.to_record() for h in self.basis]


# -- core computations --------------------------------------------------------

def bind(P: SplittingFieldPresentation | BoundPresentation, E: ExtensionDatum) -> BoundPresentation:
    if isinstance(P, BoundPresentation):
        if P.G != E.G:
            raise DescentError("presentation is bound to a different group")
        return P
    return validate_presentation(P, E.G)


def _fixed_point_system(B: BoundPresentation, E: ExtensionDatum, N_elements: Sequence[Permutation]) -> DomainMatrix:
    d, n = B.degree, len(N_elements)
    index = {eta: i for i, eta in enumerate(N_elements)}
    blocks = []
    for g in E.G.generators:
        lg = E.lam(g)
        lgi = lg.inverse()
        Mg = B.matrices[g].to_list()
        rows = [[QQ(0)] * (n * d) for _ in range(n * d)]
        for i, eta in enumerate(N_elements):
            j = index.get(lg * eta * lgi)
            if j is None:
                raise DescentError("N is not normalized by λ(G)")
            # u_{λ(g)ηλ(g)⁻¹} − M_g u_η = 0
            for r in range(d):
                rows[j * d + r][j * d + r] += QQ(1)
                for c in range(d):
                    rows[j * d + r][i * d + c] -= Mg[r][c]
        blocks.append(from_rows(rows, n * d))
    if not blocks:
        return DomainMatrix.zeros((0, n * d), QQ)
    return DomainMatrix.vstack(*blocks)


def hopf_algebra_basis(P, E: ExtensionDatum, structure: HGStructure) -> HopfAlgebraBasis:
    """k-basis of H = K̃[N]^G; its dimension must equal n = [K:k]."""
    B = bind(P, E)
    N_elements = structure.regular_N.elements
    H = kernel(_fixed_point_system(B, E, N_elements))
    if H.shape[0] != E.n:
        raise DescentError(f"dim K̃[N]^G = {H.shape[0]}, expected {E.n}")
    return HopfAlgebraBasis(B.field, N_elements, H)


def sub_hopf_algebra(P, E: ExtensionDatum, structure: HGStructure, Np: PermGroup) -> HopfAlgebraBasis:
    """K̃[N']^G = K̃[N'] ∩ H; dimension |N'| when N' is λ(G)-stable."""
    B = bind(P, E)
    if not Np.is_subgroup_of(structure.regular_N):
        raise DescentError("N' is not a subgroup of N")
    N_elements = structure.regular_N.elements
    d = B.degree
    system = _fixed_point_system(B, E, N_elements)
    outside = []
    for i, eta in enumerate(N_elements):
        if eta not in Np:
            for r in range(d):
                row = [QQ(0)] * (len(N_elements) * d)
                row[i * d + r] = QQ(1)
                outside.append(row)
    if outside:
        system = DomainMatrix.vstack(system, from_rows(outside, system.shape[1]))
    return HopfAlgebraBasis(B.field, N_elements, kernel(system))


def field_of_K(P, E: ExtensionDatum) -> DomainMatrix:
    """Reduced echelon basis (θ-coordinates) of K = K̃^{G'}."""
    return fixed_subspace(bind(P, E), E.Gp)


def classical_fixed_field(P, E: ExtensionDatum, S: PermGroup) -> DomainMatrix:
    """K̃^S for S ⊆ λ(G), pulled back to G."""
    B = bind(P, E)
    pre = PermGroup.from_elements([g for g in E.G.element_set if E.lam(g) in S], E.G.degree)
    if pre.order != S.order:
        raise DescentError("S is not a subgroup of λ(G)")
    return fixed_subspace(B, pre)


def _coset_element(E: ExtensionDatum, eta: Permutation, convention: str) -> Permutation:
    if convention == CANONICAL:
        point = eta.inverse()(E.base_point)
    elif convention == DIRECT:
        point = eta(E.base_point)
    else:
        raise DescentError(f"unknown convention {convention!r}")
    return E.space.representatives[point - 1]


def _in_K(Kb: DomainMatrix, v: Sequence, what: str) -> list:
    c = coordinates_in(Kb, v)
    if c is None:
        raise DescentError(f"{what} does not lie in K")
    return c


def hopf_action_matrix(P, E: ExtensionDatum, structure: HGStructure, h: GroupAlgebraElement, *,
                       convention: str = CANONICAL, H: HopfAlgebraBasis | None = None,
                       check: bool = True) -> DomainMatrix:
    """μ(h) on K, as a matrix on the echelon basis of K (column j = image of basis vector j).

    With ``check=False`` any h ∈ K̃[N] is accepted as long as μ(h) maps K into
    K, e.g. every h in the Galois case.
    """
    B = bind(P, E)
    if check:
        H = H or hopf_algebra_basis(B, E, structure)
        if not H.contains(h):
            raise DescentError("h is not an element of H")
    if convention == DIRECT and not structure.regular_N.is_abelian:
        raise DescentError("the direct convention is an anti-action for non-abelian N")
    Kb = field_of_K(B, E)
    F = B.field
    cols = []
    for row in Kb.to_list():
        x = F.element([to_fraction(q) for q in row])
        y = F.zero
        for eta, c in h.coefficients.items():
            y = y + c * B.apply(_coset_element(E, eta, convention), x)
        cols.append(_in_K(Kb, [QQ(q.numerator, q.denominator) for q in y.coeffs], "μ(h)(x)"))
    return from_columns(cols, Kb.shape[0])


def rational_counit(h: GroupAlgebraElement) -> Fraction:
    e = h.epsilon()
    if not e.is_rational:
        raise DescentError("ε(h) is not in k; h is not in H")
    return e.coeffs[0]


def fixed_field_of_sub_hopf(P, E: ExtensionDatum, structure: HGStructure, Hp: HopfAlgebraBasis, *,
                            convention: str = CANONICAL) -> DomainMatrix:
    """{x ∈ K : μ(h)(x) = ε(h)x for h ∈ H'} as θ-coordinate rows."""
    B = bind(P, E)
    H = hopf_algebra_basis(B, E, structure)
    Kb = field_of_K(B, E)
    dK = Kb.shape[0]
    eye = DomainMatrix.eye(dK, QQ).to_dense()
    blocks = []
    for h in Hp.basis:
        eps = rational_counit(h)
        blocks.append(hopf_action_matrix(B, E, structure, h, convention=convention, H=H)
                      - eye * QQ(eps.numerator, eps.denominator))
    if not blocks:
        return Kb
    coords = kernel(DomainMatrix.vstack(*blocks))
    if coords.shape[0] == 0:
        return DomainMatrix.zeros((0, Kb.shape[1]), QQ)
    return row_basis(coords * Kb)


def _multiplication_on_K(B: BoundPresentation, Kb: DomainMatrix, x: FieldElement) -> DomainMatrix:
    Mx = B.field.multiplication_matrix(x)
    cols = [_in_K(Kb, [row[0] for row in (Mx * from_columns([kb], len(kb))).to_list()], "product")
            for kb in Kb.to_list()]
    return from_columns(cols, Kb.shape[0])


def verify_hg_isomorphism(P, E: ExtensionDatum, structure: HGStructure, *,
                          basis: Sequence[GroupAlgebraElement] | None = None,
                          convention: str = CANONICAL) -> bool:
    """Whether K ⊗_k H → End_k(K), x ⊗ h ↦ (y ↦ x·μ(h)(y)), is bijective."""
    B = bind(P, E)
    H = hopf_algebra_basis(B, E, structure)
    hs = list(basis) if basis is not None else H.basis
    Kb = field_of_K(B, E)
    n = Kb.shape[0]
    if len(hs) != n:
        return False
    F = B.field
    mults = [_multiplication_on_K(B, Kb, F.element([to_fraction(q) for q in row])) for row in Kb.to_list()]
    try:
        actions = [hopf_action_matrix(B, E, structure, h, convention=convention, H=H) for h in hs]
    except DescentError:
        return False
    rows = []
    for L in mults:
        for A in actions:
            rows.append([q for r in (L * A).to_list() for q in r])
    return rank(from_rows(rows, n * n)) == n * n


def scalar_extension_rank(P, E: ExtensionDatum, structure: HGStructure) -> int:
    """Rational dimension of the K̃-span of H inside K̃[N]; equals n·d iff K̃ ⊗ H = K̃[N]."""
    B = bind(P, E)
    H = hopf_algebra_basis(B, E, structure)
    F = B.field
    powers = [F.theta ** j for j in range(F.degree)]
    rows = [h.scale(t).to_vector(H.N_elements) for h in H.basis for t in powers]
    return rank(from_rows(rows, len(H.N_elements) * F.degree))


# -- reports ------------------------------------------------------------------

@dataclass
class SubHopfRecord:
    subgroup: PermGroup
    stable: bool
    dimension: int
    fixed_field: DomainMatrix = dfield(repr=False)
    classical_fixed_field: DomainMatrix | None = dfield(default=None, repr=False)

    @property
    def agrees(self) -> bool | None:
        if self.classical_fixed_field is None:
            return None
        return self.fixed_field.to_list() == self.classical_fixed_field.to_list()

    def to_record(self) -> dict:
        rec = {"order": self.subgroup.order, "generators": [str(g) for g in self.subgroup.generators],
               "stable": self.stable, "dimension": self.dimension,
               "fixed_field": _rows(self.fixed_field)}
        if self.classical_fixed_field is not None:
            rec["agrees_with_lattice"] = self.agrees
        return rec


def _rows(M: DomainMatrix) -> list[list[str]]:
    return [[str(to_fraction(q)) for q in r] for r in M.to_list()]


def sub_hopf_lattice(P, E: ExtensionDatum, structure: HGStructure, *,
                     convention: str = CANONICAL) -> list[SubHopfRecord]:
    """Every subgroup N' ⊆ N with its sub-Hopf algebra and fixed field; stable ones
    are cross-checked against the fixed field of the corresponding subgroup of λ(G)."""
    B = bind(P, E)
    stable = {M.element_set for M in stable_subgroups(structure, E)}
    out = []
    for Np in all_subgroups(structure.regular_N):
        Hp = sub_hopf_algebra(B, E, structure, Np)
        ff = fixed_field_of_sub_hopf(B, E, structure, Hp, convention=convention)
        is_stable = Np.element_set in stable
        classical = None
        if is_stable:
            classical = classical_fixed_field(B, E, corresponding_subgroup(Np, E, check=False))
        out.append(SubHopfRecord(Np, is_stable, Hp.n, ff, classical))
    return out


@dataclass
class DescentReport:
    structure: HGStructure
    convention: str
    H: HopfAlgebraBasis
    K_basis: DomainMatrix = dfield(repr=False)
    action_matrices: list[DomainMatrix] = dfield(repr=False)
    lattice: list[SubHopfRecord]
    isomorphism: bool

    def to_record(self) -> dict:
        return {
            "structure": self.structure.to_record(),
            "metadata": {"convention": self.convention, "convention_rule": CONVENTIONS[self.convention],
                         "coordinates": "power basis of the primitive element θ"},
            "K_basis": _rows(self.K_basis),
            "H_basis": self.H.to_record(),
            "action_matrices": [_rows(A) for A in self.action_matrices],
            "sub_hopf_algebras": [r.to_record() for r in self.lattice],
            "hopf_galois_isomorphism": self.isomorphism,
        }


def descent_report(P, E: ExtensionDatum, structure: HGStructure, *, convention: str = CANONICAL) -> DescentReport:
    B = bind(P, E)
    H = hopf_algebra_basis(B, E, structure)
    actions = [hopf_action_matrix(B, E, structure, h, convention=convention, H=H) for h in H.basis]
    return DescentReport(structure, convention, H, field_of_K(B, E), actions,
                         sub_hopf_lattice(B, E, structure, convention=convention),
                         verify_hg_isomorphism(B, E, structure, convention=convention))


# -- bundled examples -----------------------------------------------------------

@dataclass
class FieldExample:
    """A shipped presentation with its group, subgroup and named regular subgroups."""

    name: str
    presentation: SplittingFieldPresentation
    datum: ExtensionDatum
    structures: dict[str, PermGroup]

    def structure(self, key: str) -> HGStructure:
        return structure_from_regular(self.datum, self.structures[key])

    def bound(self) -> BoundPresentation:
        return bind(self.presentation, self.datum)


def _example_dir(name: str):
    return resources.files("hgkit.data").joinpath("fields", name)


def example_names() -> list[str]:
    root = resources.files("hgkit.data").joinpath("fields")
    return sorted(p.name for p in root.iterdir() if p.is_dir() and p.joinpath("field.json").is_file())


def load_example(name: str) -> FieldExample:
    if name not in example_names():
        raise DescentError(f"no bundled example {name!r}; available: {', '.join(example_names())}")
    folder = _example_dir(name)
    read = lambda f: json.loads(folder.joinpath(f).read_text(encoding="utf-8"))  # noqa: E731
    P = SplittingFieldPresentation.from_document(read("field.json"))
    G = group_from_document(read("group.json"))
    Gp = group_from_document(read("subgroup.json"))
    structures = {k: generate([Permutation.from_cycles(c, G.degree) for c in gens], G.degree)
                  for k, gens in read("structures.json").items()}
    return FieldExample(name, P, ExtensionDatum(G, Gp, name=name), structures)


__all__ = [
    "FieldExample", "example_names", "load_example",
    "CANONICAL", "CONVENTIONS", "DIRECT", "DescentError", "DescentReport", "FieldError", "GroupAlgebraElement",
    "HopfAlgebraBasis", "SubHopfRecord", "bind", "classical_fixed_field", "descent_report", "field_of_K",
    "fixed_field_of_sub_hopf", "hopf_action_matrix", "hopf_algebra_basis", "rational_counit",
    "scalar_extension_rank", "sub_hopf_algebra", "sub_hopf_lattice", "verify_hg_isomorphism",
]
