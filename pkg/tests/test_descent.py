
import pytest
from hypothesis import given, settings, strategies as st
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from hgkit.descent import (CANONICAL, DIRECT, DescentError, GroupAlgebraElement, descent_report, example_names,
                           field_of_K, fixed_field_of_sub_hopf, hopf_action_matrix, hopf_algebra_basis,
                           load_example, rational_counit, scalar_extension_rank, sub_hopf_algebra,
                           sub_hopf_lattice, verify_hg_isomorphism)
from hgkit.field import SplittingFieldPresentation, coordinates_in, from_rows, same_row_space, to_fraction
from hgkit.hopf import ExtensionDatum, all_structures, structure_from_regular
from hgkit.perm import GroupError, Permutation, generate, left_coset_action

p = Permutation.from_cycles
T = GroupAlgebraElement.from_terms


def qq(xs):
    return [QQ(q.numerator, q.denominator) for q in xs]


def act(ex, S, h, x, convention=CANONICAL, check=True):
    """μ(h)(x) for x ∈ K, returned as an element of K̃."""
    B = ex.bound()
    Kb = field_of_K(B, ex.datum)
    M = hopf_action_matrix(B, ex.datum, S, h, convention=convention, check=check)
    c = coordinates_in(Kb, qq(x.coeffs))
    y = M * DomainMatrix([[q] for q in c], (len(c), 1), QQ)
    out = Kb.transpose() * y
    return B.field.element([to_fraction(r[0]) for r in out.to_list()])


def span(F, elements):
    return from_rows([qq(x.coeffs) for x in elements], F.degree)


@pytest.fixture(scope="module")
def cbrt2():
    ex = load_example("cbrt2")
    F, P = ex.presentation.field, ex.presentation
    s1 = p("(1,2,3)", 3)
    e = Permutation.identity(3)
    w, w2 = P.named("omega"), P.named("omega2")
    basis = [T(F, [(1, e)]), T(F, [(1, s1), (1, s1 ** 2)]), T(F, [(w, s1), (w2, s1 ** 2)])]
    return ex, ex.structure("N"), basis


def test_bundled_examples():
    assert example_names() == ["biquadratic", "cbrt2", "quartic"]
    with pytest.raises(DescentError):
        load_example("nope")


def test_cbrt2_basis(cbrt2):
    ex, S, basis = cbrt2
    H = hopf_algebra_basis(ex.bound(), ex.datum, S)
    assert H.n == 3 and H.same_span(basis)
    assert all(H.contains(h) for h in basis)
    assert not H.contains(T(ex.presentation.field, [(1, p("(1,2,3)", 3))]))


def test_cbrt2_direct_action_display(cbrt2):
    ex, S, (h0, h1, h2) = cbrt2
    a = ex.presentation.named("alpha")
    one = ex.presentation.field.one
    table = {0: (1, 1, 1), 1: (2, -1, -1), 2: (-1, -1, 2)}
    for k, h in enumerate((h0, h1, h2)):
        for scalar, x in zip(table[k], (one, a, a * a)):
            assert act(ex, S, h, x, DIRECT) == x * scalar


def test_conventions_differ_by_antipode(cbrt2):
    ex, S, basis = cbrt2
    a = ex.presentation.named("alpha")
    for h in basis:
        assert act(ex, S, h, a, DIRECT) == act(ex, S, h.antipode(), a, CANONICAL)


def test_unit_acts_as_identity(cbrt2):
    ex, S, (h0, _, _) = cbrt2
    B = ex.bound()
    M = hopf_action_matrix(B, ex.datum, S, h0)
    n = M.shape[0]
    assert M.to_list() == DomainMatrix.eye(n, QQ).to_dense().to_list()
    assert rational_counit(h0) == 1


def test_element_outside_H_rejected(cbrt2):
    ex, S, _ = cbrt2
    h = T(ex.presentation.field, [(1, p("(1,2,3)", 3))])
    with pytest.raises(DescentError):
        hopf_action_matrix(ex.bound(), ex.datum, S, h)
    with pytest.raises(DescentError):
        rational_counit(T(ex.presentation.field, [(ex.presentation.named("omega"), p("(1,2,3)", 3))]))


def test_verify_and_scalar_extension(cbrt2):
    ex, S, (h0, h1, h2) = cbrt2
    assert verify_hg_isomorphism(ex.bound(), ex.datum, S)
    assert verify_hg_isomorphism(ex.bound(), ex.datum, S, convention=DIRECT)
    assert scalar_extension_rank(ex.bound(), ex.datum, S) == 3 * 6
    assert not verify_hg_isomorphism(ex.bound(), ex.datum, S, basis=[h0, h1, h1])
    assert not verify_hg_isomorphism(ex.bound(), ex.datum, S, basis=[h0, h1])


@settings(max_examples=20)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_action_is_multiplicative(cbrt2, a, b):
    ex, S, basis = cbrt2
    F = ex.presentation.field
    h = sum((x.scale(F.element([c])) for x, c in zip(basis[1:], a[1:])), basis[0].scale(F.element([a[0]])))
    k = sum((x.scale(F.element([c])) for x, c in zip(basis[1:], b[1:])), basis[0].scale(F.element([b[0]])))
    B = ex.bound()
    M = lambda z: hopf_action_matrix(B, ex.datum, S, z)  # noqa: E731
    assert M(h * k).to_list() == (M(h) * M(k)).to_list()


def test_biquadratic_cyclic_structure():
    ex = load_example("biquadratic")
    F, P = ex.presentation.field, ex.presentation
    S = ex.structure("N1")
    g1 = p("(1,2,3,4)", 4)
    e = Permutation.identity(4)
    ra = P.named("sqrt_a")
    H = hopf_algebra_basis(ex.bound(), ex.datum, S)
    assert H.same_span([T(F, [(1, e)]), T(F, [(1, g1 ** 2)]), T(F, [(1, g1), (1, g1 ** 3)]),
                        T(F, [(ra, g1), (-ra, g1 ** 3)])])
    sigma, tau = p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)
    B = ex.bound()
    for k, g in [(1, sigma * tau), (2, tau), (3, sigma)]:
        M = hopf_action_matrix(B, ex.datum, S, T(F, [(1, g1 ** k)]), check=False)
        assert M.to_list() == B.matrices[g].to_list()
    Hp = sub_hopf_algebra(B, ex.datum, S, generate([g1 ** 2], 4))
    assert Hp.n == 2
    assert same_row_space(fixed_field_of_sub_hopf(B, ex.datum, S, Hp), span(F, [F.one, ra]))


@pytest.mark.parametrize("key", ["N1", "N2", "N3", "N4"])
def test_biquadratic_all_structures_verify(key):
    ex = load_example("biquadratic")
    S = ex.structure(key)
    assert verify_hg_isomorphism(ex.bound(), ex.datum, S)
    assert scalar_extension_rank(ex.bound(), ex.datum, S) == 16


def test_biquadratic_structures_exhaust_search():
    ex = load_example("biquadratic")
    assert {N.element_set for N in ex.structures.values()} == \
        {s.regular_N.element_set for s in all_structures(ex.datum)}


def test_quartic_bases_and_sub_hopf():
    ex = load_example("quartic")
    F, P = ex.presentation.field, ex.presentation
    r, s = p("(1,2,3,4)", 4), p("(2,4)", 4)
    e = Permutation.identity(4)
    i, ia2, a2 = P.named("i"), P.named("i_alpha2"), P.named("alpha2")
    B = ex.bound()
    S1, S2 = ex.structure("N1"), ex.structure("N2")
    assert hopf_algebra_basis(B, ex.datum, S1).same_span(
        [T(F, [(1, e)]), T(F, [(1, r), (1, r ** 3)]), T(F, [(i, r), (-i, r ** 3)]), T(F, [(1, r * r)])])
    assert hopf_algebra_basis(B, ex.datum, S2).same_span(
        [T(F, [(1, e)]), T(F, [(1, r * r)]), T(F, [(1, s * r), (1, r * s)]), T(F, [(ia2, s * r), (-ia2, r * s)])])
    dims = {x: sub_hopf_algebra(B, ex.datum, S2, generate([x], 4)).n for x in (r * r, s * r, r * s)}
    assert dims == {r * r: 2, s * r: 1, r * s: 1}
    Hp = sub_hopf_algebra(B, ex.datum, S1, generate([r * r], 4))
    assert same_row_space(fixed_field_of_sub_hopf(B, ex.datum, S1, Hp), span(F, [F.one, a2]))


@pytest.mark.parametrize("name", ["cbrt2", "biquadratic", "quartic"])
def test_descent_agrees_with_lattice(name):
    ex = load_example(name)
    for key in ex.structures:
        for rec in sub_hopf_lattice(ex.bound(), ex.datum, ex.structure(key)):
            if rec.stable:
                assert rec.agrees
                assert rec.dimension == rec.subgroup.order


def test_report_record():
    ex = load_example("quartic")
    rep = descent_report(ex.bound(), ex.datum, ex.structure("N2"))
    rec = rep.to_record()
    assert rec["hopf_galois_isomorphism"] and rec["metadata"]["convention"] == CANONICAL
    assert len(rec["H_basis"]) == 4 and len(rec["action_matrices"]) == 4


@pytest.fixture(scope="module")
def galois_s3():
    """Q(ω, ∛2) over Q with S3 acting regularly on its six elements."""
    ex = load_example("cbrt2")
    G3 = ex.datum.G
    image, space = left_coset_action(G3, generate([], 3))
    doc = ex.presentation.to_document()
    doc["binding"] = {g: str(space.action(p(c, 3))) for g, c in doc["binding"].items()}
    P = SplittingFieldPresentation.from_document(doc)
    return P, ExtensionDatum(image, image.stabilizer(1))


def test_galois_case_classical_and_canonical(galois_s3):
    P, E = galois_s3
    structs = all_structures(E)
    assert len(structs) == 5
    for S in structs:
        assert verify_hg_isomorphism(P, E, S)
        H = hopf_algebra_basis(P, E, S)
        assert H.n == 6
    classical = next(S for S in structs if S.is_classical)
    e = Permutation.identity(6)
    # the classical Hopf algebra is k[G]: rational group elements lie in H
    H = hopf_algebra_basis(P, E, classical)
    assert all(H.contains(T(P.field, [(1, g)])) for g in classical.regular_N.elements)
    assert H.contains(T(P.field, [(1, e)]))


def test_direct_rejected_for_nonabelian(galois_s3):
    P, E = galois_s3
    S = next(S for S in all_structures(E) if S.is_classical)
    h = T(P.field, [(1, Permutation.identity(6))])
    assert hopf_action_matrix(P, E, S, h).shape == (6, 6)
    with pytest.raises(DescentError):
        hopf_action_matrix(P, E, S, h, convention=DIRECT)
    with pytest.raises(DescentError):
        hopf_action_matrix(P, E, S, h, convention="sideways")


def test_structure_from_regular_rejects_non_normalized():
    ex = load_example("quartic")
    with pytest.raises(GroupError):
        structure_from_regular(ex.datum, generate([p("(1,3,2,4)", 4)], 4))
