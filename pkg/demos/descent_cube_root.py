"""
The Hopf algebra of Q(∛2)/Q, computed by Galois descent.

K̃ = Q(ω, ∛2) is presented by the primitive element θ = ∛2 + ω. The unique
Hopf Galois structure has N = ⟨(1,2,3)⟩, and H = K̃[N]^G is 3-dimensional.
"""

from hgkit.descent import (CANONICAL, DIRECT, GroupAlgebraElement, field_of_K, hopf_action_matrix,
                           hopf_algebra_basis, load_example, verify_hg_isomorphism)
from hgkit.field import coordinates_in, to_fraction
from hgkit.perm import Permutation
from sympy import QQ, Poly, symbols
from sympy.polys.matrices import DomainMatrix

ex = load_example("cbrt2")
P, E = ex.presentation, ex.datum
F = P.field
B = ex.bound()
S = ex.structure("N")
print(f"K̃ = Q(θ), θ a root of {Poly(list(reversed(F.min_poly)), symbols('x')).as_expr()}")

H = hopf_algebra_basis(B, E, S)
print("\nechelon basis of H (coefficients in the power basis of θ):")
for h in H.basis:
    print("  ", h)

s = Permutation.from_cycles("(1,2,3)", 3)
e = Permutation.identity(3)
w, w2 = P.named("omega"), P.named("omega2")
named = {"h0": GroupAlgebraElement.from_terms(F, [(1, e)]),
         "h1": GroupAlgebraElement.from_terms(F, [(1, s), (1, s ** 2)]),
         "h2": GroupAlgebraElement.from_terms(F, [(w, s), (w2, s ** 2)])}
print("\nId, σ + σ², ωσ + ω²σ² span H:", H.same_span(list(named.values())))

Kb = field_of_K(B, E)
a = P.named("alpha")


def act(h, x, convention):
    M = hopf_action_matrix(B, E, S, h, convention=convention, H=H)
    c = coordinates_in(Kb, [QQ(q.numerator, q.denominator) for q in x.coeffs])
    y = Kb.transpose() * (M * DomainMatrix([[q] for q in c], (len(c), 1), QQ))
    return F.element([to_fraction(r[0]) for r in y.to_list()])


# Each hᵢ acts diagonally on 1, α, α². The two conventions differ by the
# antipode, which for this abelian N swaps σ and σ².
for convention in (DIRECT, CANONICAL):
    print(f"\n{convention} convention: eigenvalues on 1, α, α²")
    for name, h in named.items():
        vals = []
        for x in (F.one, a, a * a):
            y = act(h, x, convention)
            vals.append(next(k for k in (-1, 1, 2) if y == x * k))
        print(f"  {name}: {vals}")

print("\nK ⊗ H → End(K) bijective:", verify_hg_isomorphism(B, E, S))
