"""
How much of the subfield lattice does a Hopf Galois structure see?

For k(√2, √3)/Q every structure is Galois-type, yet only the classical one
reaches all five intermediate fields. A cyclic structure sees a chain.
"""

from hgkit.descent import load_example, sub_hopf_lattice
from hgkit.lattice import strong_form_holds

ex = load_example("biquadratic")
E = ex.datum
for key in sorted(ex.structures):
    s = ex.structure(key)
    rep = strong_form_holds(s, E)
    print(f"{key}: type {s.type_name:<4} classical={s.is_classical!s:<5} "
          f"fields reached {len(rep.image_subgroups)} of {len(rep.all_intermediate_subgroups)}")
    for rec in sub_hopf_lattice(ex.bound(), E, s):
        tag = "stable" if rec.stable else "not stable"
        print(f"    N' of order {rec.subgroup.order}: {tag:<10}  dim H' = {rec.dimension}  "
              f"[K^H' : Q] = {rec.fixed_field.shape[0]}")
