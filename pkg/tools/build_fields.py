"""
Build the bundled splitting-field presentations under src/hgkit/data/fields.

Each example is flattened to a primitive element θ; automorphism images of θ
and a few named elements are expressed in the power basis of θ with sympy's
exact number-field conversion. Run from the repository root:

    python tools/build_fields.py
"""

from __future__ import annotations

import json
from pathlib import Path

from sympy import I, Poly, Rational, cbrt, minimal_polynomial, root, sqrt, symbols, to_number_field

OUT = Path(__file__).resolve().parent.parent / "src" / "hgkit" / "data" / "fields"
x = symbols("x")


def coords(value, theta, d: int) -> list[str]:
    an = to_number_field(value, theta)
    cs = [Rational(c) for c in reversed(an.coeffs())]
    cs += [Rational(0)] * (d - len(cs))
    return [str(c) for c in cs]


def build(name, theta, images, binding, elements, group, subgroup, structures, notes):
    mp = Poly(minimal_polynomial(theta, x), x)
    d = mp.degree()
    min_poly = [str(Rational(c)) for c in reversed(mp.all_coeffs())]
    doc = {
        "name": name,
        "notes": notes,
        "min_poly": min_poly,
        "generators": {g: coords(v, theta, d) for g, v in images.items()},
        "binding": binding,
        "elements": {e: coords(v, theta, d) for e, v in elements.items()},
    }
    folder = OUT / name
    folder.mkdir(parents=True, exist_ok=True)
    (folder / "field.json").write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n")
    (folder / "group.json").write_text(json.dumps(group, indent=1) + "\n")
    (folder / "subgroup.json").write_text(json.dumps(subgroup, indent=1) + "\n")
    (folder / "structures.json").write_text(json.dumps(structures, indent=1) + "\n")
    print(f"{name}: degree {d}, min poly {mp.as_expr()}")


def main() -> None:
    w = Rational(-1, 2) + sqrt(3) * I / 2
    a = cbrt(2)
    build(
        "cbrt2", a + w,
        images={"sigma": w * a + w, "tau": a + w**2},
        binding={"sigma": "(1,2,3)", "tau": "(2,3)"},
        elements={"alpha": a, "omega": w, "omega2": w**2},
        group={"degree": 3, "generators": ["(1,2,3)", "(2,3)"], "name": "S3"},
        subgroup={"degree": 3, "generators": ["(2,3)"]},
        structures={"N": ["(1,2,3)"]},
        notes="K = Q(2^(1/3)) inside Q(omega, 2^(1/3)); sigma: alpha -> omega alpha, tau: omega -> omega^2",
    )
    r2, r3 = sqrt(2), sqrt(3)
    build(
        "biquadratic", r2 + r3,
        images={"sigma": -r2 + r3, "tau": r2 - r3},
        binding={"sigma": "(1,2)(3,4)", "tau": "(1,3)(2,4)"},
        elements={"sqrt_a": r2, "sqrt_b": r3, "sqrt_ab": r2 * r3},
        group={"degree": 4, "generators": ["(1,2)(3,4)", "(1,3)(2,4)"], "name": "V4"},
        subgroup={"degree": 4, "generators": []},
        structures={"N1": ["(1,2,3,4)"], "N2": ["(1,3,2,4)"], "N3": ["(1,2,4,3)"],
                    "N4": ["(1,2)(3,4)", "(1,3)(2,4)"]},
        notes="K = Q(sqrt 2, sqrt 3), a = 2, b = 3; sigma negates sqrt a, tau negates sqrt b",
    )
    al = root(2, 4)
    build(
        "quartic", al + I,
        images={"r": I * al + I, "s": al - I},
        binding={"r": "(1,2,3,4)", "s": "(2,4)"},
        elements={"alpha": al, "i": I, "alpha2": al**2, "i_alpha2": I * al**2},
        group={"degree": 4, "generators": ["(1,2,3,4)", "(2,4)"], "name": "D8"},
        subgroup={"degree": 4, "generators": ["(2,4)"]},
        structures={"N1": ["(1,2,3,4)"], "N2": ["(1,3)(2,4)", "(1,4)(2,3)"]},
        notes="K = Q(alpha), alpha^4 = 2, in Q(alpha, i); roots alpha, i alpha, -alpha, -i alpha are points 1..4",
    )


if __name__ == "__main__":
    main()
