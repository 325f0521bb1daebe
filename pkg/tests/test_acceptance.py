"""
Acceptance criteria 1 to 7. Each criterion collects failure messages, prints a
single PASS/FAIL line and asserts that nothing failed. Run directly with

    python tests/test_acceptance.py

to print the seven lines without pytest.
"""

from __future__ import annotations

import csv
import sys
import time
from pathlib import Path

import pytest

from hgkit.descent import (GroupAlgebraElement, fixed_field_of_sub_hopf, hopf_algebra_basis, load_example, sub_hopf_algebra,
                           sub_hopf_lattice, verify_hg_isomorphism)
from hgkit.field import from_rows, same_row_space
from hgkit.groups import catalog_orders, identify, small_group, transitive_groups
from hgkit.holomorph import holomorph
from hgkit.hopf import (NOT_HG, ExtensionDatum, all_structures, classify_degree, count_structures,
                        gp_regular_subgroups, is_hopf_galois)
from hgkit.lattice import (INTERMEDIATE_MAX_DEGREE, intermediate_report, stable_records, strong_form_holds,
                           transitivity_check)
from hgkit.perm import (Permutation, all_subgroups, generate, normal_subgroups, subgroup_classes)

DATA = Path(__file__).parent / "data"
p = Permutation.from_cycles
T = GroupAlgebraElement.from_terms
RESULTS: dict[int, bool] = {}


def _csv(name: str) -> list[dict]:
    with open(DATA / name, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def _transitive_data(degrees, max_order: int = 720):
    for n in degrees:
        for e in transitive_groups(n):
            if e.has_generators and e.order <= max_order:
                yield f"{n}:{e.name}", ExtensionDatum.from_transitive(e.group(), name=e.name)


def _galois(name: str) -> ExtensionDatum:
    return ExtensionDatum.galois(small_group(name).group(), name=name)


# -- 1. degree tables ---------------------------------------------------------

def criterion_1() -> list[str]:
    fails = []
    expected = _csv("degree_tables.csv")
    for n in (3, 4, 5, 6, 7, 11):
        rows = {r.name: r for r in classify_degree(n)}
        want = [r for r in expected if r["degree"] == str(n)]
        if len(rows) != len(want):
            fails.append(f"degree {n}: {len(rows)} rows, expected {len(want)}")
        for w in want:
            got = rows.get(w["group"])
            if got is None:
                fails.append(f"degree {n}: {w['group']} missing")
                continue
            if got.verdict != w["verdict"]:
                fails.append(f"degree {n} {w['group']}: {got.verdict} != {w['verdict']}")
            if w["complement"] and w["complement"] not in got.complements:
                fails.append(f"degree {n} {w['group']}: complement {w['complement']} not in {got.complements}")
            if n in (7, 11) and w["verdict"] == NOT_HG and got.decided_by != "order-precheck":
                fails.append(f"degree {n} {w['group']}: decided by {got.decided_by}")
    for e in transitive_groups(4):
        G = e.group()
        E = ExtensionDatum.from_transitive(G)
        w = next(r for r in expected if r["degree"] == "4" and r["group"] == e.name)
        if identify(E.Gp) != w["gprime"]:
            fails.append(f"degree 4 {e.name}: G' is {identify(E.Gp)}, expected {w['gprime']}")
    return fails


# -- 2. structure counts ------------------------------------------------------------

def criterion_2() -> list[str]:
    fails = []
    for row in _csv("galois_counts.csv"):
        if row["source"] != "published":
            continue
        rep = count_structures(_galois(row["group"]))
        if rep.total != int(row["total"]):
            fails.append(f"s({row['group']}) = {rep.total}, expected {row['total']}")
        if row["per_type"]:
            want = {k: int(v) for k, v in (kv.split(":") for kv in row["per_type"].split(";"))}
            if rep.per_type != want:
                fails.append(f"{row['group']} split {rep.per_type}, expected {want}")
    return fails


# -- 3. Byott enumeration against direct search -----------------------------------------

def criterion_3() -> list[str]:
    fails = []
    for key, E in _transitive_data((4, 5, 6)):
        byott = {s.regular_N.element_set for s in all_structures(E)}
        direct = {N.element_set for N in gp_regular_subgroups(E)}
        if byott != direct:
            fails.append(f"{key}: {len(byott)} by embedding vs {len(direct)} by direct search")
    return fails


# -- 4. descent fixtures ------------------------------------------------------

def _span(F, elements):
    return from_rows([[c for c in x.coeffs] for x in elements], F.degree)


def criterion_4() -> list[str]:
    fails = []

    ex = load_example("cbrt2")
    F, P = ex.presentation.field, ex.presentation
    s1, e3 = p("(1,2,3)", 3), Permutation.identity(3)
    w, w2 = P.named("omega"), P.named("omega2")
    H = hopf_algebra_basis(ex.bound(), ex.datum, ex.structure("N"))
    if not H.same_span([T(F, [(1, e3)]), T(F, [(1, s1), (1, s1 ** 2)]), T(F, [(w, s1), (w2, s1 ** 2)])]):
        fails.append("cbrt2: H differs from <Id, σ+σ², ωσ+ω²σ²>")

    ex = load_example("biquadratic")
    F, P = ex.presentation.field, ex.presentation
    B = ex.bound()
    g1, e4 = p("(1,2,3,4)", 4), Permutation.identity(4)
    ra = P.named("sqrt_a")
    S = ex.structure("N1")
    H = hopf_algebra_basis(B, ex.datum, S)
    if not H.same_span([T(F, [(1, e4)]), T(F, [(1, g1 ** 2)]), T(F, [(1, g1), (1, g1 ** 3)]),
                        T(F, [(ra, g1), (-ra, g1 ** 3)])]):
        fails.append("biquadratic: H₁ differs")
    Hp = sub_hopf_algebra(B, ex.datum, S, generate([g1 ** 2], 4))
    if not same_row_space(fixed_field_of_sub_hopf(B, ex.datum, S, Hp), _span(F, [F.one, ra])):
        fails.append("biquadratic: fixed field of the order-2 sub-Hopf algebra is not k(√a)")

    ex = load_example("quartic")
    F, P = ex.presentation.field, ex.presentation
    B = ex.bound()
    r, s = p("(1,2,3,4)", 4), p("(2,4)", 4)
    i, ia2, a2 = P.named("i"), P.named("i_alpha2"), P.named("alpha2")
    S1, S2 = ex.structure("N1"), ex.structure("N2")
    if not hopf_algebra_basis(B, ex.datum, S1).same_span(
            [T(F, [(1, e4)]), T(F, [(1, r), (1, r ** 3)]), T(F, [(i, r), (-i, r ** 3)]), T(F, [(1, r * r)])]):
        fails.append("quartic: H₁ differs")
    if not hopf_algebra_basis(B, ex.datum, S2).same_span(
            [T(F, [(1, e4)]), T(F, [(1, r * r)]), T(F, [(1, s * r), (1, r * s)]),
             T(F, [(ia2, s * r), (-ia2, r * s)])]):
        fails.append("quartic: H₂ differs")
    dims = [sub_hopf_algebra(B, ex.datum, S2, generate([x], 4)).n for x in (r * r, s * r, r * s)]
    if dims != [2, 1, 1]:
        fails.append(f"quartic: sub-Hopf dimensions {dims}, expected [2, 1, 1]")
    Hp = sub_hopf_algebra(B, ex.datum, S1, generate([r * r], 4))
    if not same_row_space(fixed_field_of_sub_hopf(B, ex.datum, S1, Hp), _span(F, [F.one, a2])):
        fails.append("quartic: fixed field is not k(α²)")

    for name in ("cbrt2", "biquadratic", "quartic"):
        ex = load_example(name)
        for key in ex.structures:
            if not verify_hg_isomorphism(ex.bound(), ex.datum, ex.structure(key)):
                fails.append(f"{name} {key}: K ⊗ H → End(K) is not bijective")
    return fails


# -- 5. strong form -------------------------------------------------------------

def criterion_5() -> list[str]:
    fails = []
    for name in ("C4", "V4", "S3", "C6", "D8", "Q8", "A4"):
        E = _galois(name)
        for s in all_structures(E):
            if s.is_classical and not strong_form_holds(s, E).holds:
                fails.append(f"{name}: classical structure fails the strong form")

    ex = load_example("biquadratic")
    rep = strong_form_holds(ex.structure("N1"), ex.datum)
    orders = sorted(S.order for S in rep.image_subgroups)
    if rep.holds or orders != [1, 2, 4]:
        fails.append(f"biquadratic C4 type: holds={rep.holds}, image orders {orders}")

    for key, E in _transitive_data((4, 5, 6), max_order=120):
        for s in all_structures(E):
            if s.acg_witness is not None and not strong_form_holds(s, E).holds:
                fails.append(f"{key}: a.c.G. structure fails the strong form")

    E = _galois("S3")
    s = next(s for s in all_structures(E) if s.is_canonical_nonclassical)
    image = {S.element_set for S in strong_form_holds(s, E).image_subgroups}
    normal = {M.element_set for M in normal_subgroups(E.lambda_G)}
    if image != normal:
        fails.append("Galois S3, λ(G) structure: image is not the set of normal subgroups")
    return fails


# -- 6. intermediate tables ---------------------------------------------------

def criterion_6(notes: list[str] | None = None) -> list[str]:
    fails = []
    notes = notes if notes is not None else []
    expected = _csv("intermediate_tables.csv")
    groups = sorted({(int(r["degree"]), r["group"]) for r in expected})
    datum = {key: E for key, E in _transitive_data((4, 5, 6))}
    for n, name in groups:
        E = datum[f"{n}:{name}"]
        rows = {r.degree: r for r in intermediate_report(E)}
        for w in (r for r in expected if int(r["degree"]) == n and r["group"] == name):
            d = int(w["field_degree"])
            got = rows.get(d)
            if got is None:
                fails.append(f"degree {n} {name} [F:k]={d}: no row")
            elif w["status"] == "skipped":
                if not got.skipped:
                    fails.append(f"degree {n} {name} [F:k]={d}: expected skipped, got {got.verdict}")
            elif got.verdict == w["verdict"]:
                continue
            elif got.verdict == f"∃ {w['verdict']}":
                notes.append(f"degree {n} {name} [F:k]={d}: table entry '{w['verdict']}' matched existentially; "
                             f"classes {[c.verdict for c in got.classes]}")
            else:
                fails.append(f"degree {n} {name} [F:k]={d}: {got.verdict} != {w['verdict']}")
    return fails


# -- 7. property suites ----------------------------------------------------------

def _degree15_order150():
    """(C5 × C5) ⋊ S3 on three blocks of five points; the C5² is {shift vectors with sum 0}."""
    pt = lambda b, j: 5 * b + (j % 5) + 1  # noqa: E731
    shift = lambda a: Permutation([pt(b, j + a[b]) for b in range(3) for j in range(5)])  # noqa: E731
    swap = Permutation([pt((1, 0, 2)[b], j) for b in range(3) for j in range(5)])
    rot = Permutation([pt((b + 1) % 3, j) for b in range(3) for j in range(5)])
    return generate([shift((1, -1, 0)), shift((0, 1, -1)), swap, rot], 15)


def criterion_7(notes: list[str] | None = None) -> list[str]:
    fails = []
    notes = notes if notes is not None else []
    data = list(_transitive_data((3, 4, 5, 6), max_order=120))
    data += [(f"galois:{n}", _galois(n)) for n in ("C4", "V4", "S3", "C6", "D8", "Q8", "C4×C2", "A4")]

    for key, E in data:
        for s in all_structures(E):
            recs = stable_records(s, E)
            if len({r.corresponding_subgroup for r in recs}) != len(recs):
                fails.append(f"{key}: correspondence not injective")
            for a in recs:
                if a.corresponding_subgroup.order != E.Gp.order * a.subgroup.order:
                    fails.append(f"{key}: |S(N')| != |G'|·|N'|")
                for b in recs:
                    if a.subgroup.is_subgroup_of(b.subgroup) and \
                            not a.corresponding_subgroup.is_subgroup_of(b.corresponding_subgroup):
                        fails.append(f"{key}: correspondence does not respect inclusion")

    for name in ("cbrt2", "biquadratic", "quartic"):
        ex = load_example(name)
        for k in ex.structures:
            for rec in sub_hopf_lattice(ex.bound(), ex.datum, ex.structure(k)):
                if rec.stable and not rec.agrees:
                    fails.append(f"{name} {k}: descent fixed field differs from the lattice")

    for name in ("C6", "C4×C2", "C2×C2×C2", "C8"):
        types = count_structures(_galois(name)).per_type
        if not any(not small_group(t).group().is_abelian for t in types):
            fails.append(f"{name}: no structure of non-abelian type ({types})")

    chains = nonvacuous = 0
    covered = set(catalog_orders())
    for key, E in _transitive_data((4, 5, 6)):
        subs = [H for H in all_subgroups(E.Gp, max_order=max(120, E.Gp.order)) if H.order < E.Gp.order]
        for cls in subgroup_classes(subs, E.G):
            H = cls[0]
            d = E.G.order // H.order
            if d > INTERMEDIATE_MAX_DEGREE or d not in covered:
                continue
            rec = transitivity_check(E, H)
            chains += 1
            nonvacuous += rec.hypothesis
            if not rec.consistent:
                fails.append(f"{key}: transitivity fails for G'' of order {H.order}")
    notes.append(f"transitivity: {chains} chains, {nonvacuous} with both steps Hopf Galois")

    G = _degree15_order150()
    E = ExtensionDatum.from_transitive(G)
    v = is_hopf_galois(E)
    hol = holomorph(small_group("C15").group()).order
    if G.order != 150 or not G.is_transitive() or hol != 120 or v.verdict != NOT_HG:
        fails.append(f"degree 15: |G|={G.order}, |Hol(C15)|={hol}, verdict {v.verdict}")
    else:
        notes.append(f"degree 15 order 150: {v.verdict} ({v.decided_by})")
    return fails


# -- harness ----------------------------------------------------------------

TITLES = {
    1: "degree tables 3, 4, 5, 6, 7, 11",
    2: "Galois structure counts",
    3: "embedding enumeration equals direct regular-subgroup search",
    4: "descent fixtures",
    5: "strong form",
    6: "intermediate tables",
    7: "property suites",
}
CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7}


def evaluate(k: int, out=None) -> list[str]:
    out = out or sys.stdout
    notes: list[str] = []
    t0 = time.perf_counter()
    fn = CRITERIA[k]
    fails = fn(notes) if k in (6, 7) else fn()
    status = "PASS" if not fails else "FAIL"
    out.write(f"ACCEPTANCE {k} {status}: {TITLES[k]} ({time.perf_counter() - t0:.1f}s)\n")
    for line in notes:
        out.write(f"    note: {line}\n")
    for line in fails:
        out.write(f"    failure: {line}\n")
    RESULTS[k] = not fails
    return fails


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_acceptance(k, capsys):
    with capsys.disabled():
        sys.stdout.write("\n")
        fails = evaluate(k)
    assert not fails


if __name__ == "__main__":
    total = [evaluate(k) for k in sorted(CRITERIA)]
    sys.exit(1 if any(total) else 0)
