"""
hgkit command line front end.

Exit codes: 0 success, 2 parse error (bad flags or unreadable input), 3
validation error (inputs parse but are mathematically inconsistent), 4 bound
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .descent import (CANONICAL, CONVENTIONS, DescentError, bind, descent_report, example_names, load_example)
from .field import FieldError, SplittingFieldPresentation
from .groups import (catalog_document, catalog_orders, identify, small_group, transitive_degrees, transitive_group,
                     transitive_groups)
from .holomorph import holomorph
from .hopf import (ExtensionDatum, all_structures, classify_degree, count_structures, is_hopf_galois)
from .lattice import INTERMEDIATE_MAX_DEGREE, intermediate_report, stable_records, strong_form_holds
from .perm import BoundExceeded, GroupError, PermGroup, load_group

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_BOUND = 4


class ParseError(Exception):
    """Input could not be read or decoded."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise ParseError(message)


# -- inputs -----------------------------------------------------------------

def _read_group(spec: str, degree: int | None) -> PermGroup:
    """A group from a JSON file, or a catalog name (transitive of ``degree`` if given)."""
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        try:
            return load_group(path)
        except OSError as exc:
            raise ParseError(f"cannot read {spec}: {exc.strerror}") from exc
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"cannot parse group document {spec}: {exc}") from exc
    entry = transitive_group(degree, spec) if degree else small_group(spec)
    G = entry.group()
    G.name = entry.name
    return G


def _datum(args, *, bound_order: bool = True) -> ExtensionDatum:
    if not args.group:
        raise ParseError("--group is required")
    G = _read_group(args.group, args.degree)
    if bound_order and args.max_order and G.order > args.max_order:
        raise BoundExceeded(f"|G| = {G.order} exceeds --max-order {args.max_order}")
    if args.subgroup:
        Gp = _read_group(args.subgroup, None)
        if Gp.degree != G.degree:
            raise GroupError("group and subgroup act on different degrees")
        return ExtensionDatum(G, Gp)
    if G.is_transitive():
        return ExtensionDatum.from_transitive(G)
    return ExtensionDatum.galois(G)


# -- output -----------------------------------------------------------------

def _emit(fmt: str, record, text: Callable[[], str], rows: Callable[[], tuple[list[str], list[list]]] | None = None
          ) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        header, body = rows() if rows else (["key", "value"], [[k, json.dumps(v, ensure_ascii=False)]
                                                                 for k, v in record.items()])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(body)
        return buf.getvalue()
    return text()


# -- commands ---------------------------------------------------------------

def cmd_check(args) -> str:
    E = _datum(args)
    v = is_hopf_galois(E)
    rec = {"group": E.name, "order": E.G.order, "degree": E.n, "hopf_galois": v.hopf_galois,
           "verdict": v.verdict, "decided_by": v.decided_by, "trace": v.trace,
           "complements": [identify(M) for M in v.complements],
           "witness": v.witness.to_record() if v.witness else None}

    def text():
        out = [f"{v.verdict}, decided_by={v.decided_by}"]
        out += [f"  {t}" for t in v.trace]
        return "\n".join(out) + "\n"
    return _emit(args.format, rec, text)


def cmd_count(args) -> str:
    E = _datum(args)
    rep = count_structures(E)
    rec = rep.to_record()

    def text():
        lines = [f"total {rep.total}"] + [f"  {k}: {v}" for k, v in rep.per_type.items()]
        return "\n".join(lines) + "\n"

    def rows():
        return ["type", "count"], [[k, v] for k, v in rep.per_type.items()] + [["total", rep.total]]
    return _emit(args.format, rec, text, rows)


def cmd_classify(args) -> str:
    if args.degree is None:
        raise ParseError("classify needs --degree")
    if args.degree not in transitive_degrees():
        raise GroupError(f"no transitive catalog for degree {args.degree}; have {transitive_degrees()}")
    table = classify_degree(args.degree)
    rec = [r.to_record() for r in table]

    def text():
        w = max(len(r.name) for r in table)
        lines = [f"{'G':<{w}}  {'|G|':>8}  verdict  [decided_by]  complements"]
        for r in table:
            lines.append(f"{r.name:<{w}}  {r.order:>8}  {r.verdict}  [{r.decided_by}]  {', '.join(r.complements)}")
        return "\n".join(lines) + "\n"

    def rows():
        return (["name", "order", "verdict", "decided_by", "complements"],
                [[r.name, r.order, r.verdict, r.decided_by, ";".join(r.complements)] for r in table])
    return _emit(args.format, rec, text, rows)


def _pick_structures(E: ExtensionDatum, index: int | None):
    structs = all_structures(E)
    if index is None:
        return list(enumerate(structs))
    if not 0 <= index < len(structs):
        raise GroupError(f"--structure {index} out of range; {len(structs)} structures")
    return [(index, structs[index])]


def cmd_lattice(args) -> str:
    E = _datum(args)
    out = []
    for i, s in _pick_structures(E, args.structure):
        sf = strong_form_holds(s, E)
        recs = stable_records(s, E)
        out.append({"index": i, "structure": s.to_record(), "strong_form": sf.holds,
                    "stable_subgroups": [{"order": r.subgroup.order,
                                          "generators": [str(g) for g in r.subgroup.generators],
                                          "corresponding_order": r.corresponding_subgroup.order,
                                          "corresponding_generators": [str(g) for g in
                                                                       r.corresponding_subgroup.generators]}
                                         for r in recs],
                    "intermediate_subgroups": len(sf.all_intermediate_subgroups)})

    def text():
        lines = []
        for rec in out:
            st = rec["structure"]
            lines.append(f"[{rec['index']}] type {st['type']} <{', '.join(st['generators'])}>  "
                         f"strong form: {'holds' if rec['strong_form'] else 'fails'}")
            for r in rec["stable_subgroups"]:
                lines.append(f"    N' order {r['order']} <{', '.join(r['generators']) or '()'}>  ->  "
                             f"S(N') order {r['corresponding_order']}")
        return "\n".join(lines) + "\n"

    def rows():
        return (["index", "type", "strong_form", "stable_order", "corresponding_order"],
                [[rec["index"], rec["structure"]["type"], rec["strong_form"], r["order"], r["corresponding_order"]]
                 for rec in out for r in rec["stable_subgroups"]])
    return _emit(args.format, out, text, rows)


def cmd_intermediate(args) -> str:
    bound = args.max_order or INTERMEDIATE_MAX_DEGREE
    if args.group:
        data = [_datum(args, bound_order=False)]
    elif args.degree is not None:
        if args.degree not in transitive_degrees():
            raise GroupError(f"no transitive catalog for degree {args.degree}")
        data = []
        for entry in (e for e in transitive_groups(args.degree) if e.has_generators):
            G = entry.group()
            data.append(ExtensionDatum.from_transitive(G, name=entry.name))
    else:
        raise ParseError("intermediate needs --group or --degree")
    out = []
    for E in data:
        for row in intermediate_report(E, max_degree=bound, skip_large=args.skip_large):
            rec = row.to_record()
            rec["group"] = E.name
            out.append(rec)

    def text():
        return "".join(f"{r['group']}  [F:k]={r['degree']}  {r['verdict']}"
                       + (f"  ({r['skipped']})" if r["skipped"] else "") + "\n" for r in out)

    def rows():
        return (["group", "degree", "verdict", "classes"],
                [[r["group"], r["degree"], r["verdict"], len(r["classes"])] for r in out])
    return _emit(args.format, out, text, rows)


def cmd_descent(args) -> str:
    if not args.field:
        raise ParseError("descent needs --field")
    if args.field in example_names() and not Path(args.field).exists():
        ex = load_example(args.field)
        P, E = ex.presentation, ex.datum
        if args.group:
            E = _datum(args)
    else:
        try:
            doc = json.loads(Path(args.field).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ParseError(f"cannot read {args.field}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"cannot parse field document {args.field}: {exc}") from exc
        P = SplittingFieldPresentation.from_document(doc)
        E = _datum(args)
    B = bind(P, E)
    out = []
    for i, s in _pick_structures(E, args.structure):
        rec = descent_report(B, E, s, convention=args.convention).to_record()
        rec["index"] = i
        out.append(rec)

    def text():
        lines = []
        for rec in out:
            st = rec["structure"]
            lines.append(f"[{rec['index']}] type {st['type']} <{', '.join(st['generators'])}>  "
                         f"convention={rec['metadata']['convention']}")
            lines.append("  H basis (coefficients in the power basis of θ):")
            for h in rec["H_basis"]:
                lines.append("    " + " + ".join(f"[{' '.join(c)}]·{e}" for e, c in h.items()))
            lines.append("  action matrices on the basis of K:")
            for A in rec["action_matrices"]:
                lines.append("    " + " | ".join(" ".join(r) for r in A))
            lines.append("  sub-Hopf algebras:")
            for r in rec["sub_hopf_algebras"]:
                agree = r.get("agrees_with_lattice")
                lines.append(f"    N' order {r['order']} <{', '.join(r['generators']) or '()'}>  "
                             f"{'stable' if r['stable'] else 'not stable'}  dim {r['dimension']}  "
                             f"fixed field dim {len(r['fixed_field'])}"
                             + ("" if agree is None else f"  lattice {'agrees' if agree else 'DISAGREES'}"))
            lines.append(f"  K ⊗ H ≅ End(K): {rec['hopf_galois_isomorphism']}")
        return "\n".join(lines) + "\n"

    def rows():
        return (["index", "type", "subgroup_order", "stable", "dimension", "fixed_field_dimension"],
                [[rec["index"], rec["structure"]["type"], r["order"], r["stable"], r["dimension"],
                  len(r["fixed_field"])] for rec in out for r in rec["sub_hopf_algebras"]])
    return _emit(args.format, out, text, rows)


def cmd_catalog(args) -> str:
    if args.degree is not None and args.degree not in transitive_degrees():
        raise GroupError(f"no transitive catalog for degree {args.degree}")
    if args.degree is not None:
        recs = catalog_document(degree=args.degree)
    else:
        recs = [r for m in catalog_orders() if not args.max_order or m <= args.max_order
                for r in catalog_document(order=m)]

    def text():
        return "".join(f"{r.get('degree', '-')}\t{r['order']}\t{r['name']}\n" for r in recs)

    def rows():
        return ["name", "order", "degree"], [[r["name"], r["order"], r.get("degree", "")] for r in recs]
    return _emit(args.format, recs, text, rows)


def cmd_hol(args) -> str:
    if not args.group:
        raise ParseError("hol needs --group")
    N = _read_group(args.group, args.degree)
    if args.max_order and N.order > args.max_order:
        raise BoundExceeded(f"|N| = {N.order} exceeds --max-order {args.max_order}")
    H = holomorph(N)
    rec = {"N": identify(N), "order_N": N.order, "order_aut": H.automorphism_part.order, "order_hol": H.order,
           "hol": identify(H.ambient) if H.order <= 120 else None,
           "aut_generators": [str(g) for g in H.automorphism_part.generators]}

    def text():
        return (f"N = {rec['N']}  |Aut(N)| = {rec['order_aut']}  |Hol(N)| = {rec['order_hol']}"
                + (f"  Hol(N) ≅ {rec['hol']}" if rec["hol"] else "") + "\n")
    return _emit(args.format, rec, text)


COMMANDS = {"check": cmd_check, "count": cmd_count, "classify": cmd_classify, "lattice": cmd_lattice,
            "intermediate": cmd_intermediate, "descent": cmd_descent, "catalog": cmd_catalog, "hol": cmd_hol}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hgkit", description="Hopf Galois structures on separable extensions.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--degree", type=int, help="degree n = [K:k], selects a transitive catalog")
    p.add_argument("--group", help="group JSON file, or a catalog name")
    p.add_argument("--subgroup", help="subgroup G' JSON file (default: stabilizer of point 1)")
    p.add_argument("--field", help="field presentation JSON, or a bundled example name")
    p.add_argument("--structure", type=int, help="index of a structure (default: all)")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--max-order", type=int, help="largest |G| accepted; for intermediate, largest [F:k]")
    p.add_argument("--skip-large", action="store_true", help="report rows beyond bounds as skipped")
    p.add_argument("--convention", choices=sorted(CONVENTIONS), default=CANONICAL,
                   help="how an element of N acts on K (descent)")
    return p


def main(argv: Sequence[str] | None = None, *, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        stdout.write(COMMANDS[args.command](args))
        return EXIT_OK
    except ParseError as exc:
        stderr.write(f"hgkit: parse error: {exc}\n")
        return EXIT_PARSE
    except BoundExceeded as exc:
        stderr.write(f"hgkit: bound exceeded: {exc}\n")
        return EXIT_BOUND
    except (GroupError, FieldError, DescentError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"hgkit: validation error: {msg}\n")
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
