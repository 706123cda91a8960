"""Command-line interface.

Subcommands expose the library: ``dims``/``series`` for dimension series,
``dual`` for Koszul duals, ``nf`` for rewriting, ``compose`` for the
combinatorial compositions, ``product`` for the free-algebra products,
``assoc`` for associative-element questions, ``butterfly`` for the
half-shuffle functor checks, ``verify`` for the named suites, and
``export`` for DOT renderings.  Exit status: 0 on success / all PASS,
1 on a FAIL verdict, 2 on usage or input-grammar errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .associativity import classify_associative_modp, is_associative
from .butterfly import verify_com_from_zin, verify_dendr_from_zin
from .hilbert import check_koszul_inverse, dims, series_from_equation
from .linear import LinComb
from .presentations import build_presentation, koszul_dual
from .realizations import (
    Corolla,
    corolla_compose,
    dendr_free_product,
    dup_free_product,
    evtree_dot,
    evtree_to_text,
    parse_evtree,
    parse_schroder,
    schroder_compose,
    schroder_dot,
    schroder_to_text,
)
from .rewriting import build_rewrite_system, normal_form
from .trees import ParseError, corolla_tree, graft, parse_tree, syntax_tree_dot, tree_to_text


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyops",
        description="exact computations in the dendriform family of operads",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="closed-form dimension series")
    p.add_argument("family")
    p.add_argument("gamma", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("series", help="series from the functional equation")
    p.add_argument("--check-dual", nargs=2, metavar=("FAMA", "FAMB"))
    p.add_argument("family", nargs="?")
    p.add_argument("gamma", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("dual", help="Koszul dual of a presentation")
    p.add_argument("family")
    p.add_argument("gamma", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("nf", help="rewrite a syntax tree to normal form")
    p.add_argument("family", choices=["As", "Dup", "as", "dup"])
    p.add_argument("gamma", type=int)
    p.add_argument("tree")

    p = sub.add_parser("compose", help="partial compositions of tree models")
    csub = p.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("syntax", help="graft syntax trees over a family signature")
    c.add_argument("family")
    c.add_argument("gamma", type=int)
    c.add_argument("tree1")
    c.add_argument("i", type=int)
    c.add_argument("tree2")
    c = csub.add_parser("corolla", help="compose labeled corollas")
    c.add_argument("arity1", type=int)
    c.add_argument("label1", help="integer label, or '-' for the arity-1 corolla")
    c.add_argument("i", type=int)
    c.add_argument("arity2", type=int)
    c.add_argument("label2", help="integer label, or '-'")
    c = csub.add_parser("schroder", help="compose alternating Schroder trees")
    c.add_argument("tree1")
    c.add_argument("i", type=int)
    c.add_argument("tree2")

    p = sub.add_parser("product", help="free-algebra products on edge-valued trees")
    p.add_argument("kind", choices=["prec", "succ", "under", "over"])
    p.add_argument("a", type=int, help="operation index in 1..gamma")
    p.add_argument("tree1")
    p.add_argument("tree2")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("assoc", help="associative arity-2 elements")
    asub = p.add_subparsers(dest="action", required=True)
    a = asub.add_parser("classify", help="exhaustive projective search mod p")
    a.add_argument("family")
    a.add_argument("gamma", type=int)
    a.add_argument("--prime", type=int, default=5)
    a.add_argument("--json", action="store_true")
    a = asub.add_parser("check", help="test one element, e.g. 'prec_1+succ_1'")
    a.add_argument("family")
    a.add_argument("gamma", type=int)
    a.add_argument("expr")

    p = sub.add_parser("butterfly", help="half-shuffle functor checks")
    bsub = p.add_subparsers(dest="action", required=True)
    b = bsub.add_parser("verify")
    b.add_argument("gamma", type=int)
    b.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run named verification suites")
    p.add_argument("suites", nargs="*", help=f"ids among {', '.join(verify_mod.CHECKS)}")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=None, help="seed for randomized samples")
    p.add_argument("--max-arity", type=int, default=None, help="cap for dimension tables")

    p = sub.add_parser("export", help="DOT renderings of trees")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT (default)")
    esub = p.add_subparsers(dest="kind", required=True)
    e = esub.add_parser("syntax")
    e.add_argument("family")
    e.add_argument("gamma", type=int)
    e.add_argument("tree")
    e = esub.add_parser("evtree")
    e.add_argument("tree")
    e = esub.add_parser("schroder")
    e.add_argument("tree")

    return parser


def _print_dims(args, series) -> int:
    values = series.dims()
    if args.json:
        print(json.dumps({"family": args.family, "gamma": args.gamma, "dims": values}))
    else:
        print(", ".join(str(v) for v in values))
    return 0


def _lincomb_text(v: LinComb) -> str:
    if v.is_zero():
        return "0"
    items = sorted(v, key=lambda kc: (kc[0].size, evtree_to_text(kc[0])))
    parts = []
    for t, c in items:
        txt = evtree_to_text(t)
        parts.append(txt if c == 1 else f"{c}*{txt}")
    return " + ".join(parts)


def _parse_element(pres, expr: str) -> LinComb:
    out: dict = {}
    text = expr.replace(" ", "")
    i = 0
    sign = 1
    while i < len(text):
        if text[i] == "+":
            sign, i = 1, i + 1
            continue
        if text[i] == "-":
            sign, i = -1, i + 1
            continue
        j = i
        while j < len(text) and text[j] not in "+-":
            j += 1
        term = text[i:j]
        if "*" in term:
            coef_str, name = term.split("*", 1)
            coef = Fraction(coef_str)
        else:
            coef, name = Fraction(1), term
        if name not in pres.signature:
            raise ParseError(f"unknown generator {name!r}", i)
        key = corolla_tree(pres.signature[name])
        out[key] = out.get(key, 0) + sign * coef
        i = j
    return LinComb(out)


def _run(args) -> int:
    if args.command == "dims":
        return _print_dims(args, dims(args.family, args.gamma, args.N))

    if args.command == "series":
        if args.check_dual:
            fama, famb = args.check_dual
            ok = check_koszul_inverse(
                dims(fama, args.gamma, args.N), dims(famb, args.gamma, args.N), args.N
            )
            print("PASS" if ok else "FAIL")
            return 0 if ok else 1
        if args.family is None:
            print("series: family required unless --check-dual is given", file=sys.stderr)
            return 2
        return _print_dims(args, series_from_equation(args.family, args.gamma, args.N))

    if args.command == "dual":
        pres = koszul_dual(build_presentation(args.family, args.gamma))
        if args.json:
            print(json.dumps(pres.to_json()))
        else:
            print(f"generators: {', '.join(pres.signature.names())}")
            for r in pres.relations:
                terms = sorted(r, key=lambda kc: kc[0].canonical_key())
                print(
                    "  "
                    + " + ".join(
                        (f"{c}*" if c != 1 else "") + tree_to_text(t) for t, c in terms
                    ).replace("+ -1*", "- ")
                )
        return 0

    if args.command == "nf":
        rs = build_rewrite_system(args.family, args.gamma)
        t = parse_tree(args.tree, rs.signature)
        print(tree_to_text(normal_form(rs, t)))
        return 0

    if args.command == "compose":
        if args.kind == "syntax":
            pres = build_presentation(args.family, args.gamma)
            t1 = parse_tree(args.tree1, pres.signature)
            t2 = parse_tree(args.tree2, pres.signature)
            print(tree_to_text(graft(t1, args.i, t2)))
        elif args.kind == "corolla":
            c1 = Corolla(args.arity1, None if args.label1 == "-" else int(args.label1))
            c2 = Corolla(args.arity2, None if args.label2 == "-" else int(args.label2))
            out = corolla_compose(c1, args.i, c2)
            print(f"arity={out.arity} label={'-' if out.label is None else out.label}")
        else:
            s1 = parse_schroder(args.tree1)
            s2 = parse_schroder(args.tree2)
            print(schroder_to_text(schroder_compose(s1, args.i, s2)))
        return 0

    if args.command == "product":
        t1 = parse_evtree(args.tree1)
        t2 = parse_evtree(args.tree2)
        if args.kind in ("prec", "succ"):
            result = dendr_free_product(args.kind, args.a, t1, t2)
        else:
            single = dup_free_product(args.kind, args.a, t1, t2)
            result = LinComb.zero() if single is None else LinComb.monomial(single)
        if args.json:
            items = sorted(result, key=lambda kc: (kc[0].size, evtree_to_text(kc[0])))
            print(
                json.dumps(
                    [{"coeff": str(c), "tree": evtree_to_text(t)} for t, c in items]
                )
            )
        else:
            print(_lincomb_text(result))
        return 0

    if args.command == "assoc":
        pres = build_presentation(args.family, args.gamma)
        if args.action == "classify":
            lines = sorted(classify_associative_modp(pres, args.prime))
            names = pres.signature.names()
            if args.json:
                print(json.dumps({"prime": args.prime, "lines": [list(l) for l in lines]}))
            else:
                for line in lines:
                    terms = [
                        (f"{c}*" if c != 1 else "") + n
                        for c, n in zip(line, names)
                        if c
                    ]
                    print(" + ".join(terms))
                print(f"{len(lines)} projective solution(s) mod {args.prime}")
        else:
            x = _parse_element(pres, args.expr)
            ok = is_associative(pres, x)
            print("associative" if ok else "not associative")
            return 0 if ok else 1
        return 0

    if args.command == "butterfly":
        com = verify_com_from_zin(args.gamma)
        dendr = verify_dendr_from_zin(args.gamma)
        if args.json:
            print(json.dumps({"com_from_zin": com, "dendr_from_zin": dendr}))
        else:
            print(f"{'PASS' if com else 'FAIL'} commutative structure from half-shuffles")
            print(f"{'PASS' if dendr else 'FAIL'} polydendriform structure from half-shuffles")
        return 0 if com and dendr else 1

    if args.command == "verify":
        if args.seed is not None:
            verify_mod.set_random_seed(args.seed)
        if args.max_arity is not None:
            verify_mod.set_max_arity(args.max_arity)
        ids = args.suites or None
        try:
            report = verify_mod.run_checks(ids)
        except KeyError as exc:
            print(str(exc), file=sys.stderr)
            return 2
        if args.json:
            print(json.dumps(report.to_json()))
        else:
            for c in report.checks:
                print(f"{c.status} {c.check_id}: {c.detail}")
            print(f"overall: {report.overall}")
        return 0 if report.overall == "PASS" else 1

    if args.command == "export":
        if args.kind == "syntax":
            pres = build_presentation(args.family, args.gamma)
            print(syntax_tree_dot(parse_tree(args.tree, pres.signature)))
        elif args.kind == "evtree":
            print(evtree_dot(parse_evtree(args.tree)))
        else:
            print(schroder_dot(parse_schroder(args.tree)))
        return 0

    raise AssertionError(args.command)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
