"""Command-line surface: orbit and classification reports, product
constructors, witness re-verification, and the embedded-catalog
reproduction harness."""

import argparse
import json
import sys

from .circulant import Circulant, parse_graph, realize
from .errors import CircisoError, ParseError
from .iso_oracle import IsoWitness, make_witness, search_isomorphism, verify_witness
from .products import (
    _c4_ring_edges,
    _prism_edges,
    embedding_witness,
    product_c4,
    product_coprime,
    product_prism,
    scan_conjecture,
    valid_type2_ms,
)
from .reporting import (
    all_passed,
    assertion,
    cartesian_desc,
    circulant_desc,
    circulant_json,
    graph_from_desc,
    layered_desc,
    make_report,
    to_json,
    witness_json,
)
from .reproduce import run_section
from .type1 import adams_vertex_map, type1_group_table, type1_set
from .type2 import ThetaMap, classify_theta, type2_group_check, type2_set


def _graph_from_args(args, attr="graph") -> Circulant:
    text = getattr(args, attr, None)
    if text is not None:
        return parse_graph(text)
    if args.n is not None and args.set is not None:
        return parse_graph(f"n={args.n};R={args.set}")
    raise ParseError("no graph given: pass `n=<int>;R=...` or --n with --set")


def _emit(report: dict, args) -> int:
    text = to_json(report)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    if getattr(args, "json", False):
        sys.stdout.write(text)
    else:
        for a in report["assertions"]:
            print(f"[{'PASS' if a['passed'] else 'FAIL'}] {a['name']}"
                  + (f" -- {a['detail']}" if a["detail"] and not a["passed"] else ""))
        summary = _summary_line(report)
        if summary:
            print(summary)
        if getattr(args, "out", None):
            print(f"report written to {args.out}")
    return 0 if all_passed(report) else 1


def _summary_line(report: dict) -> str:
    results = report["results"]
    if isinstance(results, dict) and "summary" in results:
        return results["summary"]
    return ""


def _member_summary(members, limit=8) -> str:
    shown = " | ".join(",".join(map(str, m.conn)) for m in members[:limit])
    extra = f" ... ({len(members) - limit} more)" if len(members) > limit else ""
    return f"{len(members)} members: {shown}{extra}"


def _member_witnesses(orbit_members, base, reps):
    """Verified witnesses for every member of a Type-1 orbit."""
    out = []
    src = realize(base)
    for member, x in zip(orbit_members, reps):
        w = make_witness(src, realize(member), adams_vertex_map(base.n, x), f"adam(x={x})")
        out.append(witness_json(w, circulant_desc(base), circulant_desc(member)))
    return out


def cmd_t1(args) -> int:
    g = _graph_from_args(args)
    orbit = type1_set(g)
    table = type1_group_table(orbit)
    witnesses = _member_witnesses(orbit.members, g, orbit.reps)
    checks = [
        assertion("orbit-stabilizer product equals unit count", True,
                  f"{len(orbit.members)} members x {len(orbit.stabilizer)} stabilizer"),
        assertion("group table closed", table.closed),
        assertion("group table commutative", table.commutative),
        assertion("group table identity", table.identity_ok),
        assertion(f"group table associativity ({table.associativity})",
                  table.associativity in ("exhaustive", "structural")),
        *[assertion(f"witness for member {i}", w["verified"])
          for i, w in enumerate(witnesses)],
    ]
    results = {
        "base": circulant_json(g),
        "members": [circulant_json(m) for m in orbit.members],
        "representatives": list(orbit.reps),
        "stabilizer": list(orbit.stabilizer),
        "witnesses": witnesses,
        "summary": _member_summary(orbit.members),
    }
    return _emit(make_report(["t1", g.text()], {"graph": g.text()}, results, checks), args)


def cmd_t2(args) -> int:
    g = _graph_from_args(args)
    m = args.m
    try:
        orbit = type2_set(g, m)
    except CircisoError as e:
        ok = valid_type2_ms(g)
        hint = (f"valid m for {g.label()}: {', '.join(map(str, ok))}"
                if ok else f"no valid m exists for {g.label()}")
        print(f"error: {e}\nhint: {hint}", file=sys.stderr)
        return 2
    group = type2_group_check(orbit)
    witnesses = []
    for member in orbit.members:
        if member == g:
            continue
        t = next(t for t, kind, img in orbit.outcomes if kind == "type2" and img == member)
        cls = classify_theta(ThetaMap(g.n, m, t), g)
        witnesses.append(witness_json(cls.witness, circulant_desc(g), circulant_desc(member)))
    checks = [
        assertion("t-stabilizer contains 0", group.contains_zero),
        assertion("t-stabilizer closed under addition", group.closed),
        assertion("t-stabilizer closed under negation", group.has_inverses),
        assertion("induced composition closed", group.composition_closed),
        assertion("induced composition abelian", group.abelian),
        assertion("base acts as identity", group.identity_ok),
        *[assertion(f"witness for member {i}", w["verified"])
          for i, w in enumerate(witnesses)],
    ]
    results = {
        "base": circulant_json(g),
        "m": m,
        "members": [circulant_json(x) for x in orbit.members],
        "t_stabilizer": list(orbit.t_stabilizer),
        "classifications": [
            {"t": t, "kind": kind, "image": circulant_json(img) if img else None}
            for t, kind, img in orbit.outcomes
        ],
        "witnesses": witnesses,
        "summary": f"T2 set (m={m}): " + _member_summary(orbit.members),
    }
    return _emit(
        make_report(["t2", g.text(), f"m={m}"], {"graph": g.text(), "m": m}, results, checks),
        args,
    )


def cmd_classify(args) -> int:
    g = _graph_from_args(args)
    try:
        cls = classify_theta(ThetaMap(g.n, args.m, args.t), g)
    except CircisoError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    witnesses = []
    if cls.witness is not None:
        witnesses.append(witness_json(cls.witness, circulant_desc(g), circulant_desc(cls.image)))
    checks = [assertion("classification computed", True, cls.kind)]
    if witnesses:
        checks.append(assertion("witness verified", witnesses[0]["verified"]))
    results = {
        "graph": circulant_json(g),
        "m": args.m,
        "t": args.t,
        "kind": cls.kind,
        "image": circulant_json(cls.image) if cls.image else None,
        "unit": cls.unit,
        "failing_vertex": cls.failing_vertex,
        "witnesses": witnesses,
        "summary": f"{g.label()} under theta(m={args.m},t={args.t}): {cls.kind}"
                   + (f" -> {cls.image.label()}" if cls.image else ""),
    }
    return _emit(
        make_report(["classify", g.text(), f"m={args.m}", f"t={args.t}"],
                    {"graph": g.text(), "m": args.m, "t": args.t}, results, checks),
        args,
    )


def cmd_product(args) -> int:
    g = parse_graph(args.left)
    witnesses = []
    if args.kind == "coprime":
        h = parse_graph(args.right)
        result = product_coprime(g, h)
        if g.n * h.n <= 10_000:
            w = embedding_witness(g, h, result)
            witnesses.append(witness_json(w, cartesian_desc(g, h), circulant_desc(result)))
        inputs = {"kind": args.kind, "left": g.text(), "right": h.text()}
        name = f"{g.label()} x {h.label()}"
    else:
        if args.right is not None:
            print("error: prism/c4 products take a single graph", file=sys.stderr)
            return 2
        result = product_prism(g) if args.kind == "prism" else product_c4(g)
        if result.n <= 60:
            explicit = _prism_edges(g) if args.kind == "prism" else _c4_ring_edges(g)
            w = search_isomorphism(explicit, realize(result))
            witnesses.append(witness_json(w, layered_desc(args.kind, g), circulant_desc(result)))
        inputs = {"kind": args.kind, "graph": g.text()}
        name = f"{args.kind} x {g.label()}"
    checks = [assertion(f"{name} verified", True, result.label())]
    checks += [assertion("product witness verified", w["verified"]) for w in witnesses]
    results = {
        "product": circulant_json(result),
        "witnesses": witnesses,
        "summary": f"{name} = {result.label()}",
    }
    return _emit(make_report(["product", args.kind], inputs, results, checks), args)


def cmd_verify(args) -> int:
    with open(args.report) as fh:
        doc = json.load(fh)
    witnesses = []
    results = doc.get("results", {})
    if isinstance(results, dict):
        witnesses = results.get("witnesses", [])
    checks = []
    for i, w in enumerate(witnesses):
        rebuilt = IsoWitness(
            source=graph_from_desc(w["source"]),
            target=graph_from_desc(w["target"]),
            bijection=tuple(w["bijection"]),
            verified=False,
            origin=w.get("origin", "file"),
        )
        checks.append(
            assertion(
                f"witness {i}: {w['source']['kind']} n={w['source']['n']}"
                f" -> {w['target']['kind']} n={w['target']['n']}",
                verify_witness(rebuilt),
                rebuilt.origin,
            )
        )
    if not checks:
        checks.append(assertion("no witnesses found in report", False, args.report))
    results_out = {"checked": len(witnesses),
                   "summary": f"re-verified {len(witnesses)} witnesses from {args.report}"}
    return _emit(make_report(["verify", args.report], {"report": args.report},
                             results_out, checks), args)


def cmd_reproduce(args) -> int:
    checks = run_section(args.section)
    passed = sum(1 for c in checks if c.passed)
    results = {
        "section": args.section,
        "total": len(checks),
        "passed": passed,
        "summary": f"section {args.section}: {passed}/{len(checks)} assertions passed",
    }
    return _emit(
        make_report(["reproduce", f"section={args.section}"], {"section": args.section},
                    results, [assertion(c.name, c.passed, c.detail) for c in checks]),
        args,
    )


def cmd_scan(args) -> int:
    report = scan_conjecture(args.n1, args.n2, budget=args.budget)
    checks = []
    for c in report.cases:
        checks.append(
            assertion(
                f"{c.left.label()} x {c.right.label()} conjecture-consistent",
                c.consistent,
                f"factors type2: {c.left_type2}/{c.right_type2}, product: {c.product_type2}",
            )
        )
        for l in c.lifts:
            checks.append(
                assertion(
                    f"lift (m={l.m}, t={l.t}) -> t={l.lifted_t} on {c.product.label()}",
                    l.agrees,
                    f"classified {l.kind}",
                )
            )
    results = {
        "header": report.header,
        "n1": report.n1,
        "n2": report.n2,
        "budget": report.budget,
        "cases": len(report.cases),
        "budget_exhausted": report.exhausted,
        "summary": f"{report.header}; {len(report.cases)} cases scanned",
    }
    return _emit(
        make_report(["scan-conjecture", str(args.n1), str(args.n2)],
                    {"n1": args.n1, "n2": args.n2, "budget": args.budget},
                    results, checks),
        args,
    )


def _add_graph_opts(p, positional=True):
    if positional:
        p.add_argument("graph", nargs="?", help="graph text n=<int>;R=<int>,<int>,...")
    p.add_argument("--n", type=int, help="order (alternative to graph text)")
    p.add_argument("--set", help="comma-separated offsets (alternative to graph text)")


def _add_output_opts(p):
    p.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    p.add_argument("--out", help="write the JSON report to this file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="circiso",
        description="Type-1/Type-2 isomorphism structure of circulant graphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("t1", help="unit-multiplication orbit of a graph")
    _add_graph_opts(p)
    _add_output_opts(p)
    p.set_defaults(fn=cmd_t1)

    p = sub.add_parser("t2", help="Type-2 set of a graph w.r.t. m")
    _add_graph_opts(p)
    p.add_argument("--m", type=int, required=True)
    _add_output_opts(p)
    p.set_defaults(fn=cmd_t2)

    p = sub.add_parser("classify", help="classify a single theta transform")
    _add_graph_opts(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    _add_output_opts(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("product", help="product constructors")
    p.add_argument("kind", choices=["coprime", "prism", "c4"])
    p.add_argument("left", help="graph text")
    p.add_argument("right", nargs="?", help="second graph (coprime only)")
    _add_output_opts(p)
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("verify", help="re-check witnesses stored in a report file")
    p.add_argument("report")
    _add_output_opts(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("reproduce", help="run an embedded catalog section")
    p.add_argument("--section", type=int, choices=[3, 4], required=True)
    _add_output_opts(p)
    p.set_defaults(fn=cmd_reproduce)

    p = sub.add_parser("scan-conjecture", help="experimental product conjecture scan")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--budget", type=int, default=16)
    _add_output_opts(p)
    p.set_defaults(fn=cmd_scan)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except CircisoError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
