"""Command-line entry point: ``prismatic verify | check-kab | invariants | cert``."""
from __future__ import annotations

import argparse
import json
import sys

from prismatic.campaign import (
    EXIT_BUDGET,
    EXIT_FAIL,
    EXIT_INPUT,
    EXIT_OK,
    MODES,
    counterexample_check,
    emit_certificate,
    generate_lines,
    load_allowlist,
    run_campaign,
)
from prismatic.errors import BudgetExhausted, GraphFormatError, TheoremViolation
from prismatic.graph import load_graph, parse_edge_list_text, read_graph6_lines, to_graph6
from prismatic.invariants import TOUGHNESS_MAX_N, connectivity, format_toughness, independence_number, is_bipartite, toughness
from prismatic.pipeline import prism_ham_certificate, verify_certificate


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="prismatic", description="Prism-Hamiltonicity certificates and sweeps.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification campaign over a graph stream")
    v.add_argument("--mode", choices=MODES, required=True)
    v.add_argument("--t", type=int, default=3, help="cycle length for prop9 (default 3)")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="graph6 stream, '-' for stdin")
    src.add_argument("--gen", metavar="SPEC", help="e.g. 'gnp n=12 p=0.5 count=1000 seed=7'")
    v.add_argument("--report", metavar="FILE", help="JSON-lines report (default stdout)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--allow-gaps", metavar="FILE", help="JSON list of triaged gap reports")
    v.add_argument("--timings", action="store_true", help="add per-graph runtime (breaks byte-identical reports)")

    k = sub.add_parser("check-kab", help="parameters and prism of K_{K,A}")
    k.add_argument("k", type=int, metavar="K")
    k.add_argument("a", type=int, metavar="A")

    i = sub.add_parser("invariants", help="alpha, kappa, toughness for each input graph")
    i.add_argument("--input", metavar="FILE", required=True)

    c = sub.add_parser("cert", help="write a certificate for one graph")
    c.add_argument("--graph", metavar="FILE", required=True)
    c.add_argument("--out", metavar="FILE", required=True)
    return ap


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, encoding="ascii") as fh:
        return fh.read().splitlines()


def cmd_verify(args) -> int:
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        lines = list(generate_lines(args.gen)) if args.gen else _read_lines(args.input)
        allow = load_allowlist(args.allow_gaps) if args.allow_gaps else None
        report = run_campaign(lines, args.mode, t=args.t, jobs=args.jobs, allow=allow, timings=args.timings)
    except (OSError, UnicodeDecodeError, GraphFormatError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = "".join(line + "\n" for line in report.lines())
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
        summary = report.summary()
        print(_dump({"records": summary["records"], "status": summary["status"]}))
    else:
        sys.stdout.write(text)
    for r in report.records:
        if r["status"] == "input_error":
            print(f"line {r['line']}: {r['error']}", file=sys.stderr)
    return report.exit_code()


def cmd_check_kab(args) -> int:
    try:
        rep = counterexample_check(args.k, args.a)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(_dump(rep))
    return EXIT_OK if rep["confirmed"] else EXIT_FAIL


def _invariant_record(g) -> dict:
    alpha, indep = independence_number(g)
    kappa, cut = connectivity(g)
    rec = {"graph6": to_graph6(g) if g.n <= 62 else None, "n": g.n, "m": g.m,
           "alpha": alpha, "independent_set": indep, "kappa": kappa, "cut": cut,
           "bipartite": bool(is_bipartite(g))}
    if g.n <= TOUGHNESS_MAX_N:
        tough, tcut, comps = toughness(g)
        rec.update(toughness=format_toughness(tough), toughness_cut=tcut, toughness_components=comps)
    else:
        rec["toughness"] = None
    return rec


def cmd_invariants(args) -> int:
    try:
        lines = _read_lines(args.input)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    head = next((ln.split() for ln in lines if ln.strip()), [])
    if len(head) == 2 and all(tok.isdigit() for tok in head):
        try:
            graphs = [(1, parse_edge_list_text("\n".join(lines)))]
        except GraphFormatError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    else:
        graphs = [(ln, g) for ln, _, g in read_graph6_lines(lines)]
    code = EXIT_OK
    for lineno, g in graphs:
        if isinstance(g, GraphFormatError):
            print(f"line {lineno}: {g}", file=sys.stderr)
            code = EXIT_INPUT
            continue
        if g.n == 0:
            print(f"line {lineno}: empty graph has no parameters", file=sys.stderr)
            code = EXIT_INPUT
            continue
        try:
            print(_dump(_invariant_record(g)))
        except BudgetExhausted as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            code = max(code, EXIT_BUDGET)
    return code


def cmd_cert(args) -> int:
    try:
        g = load_graph(args.graph)
    except (OSError, UnicodeDecodeError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        cert = prism_ham_certificate(g)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TheoremViolation as exc:
        print(f"theorem violation: {exc} {exc.context}", file=sys.stderr)
        return EXIT_FAIL
    try:
        emit_certificate(args.out, cert)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    ok = verify_certificate(g, cert)
    print(_dump({"kind": cert.kind, "trace": list(cert.trace), "verified": ok}))
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"verify": cmd_verify, "check-kab": cmd_check_kab, "invariants": cmd_invariants, "cert": cmd_cert}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
