"""Command-line entry point: ``bugraph {bc,uniform,verify,construct,disc,enumerate}``.

Exit codes: 0 success or PASS, 1 counterexample or failed check, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Iterator

from . import constructions, report
from .betweenness import betweenness_report, is_betweenness_uniform
from .connectivity import analyze_two_cut, minimal_two_cut
from .discrepancy import DiscrepancyBreakdown, alpha_profile, disc_report
from .enumeration import CorpusFilter, generate_connected
from .graph import Graph, is_connected, is_cycle_graph
from .graph6 import Graph6Record, decode_graph6, encode_graph6, read_graph6
from .verifier import ALL_CLAIM_IDS, CLAIMS, PROP2_CLAIM, PROP2_TITLE, Corpus, run_claims

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _records(source: str | None) -> Iterator[Graph6Record]:
    """Graphs from a graph6 literal, a file path, or standard input ('-' or omitted)."""
    if source is None or source == "-":
        yield from read_graph6(sys.stdin)
    elif os.path.isfile(source):
        with open(source) as fh:
            yield from read_graph6(fh)
    else:
        yield Graph6Record(1, source, decode_graph6(source))


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(report.dumps(doc))
    else:
        for line in lines:
            print(line)


def _fmt(x) -> str:
    return str(x)


def cmd_bc(args) -> int:
    results, lines, failed = [], [], False
    for rec in _records(args.input):
        g = rec.graph
        r = betweenness_report(g)
        n = g.n
        entry = {
            "graph6": rec.text,
            "n": n,
            "vertex_betweenness": list(r.vertex_bc),
            "edge_betweenness": [{"u": u, "v": v, "value": val} for (u, v), val in sorted(r.edge_bc.items())],
            "adjusted_betweenness": list(r.adjusted),
            "uniform": r.uniform,
        }
        lines.append(f"{rec.text} n={n} uniform={'true' if r.uniform else 'false'}")
        lines += [f"  B({x}) = {_fmt(b)}" for x, b in enumerate(r.vertex_bc)]
        lines += [f"  B({u},{v}) = {_fmt(val)}" for (u, v), val in sorted(r.edge_bc.items())]
        lines += [f"  B_a({x}) = {_fmt(b)}" for x, b in enumerate(r.adjusted)]
        if args.check_eq1:
            bad = [x for x in range(n) if r.vertex_bc[x] != (r.adjusted[x] - n + 1) / 2]
            entry["eq1"] = "FAIL" if bad else "PASS"
            if bad:
                entry["eq1_violations"] = bad
                failed = True
            lines.append(f"  eq1: {entry['eq1']}" + (f" at vertices {bad}" if bad else ""))
        results.append(entry)
    body = {"operation": "betweenness", "results": results}
    if args.check_eq1:
        body["verdict"] = "FAIL" if failed else "PASS"
    _emit(args, report.make_document("bc", {"source": args.input or "-"}, body), lines)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_uniform(args) -> int:
    results, lines = [], []
    for rec in _records(args.input):
        if not is_connected(rec.graph):
            ok, value, verdict = False, None, "disconnected"
        else:
            ok, value = is_betweenness_uniform(rec.graph)
            verdict = "uniform" if ok else "non-uniform"
        results.append({"graph6": rec.text, "verdict": verdict, "uniform": ok, "value": value})
        if args.filter:
            if ok:
                lines.append(rec.text)
        else:
            lines.append(f"{rec.text} {verdict}" + (f" B={value}" if ok else ""))
    body = {"operation": "uniformity", "results": results,
            "uniform_count": sum(r["uniform"] for r in results)}
    _emit(args, report.make_document("uniform", {"source": args.input or "-"}, body), lines)
    return EXIT_OK


def _claim_ids(args) -> list[str]:
    ids = []
    for item in args.claim or []:
        ids += [c.strip() for c in item.split(",") if c.strip()]
    if args.all:
        ids += ALL_CLAIM_IDS
    if not ids:
        raise UsageError("no claim selected; use --claim ID, --all or --list")
    unknown = [c for c in ids if c not in ALL_CLAIM_IDS]
    if unknown:
        raise UsageError(f"unknown claim(s) {', '.join(unknown)}; known claims: {', '.join(ALL_CLAIM_IDS)}")
    return list(dict.fromkeys(ids))


def cmd_verify(args) -> int:
    if args.list:
        for cid in ALL_CLAIM_IDS:
            title = PROP2_TITLE if cid == PROP2_CLAIM else CLAIMS[cid].title
            print(f"{cid:16s} {title}")
        return EXIT_OK
    ids = _claim_ids(args)
    if args.corpus and not os.path.isfile(args.corpus):
        raise UsageError(f"corpus file {args.corpus!r} not found")
    corpus = Corpus(n_min=args.n_min, n_max=args.n, path=args.corpus)
    workers = max(1, args.threads or os.cpu_count() or 1)
    start = time.perf_counter()
    reports = run_claims(ids, corpus, tamper=args.tamper, assume_hypothesis=args.assume_hypothesis,
                         workers=workers)
    elapsed = time.perf_counter() - start
    failed = any(r.verdict == "FAIL" for r in reports)
    lines = []
    for r in reports:
        lines.append(r.summary())
        for cex in r.counterexamples[:args.show]:
            lines.append(f"  counterexample {cex['graph6']}: {'; '.join(cex['problems'][:3])}")
        if len(r.counterexamples) > args.show:
            lines.append(f"  ... {len(r.counterexamples) - args.show} more (use --json for the full list)")
        for key, count in sorted(r.data.items()):
            lines.append(f"  {key}: {count}")
    lines.append(f"overall {'FAIL' if failed else 'PASS'}")
    body = {"operation": "verify", "verdict": "FAIL" if failed else "PASS",
            "reports": [r.to_dict() for r in reports]}
    inputs = {"claims": ids, "n_min": args.n_min, "n_max": args.n, "corpus": args.corpus,
              "tamper": args.tamper, "assume_hypothesis": args.assume_hypothesis}
    timing = {"elapsed_seconds": round(elapsed, 3), "workers": workers}
    _emit(args, report.make_document("verify", inputs, body, timing), lines)
    return EXIT_FAIL if failed else EXIT_OK


def _family_graph(args) -> tuple[Graph, list[str]]:
    fam, params = args.family, args.params
    arity = {"cycle": 1, "complete": 1, "path": 1, "star": 1, "bipartite": 2, "petersen": 0, "tight": 0}
    if len(params) != arity[fam]:
        raise UsageError(f"{fam} takes {arity[fam]} integer parameter(s), got {len(params)}")
    if fam == "tight":
        if None in (args.ell, args.d, args.n):
            raise UsageError("tight needs --ell, --d and --n")
        p = constructions.TightnessParams(args.ell, args.d, args.n)
        g = constructions.tightness_construction(p, check=False, variant=args.variant)
        return g, constructions.check_tightness(g, p)
    if fam == "cycle":
        g = constructions.cycle(params[0])
        return g, [] if is_cycle_graph(g) else ["not a cycle"]
    if fam == "complete":
        g = constructions.complete(params[0])
        return g, [] if g.is_complete() else ["not complete"]
    if fam == "path":
        g = constructions.path(params[0])
        return g, [] if g.num_edges == g.n - 1 else ["wrong edge count"]
    if fam == "star":
        g = constructions.star(params[0])
        return g, [] if g.max_degree == g.n - 1 else ["no centre"]
    if fam == "bipartite":
        g = constructions.complete_bipartite(*params)
        return g, [] if g.num_edges == params[0] * params[1] else ["wrong edge count"]
    g = constructions.petersen()
    ok = g.n == 10 and g.num_edges == 15 and set(g.degrees()) == {3}
    return g, [] if ok else ["not cubic on 10 vertices"]


def cmd_construct(args) -> int:
    g, problems = _family_graph(args)
    print(encode_graph6(g))
    if args.verify:
        print("PASS" if not problems else "FAIL: " + "; ".join(problems), file=sys.stderr)
        return EXIT_FAIL if problems else EXIT_OK
    return EXIT_OK


def _breakdown(b: DiscrepancyBreakdown) -> dict:
    return {"disc": b.total, "kplus_pairs": b.part_kplus, "l_pairs": b.part_l, "cross_pairs": b.part_cross,
            "parts_sum_exact": b.consistent}


def cmd_disc(args) -> int:
    results, lines = [], []
    for rec in _records(args.input):
        g = rec.graph
        a = minimal_two_cut(g) if args.minimal else analyze_two_cut(g, *args.cut)
        rep = disc_report(g, a)
        alpha = alpha_profile(g, a.p, a.q, a.K)
        entry = {
            "graph6": rec.text,
            "cut": [a.p, a.q],
            "K": sorted(a.K),
            "L_components": [sorted(c) for c in a.Ls],
            "case": a.case_tag,
            "breakdown": _breakdown(rep.whole),
            "alpha": [{"w": w, "alpha": al} for w, al in sorted(alpha.items())],
            "per_component": [{"graph6": encode_graph6(sub), "cut": [sa.p, sa.q], "K": sorted(sa.K),
                               "breakdown": _breakdown(b)} for sub, sa, b in rep.per_component],
        }
        results.append(entry)
        b = rep.whole
        lines.append(f"{rec.text} cut={{{a.p},{a.q}}} K={sorted(a.K)} case={a.case_tag or '-'}")
        lines.append(f"  disc = {b.total} = {b.part_kplus} (K+ pairs) + {b.part_l} (L pairs)"
                     f" + {b.part_cross} (K+ x L pairs)  exact={'yes' if b.consistent else 'NO'}")
        lines.append("  alpha: " + " ".join(f"{w}:{al}" for w, al in sorted(alpha.items())))
        for sub, sa, sb in rep.per_component:
            lines.append(f"  component {encode_graph6(sub)} disc = {sb.total}")
    body = {"operation": "discrepancy", "results": results}
    inputs = {"source": args.input or "-", "cut": "minimal" if args.minimal else list(args.cut)}
    _emit(args, report.make_document("disc", inputs, body), lines)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    flt = CorpusFilter.parse(args.filter)
    graphs = [encode_graph6(g) for g in generate_connected(args.n) if flt(g)]
    if args.json:
        body = {"operation": "enumerate", "count": len(graphs), "graphs": [] if args.count else graphs}
        print(report.dumps(report.make_document("enumerate", {"n": args.n, "filter": args.filter}, body)))
    elif args.count:
        print(len(graphs))
    else:
        for text in graphs:
            print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bugraph", description="Exact betweenness tools for small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", nargs="?", help="graph6 string, graph6 file, or '-' for stdin (default)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        return p

    p = with_input(sub.add_parser("bc", help="exact vertex, edge and adjusted betweenness"))
    p.add_argument("--check-eq1", action="store_true", help="check B(x) = (B_a(x) - n + 1)/2")
    p.set_defaults(func=cmd_bc)

    p = with_input(sub.add_parser("uniform", help="betweenness-uniformity verdict per graph"))
    p.add_argument("--filter", action="store_true", help="echo only uniform graphs as graph6")
    p.set_defaults(func=cmd_uniform)

    p = sub.add_parser("verify", help="check registered claims over a corpus")
    p.add_argument("--claim", action="append", help="claim id (repeatable or comma separated)")
    p.add_argument("--all", action="store_true", help="run every registered claim")
    p.add_argument("--list", action="store_true", help="list claim ids and exit")
    p.add_argument("-n", type=int, help="largest order of generated graphs (default per claim, at most 8)")
    p.add_argument("--n-min", type=int, help="smallest order of generated graphs")
    p.add_argument("--corpus", help="graph6 file to use instead of generated graphs")
    p.add_argument("--threads", type=int, help="worker processes (default: available cores)")
    p.add_argument("--tamper", action="store_true", help="run the deliberately broken checks (self-test)")
    p.add_argument("--assume-hypothesis", action="store_true",
                   help="treat every corpus graph as meeting the hypothesis (planted fixtures)")
    p.add_argument("--show", type=int, default=5, help="counterexamples printed per claim")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="print a named graph as graph6")
    p.add_argument("family", choices=["cycle", "complete", "path", "star", "bipartite", "petersen", "tight"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--variant", choices=["layered", "literal"], default="layered")
    p.add_argument("--verify", action="store_true", help="re-check postconditions; PASS/FAIL on stderr")
    p.set_defaults(func=cmd_construct)

    p = with_input(sub.add_parser("disc", help="discrepancy of a 2-cut with its three-part breakdown"))
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--cut", nargs=2, type=int, metavar=("P", "Q"))
    sel.add_argument("--minimal", action="store_true", help="use the minimal 2-cut")
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("enumerate", help="connected graphs on n vertices, one per isomorphism class")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--filter", help="e.g. 'two_connected,min_degree=3' or 'uniform'")
    p.add_argument("--count", action="store_true", help="print only the number of graphs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"bugraph {args.command}: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
