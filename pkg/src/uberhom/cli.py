"""Command-line interface: ``uberhom <command> [input] [options]``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import __version__
from . import graphs as G
from . import table1 as T
from .bold import (TooLargeError, bold_complex, bold_homology, certify_retraction,
                   connected_domination_polynomial, domination_polynomial, dominating_complex,
                   euler_check, retraction_matching)
from .complex import validate
from .linalg import Field, MalformedInputError
from .simplicial import SimplicialComplex
from .uber import MAX_UBER_VERTICES, uber_homology

SCHEMA_VERSION = 1

#: the reduce command builds the full bold complex only up to this size
MAX_REDUCE_VERTICES = 14


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# inputs


def _add_input(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", metavar="STRING", help="graph in graph6 format")
    src.add_argument("--edges", metavar="PATH", help="edge-list file ('-' for stdin)")
    src.add_argument("--family", metavar="NAME", help=f"one of {', '.join(sorted(G.FAMILIES))}")
    p.add_argument("--params", nargs="*", default=[], metavar="P",
                   help="family parameters (space or comma separated)")
    p.add_argument("--seed", type=int, default=None, help="seed for random families")


def _split_params(raw: List[str]) -> List[str]:
    out = []
    for item in raw:
        out.extend(x for x in item.replace(",", " ").split() if x)
    return out


def load_graph(args) -> tuple:
    """``(graph, descriptor)`` from the parsed input flags."""
    if args.g6 is not None:
        return G.parse_graph6(args.g6), {"g6": args.g6}
    if args.edges is not None:
        try:
            text = sys.stdin.read() if args.edges == "-" else open(args.edges).read()
        except OSError as e:
            raise UsageError(f"cannot read {args.edges}: {e.strerror}") from None
        return G.parse_edge_list(text), {"edges": args.edges}
    params = _split_params(args.params)
    spec = G.FamilySpec(args.family, tuple(params), args.seed)
    desc = {"family": args.family, "params": params}
    if args.seed is not None:
        desc["seed"] = args.seed
    return G.generate(spec), desc


def _field(args) -> Field:
    return Field.parse(getattr(args, "field", "2"))


# ---------------------------------------------------------------------------
# commands; each returns (payload, exit_code)


def cmd_bold(args, g):
    h = bold_homology(g, _field(args), via=args.via, force=args.force)
    ranks = h.nonzero()
    return {"ranks": {str(d): r for d, r in ranks.items()}, "euler": h.euler(), "via": args.via}, 0


def cmd_uber(args, g):
    if g.n > MAX_UBER_VERTICES and not args.force:
        raise UsageError(f"{g.n} vertices exceeds the über limit {MAX_UBER_VERTICES}; pass --force")
    X = SimplicialComplex.from_graph(g)
    ranks = uber_homology(X, _field(args), force=True)
    return {"ranks": {f"{j},{i},{k}": r for (j, i, k), r in ranks.items()}}, 0


def cmd_domp(args, g):
    dc = connected_domination_polynomial(g, args.force)
    out = {"connected": list(dc.coeffs), "connected_text": str(dc),
           "connected_at_minus1": dc(-1)}
    if not args.connected_only:
        d = domination_polynomial(g, args.force)
        out.update({"dominating": list(d.coeffs), "dominating_text": str(d)})
    return out, 0


def cmd_euler(args, g):
    rep = euler_check(g, _field(args), force=args.force)
    return rep, 0 if rep["pass"] else 1


def cmd_reduce(args, g):
    dh = dominating_complex(g, _field(args), force=args.force)
    counts = {str(k): len(b) for k, b in dh.basis.items() if b}
    out = {"dh_generators": counts, "dh_total": dh.total_size(), "dh_valid": bool(validate(dh))}
    code = 0 if out["dh_valid"] else 1
    if g.n <= MAX_REDUCE_VERTICES or args.force:
        ch = bold_complex(g, _field(args), force=True)
        m = retraction_matching(g, force=True)
        cert = certify_retraction(g, ch, m)
        crit = m.critical(ch)
        same = all(sorted(crit.get(k, [])) == sorted(dh.basis.get(k, [])) for k in ch.basis)
        out["matching"] = {
            "ch_generators": ch.total_size(),
            "pairs": len(m),
            "critical": sum(len(v) for v in crit.values()),
            "certified": cert.ok,
            "certificate_clause": cert.clause,
            "critical_equals_dh": same,
        }
        if not (cert.ok and same):
            code = 1
    else:
        out["matching"] = None
        out["note"] = f"matching statistics need the full bold complex; skipped above {MAX_REDUCE_VERTICES} vertices (use --force)"
    return out, code


def cmd_table1(args):
    def progress(r):
        if not args.json:
            print(_table_line(r), flush=True)

    results = T.run(stretch=args.stretch, only=args.only, progress=progress)
    failed = [r for r in results if r.status == "FAIL"]
    payload = {
        "rows": [r.as_dict() for r in results],
        "summary": {s: sum(1 for r in results if r.status == s) for s in ("PASS", "FAIL", "SKIP")},
    }
    return payload, 1 if failed else 0


def _fmt_ranks(r):
    if r is None:
        return "unknown"
    if not r:
        return "0"
    return " + ".join(f"F^{v}({k})" if v != 1 else f"F({k})" for k, v in sorted(r.items()))


def _table_line(r: T.RowResult) -> str:
    got = _fmt_ranks(r.ranks) if r.status != "SKIP" else "skipped"
    chi = "-" if r.chi is None else str(r.chi)
    note = f"  [{'; '.join(r.notes)}]" if r.notes else ""
    return (f"{r.status:4}  {r.label:<18} expected {_fmt_ranks(r.expected_ranks):<16} chi {r.expected_chi!s:>4}"
            f"  got {got:<16} chi {chi:>4}  {r.seconds:7.2f}s{note}")


# ---------------------------------------------------------------------------
# output


def _text(payload: dict, indent: str = "") -> str:
    lines = []
    width = max((len(k) for k in payload), default=0)
    for k, v in payload.items():
        if isinstance(v, dict) and v:
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{k:<{width}}  {v}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uberhom", description="Bold homology and überhomology of graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, field=True):
        if field:
            sp.add_argument("--field", default="2", help="2 (default), a prime p, or Q")
        sp.add_argument("--json", action="store_true", help="emit a JSON document")
        sp.add_argument("--force", action="store_true", help="lift the size guards")

    sp = sub.add_parser("bold", help="bold homology ranks")
    _add_input(sp)
    common(sp)
    sp.add_argument("--via", choices=["dh", "ch", "both"], default="dh",
                    help="dominating complex (default), full bold complex, or both")

    sp = sub.add_parser("uber", help="triply graded überhomology of a graph as a 1-complex")
    _add_input(sp)
    common(sp)

    sp = sub.add_parser("domp", help="domination polynomials")
    _add_input(sp)
    common(sp, field=False)
    sp.add_argument("--connected-only", action="store_true")

    sp = sub.add_parser("euler", help="Euler characteristic against D^c(-1)")
    _add_input(sp)
    common(sp)

    sp = sub.add_parser("reduce", help="dominating complex sizes and retraction matching statistics")
    _add_input(sp)
    common(sp)

    sp = sub.add_parser("table1", help="recompute the published table and diff against it")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--stretch", action="store_true",
                    help="also compute chi of the skipped rows through D^c(-1) (Cube(5) takes tens of minutes)")
    sp.add_argument("--only", metavar="TEXT", help="restrict to rows whose label contains TEXT, or a family name")
    return p


COMMANDS = {"bold": cmd_bold, "uber": cmd_uber, "domp": cmd_domp, "euler": cmd_euler, "reduce": cmd_reduce}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    t0 = time.perf_counter()
    doc = {"schema_version": SCHEMA_VERSION, "command": args.command}
    try:
        if args.command == "table1":
            payload, code = cmd_table1(args)
        else:
            g, desc = load_graph(args)
            doc["input"] = dict(desc, n=g.n, m=len(g.edges))
            if hasattr(args, "field"):
                doc["field"] = str(_field(args))
            payload, code = COMMANDS[args.command](args, g)
    except (UsageError, G.GraphFormatError, G.InvalidSpecError, MalformedInputError, TooLargeError) as e:
        print(f"uberhom: error: {e}", file=sys.stderr)
        return 2
    doc.update(payload)
    doc["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    elif args.command == "table1":
        s = payload["summary"]
        print(f"{s['PASS']} passed, {s['FAIL']} failed, {s['SKIP']} skipped")
    else:
        print(_text({k: v for k, v in doc.items() if k != "schema_version"}))
    return code


if __name__ == "__main__":
    sys.exit(main())
