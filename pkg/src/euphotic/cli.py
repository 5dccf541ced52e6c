"""Command line: facet | grade | hessenberg | classify | audit | chargen | spancheck | plot."""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import report
from .apartment import facet, orbit_contains
from .characters import CharacterTuple, count_generic, is_generic_A, is_generic_BCD
from .cosets import verify_span_lemma
from .errors import CapabilityError, ConsistencyError, InputError
from .exact import fmt_vec, rat
from .grading import grade
from .hessenberg import enumerate_candidates, in_region
from .plot import render as render_svg
from .roots import build
from .scenario import Scenario, load, shipped_names
from .spherical import enumerate_dim_eq, levi_subset, canned_list, parse_levi


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _threads() -> int:
    raw = os.environ.get("EUPHOTIC_THREADS", "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise InputError(f"EUPHOTIC_THREADS must be a positive integer, got {raw!r}") from exc
    if n < 1:
        raise InputError("EUPHOTIC_THREADS must be positive")
    return n


# -- commands ----------------------------------------------------------------


def cmd_facet(args, full: bool = False):
    rs = build(args.type, args.rank)
    F = facet(rs, _ints(args.J))
    g = grade(F)
    res = {
        "group": rs.name,
        "J": sorted(F.J),
        "m": F.m,
        "hyperspecial": F.hyperspecial,
        "barycenter": fmt_vec(F.barycenter),
        "grading_dims": list(g.dims),
        "n_levi_roots": len(g.levi_roots),
        "n_vp_weights": len(g.vp_weights),
    }
    if rs.classical:
        res["barycenter_classical"] = fmt_vec(rs.to_classical(F.barycenter))
    if full:
        res["grading"] = g.as_json()
    return res, {}


def run_hessenberg(scn: Scenario, bound=None) -> tuple[dict, dict]:
    rs = scn.rs
    bound = scn.bound if bound is None else rat(bound)
    if bound is None:
        raise InputError(f"{scn.name}: missing fields: enumeration.bound")
    if bound == 0:
        data, summary = [], {"enumerated": 0, "bound": "0", "lattice": scn.lattice}
    else:
        data, summary = enumerate_candidates(scn.facet_P, scn.x_Q, scn.lattice, bound, scn.predicates, scn.rules)
    rows, survivors_ok = [], True
    for d in data:
        row = d.as_json()
        alive = not d.halfspace_empty and not d.rule_empty and not d.exceptional
        if d.simple_root_meager:
            alive = False
        row["survivor"] = alive
        if scn.region:
            inside = in_region(rs, scn.region, d.y)
            row["in_region"] = inside
            if alive and not inside:
                survivors_ok = False
        rows.append(row)
    listed = []
    points_ok = True
    table = {d.y for d in data}
    for y, cite, expect in scn.points:
        w = orbit_contains(rs, scn.x_Q, y, scn.lattice)
        member = w is not None
        item = {"y": fmt_vec(y), "cite": cite, "expect": expect, "member": member,
                "in_table": scn.facet_P.canonical(y) in table}
        if rs.classical:
            item["y_classical"] = fmt_vec(rs.to_classical(y))
        if w is not None:
            item["witness"] = w.as_json()
        if member != (expect == "member"):
            points_ok = False
        listed.append(item)
    res = {
        "scenario": scn.name,
        "group": rs.name,
        "x_Q": fmt_vec(scn.x_Q),
        "summary": summary,
        "n_survivors": sum(r["survivor"] for r in rows),
        "candidates": rows,
        "listed_points": listed,
    }
    checks = {"listed_points": points_ok}
    if scn.region:
        checks["survivors_in_region"] = survivors_ok
    return res, checks


def cmd_hessenberg(args):
    return run_hessenberg(load(args.scenario), args.bound)


def cmd_classify(args):
    rows = enumerate_dim_eq(args.type, args.max_rank)
    listed_ok = True
    for r in range(1, args.max_rank + 1):
        got = {(p.group, p.psi, p.q) for p in rows}
        for p in canned_list(args.type, r):
            if (p.group, p.psi, p.q) not in got or not p.holds:
                listed_ok = False
    shown = rows if args.all else [p for p in rows if p.listed]
    res = {
        "type": args.type.upper(),
        "max_rank": args.max_rank,
        "n_dim_equality": len(rows),
        "n_listed": sum(p.listed for p in rows),
        "pairs": [p.as_json() for p in shown],
    }
    return res, {"listed_pairs_found": listed_ok}


def cmd_audit(args):
    scn = load(args.scenario)
    a = scn.audit()
    res = {"scenario": scn.name, "group": scn.rs.name, "title": scn.title, **a.as_json()}
    return res, {"open_orbit": a.open_orbit, "rigidity_sum_zero": a.rigidity_sum == 0}


def cmd_chargen(args):
    kind = args.kind.upper()
    if args.exps is not None:
        if kind not in ("A", "BCD"):
            raise InputError("kind must be A or BCD")
        chi = CharacterTuple(args.q, tuple(_ints(args.exps)))
        fn = is_generic_A if kind == "A" else is_generic_BCD
        ok, bad = fn(args.n, chi)
        return {"kind": kind, "n": args.n, "chi": chi.as_json(), "generic": ok, "violations": bad}, {}
    return {"kind": kind, "n": args.n, "q": args.q, "count": count_generic(kind, args.n, args.q)}, {}


def cmd_spancheck(args):
    rs = build(args.type, args.rank)
    psi = levi_subset(rs, parse_levi(rs, args.psi))
    q = levi_subset(rs, parse_levi(rs, args.q))
    reps = verify_span_lemma(rs, psi, q)
    res = {
        "group": rs.name,
        "psi_levi": sorted(psi),
        "q_levi": sorted(q),
        "n_cosets": len(reps),
        "cosets": [r.as_json() for r in reps],
    }
    return res, {"span_lemma": all(r.passes for r in reps)}


def cmd_plot(args):
    scn = load(args.scenario)
    rs = scn.rs
    pts = []
    if scn.bound:
        data, _ = enumerate_candidates(scn.facet_P, scn.x_Q, scn.lattice, scn.bound, scn.predicates, scn.rules,
                                       dedupe=False)
        for d in data:
            if d.exceptional:
                kind = "exceptional"
            elif d.halfspace_empty or d.rule_empty:
                kind = "empty"
            else:
                kind = "survivor"
            pts.append((d.y, kind))
    svg = render_svg(rs, args.N, pts, scn.region, title=scn.title)
    Path(args.output).write_text(svg)
    return {"scenario": scn.name, "output": str(args.output), "n_points": len(pts), "walls_N": args.N}, {}


def cmd_list(args):
    return {"scenarios": shipped_names()}, {}


# -- entry point ---------------------------------------------------------------


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="euphotic", description=__doc__)
    p.add_argument("--out", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def group_args(sp, need_rank=False):
        sp.add_argument("--type", required=True, help="A..G, optionally with rank, e.g. G2 or B")
        sp.add_argument("--rank", type=int, default=None, required=need_rank)

    for name, helptext in (("facet", "facet summary"), ("grade", "facet summary with all weights")):
        sp = sub.add_parser(name, help=helptext)
        group_args(sp)
        sp.add_argument("--J", required=True, help="affine simple indices, e.g. 0,2")

    sp = sub.add_parser("hessenberg", help="candidate table for a scenario")
    sp.add_argument("--scenario", required=True)
    sp.add_argument("--bound", default=None, help="override the enumeration bound")

    sp = sub.add_parser("classify", help="pairs meeting the dimension equality")
    sp.add_argument("--type", required=True)
    sp.add_argument("--max-rank", type=int, required=True)
    sp.add_argument("--all", action="store_true", help="list unlisted pairs too")

    sp = sub.add_parser("audit", help="rigidity numerology of a scenario")
    sp.add_argument("--scenario", required=True)

    sp = sub.add_parser("chargen", help="character genericity")
    sp.add_argument("--kind", required=True, help="A or BCD")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--exps", default=None, help="check one tuple instead of counting")

    sp = sub.add_parser("spancheck", help="span criterion over double cosets")
    group_args(sp)
    sp.add_argument("--psi", required=True, help="partition (type A) or parabolic label")
    sp.add_argument("--q", required=True)

    sp = sub.add_parser("plot", help="SVG of a rank-2 scenario")
    sp.add_argument("--scenario", required=True)
    sp.add_argument("--output", required=True)
    sp.add_argument("--N", type=int, default=2, help="walls a + n = 0 for |n| <= N")

    sub.add_parser("scenarios", help="list shipped scenarios")
    for sp in sub.choices.values():
        sp.add_argument("--out", choices=("json", "text"), default=argparse.SUPPRESS)
    return p


COMMANDS = {
    "facet": cmd_facet,
    "grade": lambda a: cmd_facet(a, full=True),
    "hessenberg": cmd_hessenberg,
    "classify": cmd_classify,
    "audit": cmd_audit,
    "chargen": cmd_chargen,
    "spancheck": cmd_spancheck,
    "plot": cmd_plot,
    "scenarios": cmd_list,
}


def main(argv=None) -> int:
    try:
        args = parser().parse_args(argv)
    except SystemExit as exc:
        # argparse reports usage errors with status 2; those are input errors here
        return 1 if exc.code == 2 else int(exc.code or 0)
    try:
        _threads()
        result, checks = COMMANDS[args.command](args)
    except (InputError, CapabilityError) as exc:
        print(f"euphotic {args.command}: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"euphotic {args.command}: internal check failed: {exc}", file=sys.stderr)
        return 2
    rep = report.envelope(args.command, result, checks)
    sys.stdout.write(report.render(rep, args.out))
    return 0 if rep["ok"] else 2


if __name__ == "__main__":
    sys.exit(main())
