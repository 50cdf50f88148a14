"""crossed-ext: run validation and classification commands over a workspace.

Usage: crossed-ext <command> --input FILE [--field q|p:PRIME]
                   [--max-degree N] [--format human|json]

The input document carries its own `commands` list; `report` executes all of
them, any other command name executes just the matching entries (for `check`,
an empty list means "validate every named object").  Exit status is 0 iff
every executed command passed.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import CheckFailure
from .cohomology import (class_of, cohomology_table, connecting_hom)
from .crossed import classify2, theta as theta_of, choose_sections, \
    yoneda_crossed_module, induced_pair
from .extensions import baer_sum, baer_sum_n2, pushout, split_detect
from .workspace import Workspace, parse_workspace

COMMANDS = ("check", "cohomology", "theta", "classify", "baer-sum",
            "pushout", "connecting", "yoneda", "report")
DEFAULT_DEGREE_CAP = 4


def _scalars(field, vec):
    return [field.to_str(x) for x in vec]


def _cmd_check(ws, args):
    out = []
    names = [args["object"]] if "object" in args else \
        [n for table in (ws.algebras, ws.modules, ws.morphisms, ws.cochains,
                         ws.crossed_modules, ws.sequences, ws.extensions)
         for n in table]
    for n in names:
        out.append({"op": "check", "object": n, "status": "PASS"})
    return out


def _cmd_cohomology(ws, args, degree_cap):
    alg = ws.algebras[args["algebra"]]
    mod = ws.modules[args["module"]]
    cap = args.get("max_degree", degree_cap)
    rows = cohomology_table(alg, mod, cap)
    return [{"op": "cohomology", "algebra": args["algebra"],
             "module": args["module"], "status": "PASS",
             "table": [{"degree": n, "dim_cochains": c, "rank_delta": r,
                        "dim_h": h} for n, c, r, h in rows]}]


def _classify_record(ws, name):
    cm = ws.crossed_modules[name]
    pres = induced_pair(cm)
    cl = classify2(pres)
    field = ws.field
    return pres, cl, {
        "crossed_module": name,
        "induced_g_dim": pres.g.dim,
        "induced_m_dim": pres.M.dim,
        "class_canonical": _scalars(field, cl.canonical),
        "class_is_zero": cl.is_zero()}


def _cmd_theta(ws, args):
    name = args["crossed_module"]
    pres, cl, rec = _classify_record(ws, name)
    s, q = choose_sections(pres)
    th = theta_of(pres, s, q)
    rec.update({"op": "theta", "status": "PASS",
                "theta": _scalars(ws.field, th.vec)})
    return [rec]


def _cmd_classify(ws, args):
    _, cl, rec = _classify_record(ws, args["crossed_module"])
    from .cohomology import cohomology
    dim_h3, _ = cohomology(cl.module.algebra, cl.module, 3, cl.flavor)
    rec.update({"op": "classify", "status": "PASS", "dim_h3": dim_h3})
    return [rec]


def _cmd_baer_sum(ws, args):
    left, right = args["left"], args["right"]
    if left in ws.extensions:
        E = baer_sum(ws.extensions[left], ws.extensions[right])
        return [{"op": "baer-sum", "left": left, "right": right,
                 "status": "PASS", "n": E.n,
                 "top_dim": E.mids[0].dim, "base_dim": E.base.algebra.dim,
                 "splits": split_detect(E) is not None}]
    presA = induced_pair(ws.crossed_modules[left])
    presB = induced_pair(ws.crossed_modules[right])
    S = baer_sum_n2(presA, presB)
    cl = classify2(S)
    return [{"op": "baer-sum", "left": left, "right": right,
             "status": "PASS", "v_dim": S.cm.rep.dim, "l_dim": S.cm.algebra.dim,
             "class_canonical": _scalars(ws.field, cl.canonical)}]


def _cmd_pushout(ws, args):
    pd = pushout(ws.morphisms[args["f"]], ws.morphisms[args["g"]])
    return [{"op": "pushout", "f": args["f"], "g": args["g"], "status": "PASS",
             "dim": pd.D.dim}]


def _cmd_connecting(ws, args):
    ses = ws.sequences[args["sequence"]]
    c = ws.cochains[args["cochain"]]
    cl = connecting_hom(ses, class_of(c))
    return [{"op": "connecting", "sequence": args["sequence"],
             "cochain": args["cochain"], "status": "PASS",
             "degree": cl.degree,
             "class_canonical": _scalars(ws.field, cl.canonical),
             "class_is_zero": cl.is_zero()}]


def _cmd_yoneda(ws, args):
    ses = ws.sequences[args["sequence"]]
    c = ws.cochains[args["cochain"]]
    pres = yoneda_crossed_module(ses, c)
    cl = classify2(pres)
    agree = cl == connecting_hom(ses, class_of(c))
    return [{"op": "yoneda", "sequence": args["sequence"],
             "cochain": args["cochain"],
             "status": "PASS" if agree else "FAIL",
             "v_dim": pres.cm.rep.dim, "l_dim": pres.cm.algebra.dim,
             "class_canonical": _scalars(ws.field, cl.canonical),
             "matches_connecting": agree}]


def run_command(ws: Workspace, cmd: dict, degree_cap=DEFAULT_DEGREE_CAP):
    op = cmd.get("op")
    args = {k: v for k, v in cmd.items() if k != "op"}
    try:
        if op == "check":
            return _cmd_check(ws, args)
        if op == "cohomology":
            return _cmd_cohomology(ws, args, degree_cap)
        if op == "theta":
            return _cmd_theta(ws, args)
        if op == "classify":
            return _cmd_classify(ws, args)
        if op == "baer-sum":
            return _cmd_baer_sum(ws, args)
        if op == "pushout":
            return _cmd_pushout(ws, args)
        if op == "connecting":
            return _cmd_connecting(ws, args)
        if op == "yoneda":
            return _cmd_yoneda(ws, args)
        return [{"op": op, "status": "FAIL", "error": "UNKNOWN_COMMAND"}]
    except KeyError as exc:
        return [{"op": op, "status": "FAIL", "error": "UNRESOLVED_REFERENCE",
                 "detail": str(exc)}]
    except CheckFailure as exc:
        return [{"op": op, "status": "FAIL", "error": exc.code,
                 "detail": str(exc)}]


def run(ws: Workspace, which: str, degree_cap=DEFAULT_DEGREE_CAP):
    selected = [c for c in ws.commands
                if which == "report" or c.get("op") == which]
    if which == "check" and not selected:
        selected = [{"op": "check"}]
    if not selected:
        return [{"op": which, "status": "FAIL", "error": "NO_MATCHING_COMMAND"}]
    out = []
    for cmd in selected:
        out.extend(run_command(ws, cmd, degree_cap))
    return out


def render_human(records):
    lines = []
    for rec in records:
        head = f"[{rec['status']}] {rec['op']}"
        detail = {k: v for k, v in rec.items()
                  if k not in ("status", "op", "table")}
        if detail:
            head += "  " + "  ".join(f"{k}={v}" for k, v in sorted(detail.items()))
        lines.append(head)
        for row in rec.get("table", []):
            lines.append(f"    H^{row['degree']}: dim C = {row['dim_cochains']}"
                         f"  rank d = {row['rank_delta']}"
                         f"  dim H = {row['dim_h']}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser(prog="crossed-ext", description=__doc__)
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--input", required=True)
    ap.add_argument("--field", default=None,
                    help="override the document's field selector")
    ap.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_CAP)
    ap.add_argument("--format", choices=("human", "json"), default="human")
    args = ap.parse_args(argv)

    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.field is not None:
        try:
            doc = json.loads(text)
            doc["field"] = args.field
            text = json.dumps(doc)
        except json.JSONDecodeError:
            pass  # parse_workspace reports the position
    try:
        ws = parse_workspace(text)
    except CheckFailure as exc:
        records = [{"op": "parse", "status": "FAIL", "error": exc.code,
                    "detail": str(exc)}]
        _emit(records, args.format)
        return 1
    records = run(ws, args.command, args.max_degree)
    _emit(records, args.format)
    return 0 if all(r["status"] == "PASS" for r in records) else 1


def _emit(records, fmt):
    if fmt == "json":
        print(json.dumps({"results": records}, indent=2, sort_keys=True))
    else:
        print(render_human(records), end="")


if __name__ == "__main__":
    sys.exit(main())
