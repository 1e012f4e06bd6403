"""Command-line front end.

Subcommands: field | grs | cyclic | ag | quantum | verify-all.  Output is
deterministic JSON (sorted keys, no timestamps; wall-clock timings only
with --timings) or markdown/csv for tables.  Exit status: 2 on argument
errors, 1 when any verification verdict is FAIL, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from . import ag, cyclic, grs, quantum
from .gf import make_field, prime_factors, quadratic_field
from .linalg_codes import DEFAULT_BUDGET
from .report import ConstructionReport, code_to_json


def _dump(payload, fmt: str = "json") -> str:
    if fmt == "markdown":
        return _to_markdown(payload)
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _to_markdown(payload) -> str:
    if isinstance(payload, list) and payload and isinstance(payload[0], dict):
        keys = sorted({k for row in payload for k in row})
        lines = ["| " + " | ".join(keys) + " |",
                 "|" + "---|" * len(keys)]
        for row in payload:
            lines.append("| " + " | ".join(str(row.get(k, "")) for k in keys) + " |")
        return "\n".join(lines)
    return "```\n" + json.dumps(payload, sort_keys=True, indent=2) + "\n```"


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("HERMHULL_THREADS", "1")))
    except ValueError:
        return 1


def _parse_modulus(text: Optional[str]):
    if text is None:
        return None
    return [int(c) for c in text.split(",")]


def _field_for(q: int, modulus_text: Optional[str]):
    mod = _parse_modulus(modulus_text)
    if mod is None:
        return quadratic_field(q)
    p = prime_factors(q)[0]
    e = 0
    while p ** e < q:
        e += 1
    return make_field(p, 2 * e, mod)


def _emit_report(rep: ConstructionReport, args) -> int:
    print(rep.to_json(include_timings=getattr(args, "timings", False)))
    return 1 if rep.verdict == "FAIL" else 0


# ----------------------------------------------------------------------
# subcommand handlers
# ----------------------------------------------------------------------

def cmd_field(args) -> int:
    F = make_field(args.p, args.m, _parse_modulus(args.modulus))
    payload = F.describe() | {"order": F.order}
    if F.subfield is not None:
        payload["subfield"] = F.subfield.describe()
        payload["q"] = F.q
    print(_dump(payload, args.format))
    return 0


def cmd_grs_construct(args) -> int:
    params = {}
    for name in ("k", "z", "f", "m"):
        v = getattr(args, name)
        if v is not None:
            params[name] = v
    field = (_field_for(args.q, args.field_modulus)
             if args.field_modulus else None)
    code, claim = grs.construct_family(args.family, args.q, field=field,
                                       **params)
    rep = grs.verify_claim(code, claim, budget=args.budget,
                           distance_budget=args.distance_budget)
    if args.include_code:
        rep.code = rep.code | {"detail": code_to_json(code)}
    return _emit_report(rep, args)


def cmd_grs_sweep(args) -> int:
    families = args.families.split(",") if args.families else grs.FAMILIES
    jobs = [(family, params)
            for family in families
            for params in grs.family_parameter_grid(family, args.q)]

    def run(job):
        family, params = job
        code, claim = grs.construct_family(family, args.q, **params)
        return claim, grs.verify_claim(code, claim, budget=args.budget,
                                       distance_budget=args.distance_budget)

    nthreads = _threads()
    if nthreads > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(j) for j in jobs]
    bodies = [r.to_canonical_dict() for _, r in results]
    summary = {
        "q": args.q,
        "total": len(bodies),
        "pass": sum(b["verdict"] == "PASS" for b in bodies),
        "partial": sum(b["verdict"] == "PARTIAL" for b in bodies),
        "fail": sum(b["verdict"] == "FAIL" for b in bodies),
    }
    print(_dump({"summary": summary, "reports": bodies}, args.format))
    return 1 if summary["fail"] else 0


def cmd_cyclic_dkl(args) -> int:
    D = cyclic.defining_set_dkl(args.q, args.k, args.l)
    n = args.q * args.q - 1
    payload = {
        "q": args.q, "k": args.k, "l": args.l,
        "D": list(D),
        "dim": n - len(D),
        "extended_dim": args.q ** 2 - 2 * args.l * args.k + args.l ** 2,
        "ht_bound": cyclic.ht_bound(n, D),
    }
    print(_dump(payload, args.format))
    return 0


def cmd_ag_build(args) -> int:
    F = _field_for(args.q, args.field_modulus)
    fam_kwargs = {}
    if args.family == "COR1":
        fam_kwargs["s"] = args.s
    elif args.family == "COR2":
        fam_kwargs["t"] = args.t
    else:
        fam_kwargs["n0"] = args.n0
        fam_kwargs["t"] = args.t
    U = ag.evaluation_set(args.family, args.q, **fam_kwargs)
    p = F.alpha_pow(args.p_log) if args.p_log is not None else None
    res = ag.two_point_code(F, U, args.k, p=p,
                            distance_budget=args.distance_budget)
    rep = res.report
    rep.construction["family"] = args.family
    rep.construction["parameters"] |= fam_kwargs
    rep.construction["evaluation_set"] = sorted(
        F.log_of(u) for u in U if u) + (["zero"] if 0 in U else [])
    if args.include_code:
        rep.code = rep.code | {"detail": code_to_json(res.code)}
    return _emit_report(rep, args)


def cmd_ag_grow(args) -> int:
    F = _field_for(args.q, args.field_modulus)
    start = [F.from_subfield(s) for s in range(F.q)]
    res = ag.extend_evaluation_set(F, start, max_steps=args.steps)
    payload = {
        "q": args.q,
        "status": res.status,
        "start_size": len(res.start),
        "steps": [{
            "pair_logs": [F.log_of(b) for b in step.pair],
            "conjugate": step.conjugate,
            "size": len(step.points),
            "set_logs": sorted(F.log_of(u) for u in step.points if u)
                        + (["zero"] if 0 in step.points else []),
        } for step in res.steps],
    }
    print(_dump(payload, args.format))
    return 0


def cmd_quantum_params(args) -> int:
    if args.from_report:
        with open(args.from_report, "r", encoding="utf-8") as fh:
            body = json.load(fh)["report"]
        q = prime_factors(body["field"]["p"])[0] ** (body["field"]["m"] // 2)
        n = body["code"]["n"]
        k = body["code"]["k"]
        hull = body["hull"].get("dim_gram", body["hull"].get("dim_measured"))
    else:
        if None in (args.n, args.k, args.hull_dim, args.q):
            raise SystemExit(2)
        q, n, k, hull = args.q, args.n, args.k, args.hull_dim
    ing = quantum.mds_ingredient(q, n, k, hull)
    base = quantum.eaqecc_from_code(ing)
    chain = [base.to_json() | {"mds": quantum.singleton_check(base)["mds"]}]
    if args.propagate:
        p = quantum.propagate(base, args.propagate, hull)
        chain.append(p.to_json() | {"mds": quantum.singleton_check(p)["mds"]})
    print(_dump({"ingredient": {"q": q, "n": n, "k": k, "hull_dim": hull},
                 "params": chain}, args.format))
    return 0


def cmd_quantum_tables(args) -> int:
    tables = quantum.emit_tables(args.q)
    if args.format == "csv":
        lines = ["table,n,kappa,delta,c,q,extra"]
        for name in ("table1", "table2", "table3_new"):
            for row in tables[name]:
                if name == "table1":
                    qe = row["eaqecc_2"]
                    lines.append(f"{name},{row['n']},{row['kappa']},"
                                 f"{qe['delta']},{qe['c']},{row['q']},"
                                 f"row{row['row']}")
                else:
                    lines.append(f"{name},{row['n']},{row['kappa']},"
                                 f"{row['delta']},{row['c']},{row['q']},"
                                 f"{row.get('family', '')}")
        print("\n".join(lines))
        return 0
    if args.format == "markdown":
        print(_to_markdown(tables["table3_new"]))
        return 0
    print(_dump(tables))
    return 0


def cmd_verify_all(args) -> int:
    bodies = []
    for family in grs.FAMILIES:
        for params in grs.family_parameter_grid(family, args.q):
            code, claim = grs.construct_family(family, args.q, **params)
            rep = grs.verify_claim(code, claim, budget=args.budget,
                                   distance_budget=args.distance_budget)
            bodies.append(rep.to_canonical_dict())
    F = quadratic_field(args.q)
    for family in ("COR1", "COR2", "COR3"):
        for params in ag.family_parameter_grid(family, args.q):
            kwargs = {k: v for k, v in params.items() if k in ("s", "t", "n0")}
            U = ag.evaluation_set(family, args.q, **kwargs)
            res = ag.two_point_code(F, U, params["k"],
                                    distance_budget=args.distance_budget)
            res.report.construction["family"] = family
            res.report.construction["parameters"] |= kwargs
            bodies.append(res.report.to_canonical_dict())
    summary = {
        "q": args.q,
        "total": len(bodies),
        "pass": sum(b["verdict"] == "PASS" for b in bodies),
        "partial": sum(b["verdict"] == "PARTIAL" for b in bodies),
        "fail": sum(b["verdict"] == "FAIL" for b in bodies),
    }
    print(_dump({"summary": summary, "reports": bodies}, args.format))
    return 1 if summary["fail"] else 0


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hermhull",
        description="Codes over GF(q^2) whose Hermitian hulls are (or "
                    "contain) MDS codes: constructions, exact verification, "
                    "and EAQECC parameters.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("json", "markdown")):
        p.add_argument("--format", choices=choices, default="json")

    def budgets(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="cap on hull-intersection work (codeword count)")
        p.add_argument("--distance-budget", type=int, default=10 ** 6,
                       help="cap on distance enumeration (codeword count)")
        p.add_argument("--timings", action="store_true")

    p = sub.add_parser("field", help="build and describe a field")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--modulus", help="comma-separated coefficients, low first")
    fmt(p)
    p.set_defaults(func=cmd_field)

    pg = sub.add_parser("grs", help="GRS hull constructions")
    gsub = pg.add_subparsers(dest="grs_command", required=True)
    p = gsub.add_parser("construct")
    p.add_argument("--family", choices=grs.FAMILIES, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--z", type=int)
    p.add_argument("--f", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--field-modulus")
    p.add_argument("--include-code", action="store_true")
    budgets(p)
    fmt(p)
    p.set_defaults(func=cmd_grs_construct)
    p = gsub.add_parser("sweep")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--families", help="comma-separated subset")
    budgets(p)
    fmt(p)
    p.set_defaults(func=cmd_grs_sweep)

    pc = sub.add_parser("cyclic", help="cyclic-code tooling")
    csub = pc.add_subparsers(dest="cyclic_command", required=True)
    p = csub.add_parser("dkl")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_cyclic_dkl)

    pa = sub.add_parser("ag", help="two-point evaluation codes")
    asub = pa.add_subparsers(dest="ag_command", required=True)
    p = asub.add_parser("build")
    p.add_argument("--family", choices=("COR1", "COR2", "COR3"), required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n0", type=int)
    p.add_argument("--p-log", type=int, help="extra place as a log exponent")
    p.add_argument("--field-modulus")
    p.add_argument("--include-code", action="store_true")
    budgets(p)
    fmt(p)
    p.set_defaults(func=cmd_ag_build)
    p = asub.add_parser("grow")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--field-modulus")
    fmt(p)
    p.set_defaults(func=cmd_ag_grow)

    pq = sub.add_parser("quantum", help="quantum parameter arithmetic")
    qsub = pq.add_subparsers(dest="quantum_command", required=True)
    p = qsub.add_parser("params")
    p.add_argument("--from", dest="from_report", help="report JSON path")
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--hull-dim", type=int)
    p.add_argument("--propagate", type=int, default=0)
    fmt(p)
    p.set_defaults(func=cmd_quantum_params)
    p = qsub.add_parser("tables")
    p.add_argument("--q", type=int, required=True)
    fmt(p, choices=("json", "csv", "markdown"))
    p.set_defaults(func=cmd_quantum_tables)

    p = sub.add_parser("verify-all", help="verify every in-range construction")
    p.add_argument("--q", type=int, required=True)
    budgets(p)
    fmt(p)
    p.set_defaults(func=cmd_verify_all)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
