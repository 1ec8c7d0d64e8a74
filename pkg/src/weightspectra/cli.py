"""Command-line interface.

JSON goes to stdout. Exit codes: 0 success, 1 bad arguments or violated
preconditions, 2 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from math import comb

from . import bounds, constructions, nonlinear, search
from .code import DEFAULT_BUDGET, LinearCode, weight_spectrum
from .errors import DomainError, Infeasible, NoRoot, NotAPrimePower, PreconditionViolated, ResourceLimit

BUDGET_ENV = "WEIGHTSPECTRA_BUDGET"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CommandResult:
    command: str
    params: dict
    payload: object
    exit_code: int = 0
    fmt: str = "json"

    def render(self) -> str:
        if self.fmt == "csv" and isinstance(self.payload, str):
            return self.payload
        return json.dumps(self.payload, sort_keys=True) + "\n"


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def _linear_payload(code: LinearCode, budget: int) -> dict:
    spec = weight_spectrum(code, budget=budget)
    upper = bounds.projective_upper(code.dimension, code.q)
    return {
        "code": code.to_dict(),
        "n": code.length,
        "k": code.dimension,
        "q": code.q,
        "spectrum": list(spec.weights),
        "count": len(spec),
        "bound": upper,
        "meets_bound": len(spec) == upper,
    }


def _unrestricted_payload(code: nonlinear.UnrestrictedCode) -> dict:
    dists = sorted(nonlinear.distance_spectrum(code))
    top = comb(code.size, 2)
    return {
        "code": code.to_dict(),
        "n": code.length,
        "M": code.size,
        "distances": dists,
        "count": len(dists),
        "bound": top,
        "meets_bound": len(dists) == top,
    }


def _cmd_construct(args) -> dict:
    kind = args.kind
    if kind == "binary-full":
        return _linear_payload(constructions.binary_full_spectrum(args.k), args.budget)
    if kind == "two-dim":
        return _linear_payload(constructions.two_dim_full(args.q, args.a, args.b), args.budget)
    if kind == "doubling":
        if args.input:
            with open(args.input) as fh:
                base = LinearCode.from_dict(json.load(fh))
        elif args.q:
            base = constructions.two_dim_full(args.q)
        else:
            raise UsageError("doubling needs --input FILE or --q Q")
        return _linear_payload(constructions.doubling_step(base, args.t, budget=args.budget), args.budget)
    if kind == "iterated":
        out = _linear_payload(constructions.iterated_doubling(args.k, args.q), args.budget)
        out["formula_floor"] = bounds.doubling_lower_formula(args.k, args.q)
        return out
    if kind == "ambient":
        return _linear_payload(constructions.ambient_code(args.k, args.q), args.budget)
    if kind == "sidon":
        sc = nonlinear.sidon_chain(args.M, args.strategy)
        out = _unrestricted_payload(nonlinear.step_to_code(sc, args.q))
        out["weights"] = list(sc.weights)
        return out
    if kind == "singer":
        ds = nonlinear.singer_difference_set(args.s)
        out = _unrestricted_payload(nonlinear.singer_code(args.s, args.q))
        out["difference_set"] = ds.to_dict()
        out["perfect"] = nonlinear.is_perfect_difference_set(ds)
        return out
    raise UsageError(f"unknown construction {kind}")


def _cmd_bounds(args) -> dict:
    reports = bounds.bound_reports(args.k, args.q, args.n)
    out = {r.kind: r.value for r in reports}
    if args.k >= 2:
        out["lower_constructive"] = constructions.iterated_doubling_count(args.k, args.q)
    lo, hi = bounds.lambda_interval(args.q)
    out["growth_exponent_interval"] = [lo, hi]
    out["inputs"] = reports[0].inputs
    return out


def _cmd_curve(args):
    poly = bounds.domain_boundary(args.q, args.points)
    if args.format == "csv":
        return poly.to_csv()
    return {"q": poly.q, "t": poly.t, "segments": {k: [list(p) for p in v] for k, v in poly.segments.items()}}


def _rows_to_csv(rows: list[dict]) -> str:
    keys = sorted({k for r in rows for k in r})
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _cmd_search(args):
    if args.mode == "random":
        return search.random_linear_search(args.n, args.k, args.q, args.trials, args.seed, args.budget).to_dict()
    n = args.n if args.n else (search.TABLE2_LENGTH if args.scale == "full" else 10_000)
    rows = search.table_rows(args.preset, n, args.trials, args.seed, args.budget)
    return _rows_to_csv(rows) if args.format == "csv" else {"preset": args.preset, "rows": rows}


def _cmd_oracle(args) -> dict:
    b = args.budget
    if args.what == "L":
        best, witness = search.exhaustive_linear(args.n, args.k, args.q, b)
        return {"L": best, "witness": witness.to_dict()}
    if args.what == "N":
        best, witness = search.exhaustive_unrestricted(args.n, args.M, args.q, b)
        return {"N": best, "witness": witness.to_dict()}
    if args.what == "n0":
        target = args.target if args.target else bounds.projective_upper(args.k, args.q)
        return {"n0": search.smallest_n0_linear(args.k, args.q, target, b), "target": target}
    if args.what == "N0":
        return {"N0": search.smallest_N0(args.M, args.q, b), "upper": nonlinear.n0_upper(args.M, args.q)}
    if args.what == "audit":
        return search.monotonicity_audit(b).to_dict()
    raise UsageError(f"unknown oracle {args.what}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weightspectra", description=__doc__.splitlines()[0])
    p.add_argument("--budget", type=int, default=None, help=f"enumeration budget (env {BUDGET_ENV})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build an explicit code")
    c.add_argument("kind", choices=["binary-full", "two-dim", "doubling", "iterated", "ambient", "sidon", "singer"])
    c.add_argument("--k", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--a", type=int)
    c.add_argument("--b", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--M", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--input")
    c.add_argument("--strategy", choices=["greedy", "doubling"], default="greedy")

    b = sub.add_parser("bounds", help="closed-form bounds for (k, q)")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--n", type=int)

    cv = sub.add_parser("curve", help="boundary polyline of the rate/exponent region")
    cv.add_argument("--q", type=int, required=True)
    cv.add_argument("--points", type=int, default=100)
    cv.add_argument("--format", choices=["csv", "json"], default="csv")

    s = sub.add_parser("search", help="random code experiments")
    s.add_argument("mode", choices=["random", "table"])
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--q", type=int)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--preset", choices=["table1", "table2"], default="table2")
    s.add_argument("--scale", choices=["desk", "full"], default="desk")
    s.add_argument("--format", choices=["json", "csv"], default="json")

    o = sub.add_parser("oracle", help="exact small-scale oracles")
    o.add_argument("what", choices=["L", "N", "n0", "N0", "audit"])
    o.add_argument("--n", type=int)
    o.add_argument("--k", type=int)
    o.add_argument("--q", type=int, default=2)
    o.add_argument("--M", type=int)
    o.add_argument("--target", type=int)
    return p


_REQUIRED = {
    ("construct", "binary-full"): ["k"],
    ("construct", "two-dim"): ["q"],
    ("construct", "iterated"): ["k", "q"],
    ("construct", "ambient"): ["k", "q"],
    ("construct", "sidon"): ["M"],
    ("construct", "singer"): ["s"],
    ("search", "random"): ["n", "k", "q"],
    ("oracle", "L"): ["n", "k", "q"],
    ("oracle", "N"): ["n", "M", "q"],
    ("oracle", "n0"): ["k", "q"],
    ("oracle", "N0"): ["M", "q"],
}


def run(argv: list[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult("usage", {}, {"error": str(exc)}, 1)
    if args.budget is None:
        args.budget = _default_budget()
    sel = getattr(args, "kind", None) or getattr(args, "mode", None) or getattr(args, "what", None)
    params = {k: v for k, v in vars(args).items() if v is not None}
    if args.command == "construct" and args.q is None and args.kind in ("sidon", "singer"):
        args.q = 2
    handler = {
        "construct": _cmd_construct,
        "bounds": _cmd_bounds,
        "curve": _cmd_curve,
        "search": _cmd_search,
        "oracle": _cmd_oracle,
    }[args.command]
    fmt = getattr(args, "format", "json")
    try:
        missing = [m for m in _REQUIRED.get((args.command, sel), []) if getattr(args, m) is None]
        if missing:
            raise UsageError(f"missing required option(s): {', '.join('--' + m for m in missing)}")
        payload = handler(args)
    except ResourceLimit as exc:
        return CommandResult(args.command, params, {"error": str(exc)}, 2)
    except (UsageError, PreconditionViolated, NotAPrimePower, DomainError, Infeasible, NoRoot, ValueError, OSError) as exc:
        return CommandResult(args.command, params, {"error": str(exc)}, 1)
    if not isinstance(payload, str):
        fmt = "json"
    return CommandResult(args.command, params, payload, 0, fmt)


def main(argv: list[str] | None = None) -> int:
    result = run(argv)
    stream = sys.stdout if result.exit_code == 0 else sys.stderr
    stream.write(result.render())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
