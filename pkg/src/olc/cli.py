"""``olc``: compute, enumerate, moments and verify, with JSON output.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
import time
from typing import Sequence

from . import combi
from .combi import BoxedGroundSet, CapExceeded, NotAvailable
from .families import FAMILY_PARAMS, FamilyInvalid, FamilySpec, make_family, polynomial
from .linearize import (
    MultiIndex,
    Report,
    fundamental_check,
    generalized_moment_product,
    linearization,
    mixed_linearization,
)
from .moments import moment, moment_combinatorial
from .scalar import GaussianRational, as_scalar, parse_scalar
from .suites import SUITES, run_suite

KIND_ALIASES = {
    "matchings": "matching",
    "matching": "matching",
    "partitions": "partition",
    "partition": "partition",
    "permutations": "permutation",
    "permutation": "permutation",
    "derangements": "permutation",
    "derangement": "permutation",
}


class UsageError(Exception):
    pass


# -- parsing helpers -------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None
    if not out or any(x < 0 for x in out):
        raise UsageError(f"expected nonnegative integers, got {text!r}")
    return out


def _scalar_list(text: str) -> list[GaussianRational]:
    return [parse_scalar(t) for t in text.split(",") if t.strip()]


def _params(pairs: Sequence[str] | None) -> dict[str, str]:
    out = {}
    for item in pairs or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _family(name: str | None, pairs) -> FamilySpec:
    if not name:
        raise UsageError("--family is required")
    if name not in FAMILY_PARAMS:
        raise UsageError(f"unknown family {name!r}; known: {', '.join(FAMILY_PARAMS)}")
    raw = _params(pairs)
    if name == "birth-death":
        return make_family(name, **raw)
    try:
        parsed = {k: parse_scalar(v) for k, v in raw.items()}
        return make_family(name, **parsed)
    except TypeError as exc:
        raise UsageError(str(exc)) from None


def _value_json(v):
    if isinstance(v, GaussianRational):
        return v.to_json()
    if isinstance(v, list):
        return [_value_json(x) for x in v]
    if isinstance(v, dict):
        return {k: _value_json(x) for k, x in v.items()}
    return v


def _verdict(r: Report) -> dict:
    out = {"check": r.check, "pass": r.passed}
    out["lhs"] = _value_json(r.lhs) if r.lhs is not None else None
    out["rhs"] = _value_json(r.rhs) if r.rhs is not None else None
    if r.detail:
        out["detail"] = r.detail
    return out


# -- commands ------------------------------------------------------------------------

def cmd_compute(a) -> tuple[object, list[Report], list[Report]]:
    f = _family(a.family, a.param)
    entries = _int_list(a.n)
    scal = _scalar_list(a.lambda_) if a.lambda_ else []
    if scal and len(scal) == len(entries) - 1:
        scal.append(as_scalar(1))
    idx = MultiIndex(tuple(entries), tuple(scal))
    verdicts: list[Report] = []
    if a.second_param or a.n2:
        if not (a.second_param and a.n2):
            raise UsageError("mixed values need both --second-param and --n2")
        raw = {**_params(a.param), **_params(a.second_param)}
        f2 = _family(a.family, [f"{k}={v}" for k, v in raw.items()])
        value = mixed_linearization(f, f2, a.x_power, idx, MultiIndex(tuple(_int_list(a.n2))))
    elif a.x_power or a.x_mode not in (None, "none"):
        value = generalized_moment_product(f, a.x_power, a.x_mode, idx)
    else:
        value = linearization(f, idx)
        if a.check:
            verdicts.append(fundamental_check(f, idx))
    return value, verdicts, []


def cmd_enumerate(a):
    kind = KIND_ALIASES.get(a.kind or "")
    if kind is None:
        raise UsageError(f"--kind must be one of {', '.join(sorted(KIND_ALIASES))}")
    sizes = tuple(_int_list(a.boxes))
    g = BoxedGroundSet(sizes)
    filt = a.filter
    if a.count or a.stats:
        hist = combi.histogram(kind, sizes, (), filt)
        if a.count and not a.stats:
            return hist.total, [], []
        names = [s.strip() for s in a.stats.split(",") if s.strip()]
        unknown = [s for s in names if s not in hist.names]
        if unknown:
            raise UsageError(f"unknown statistics {unknown}; available: {', '.join(hist.names)}")
        proj = hist.project(names)
        table = [{"stats": dict(zip(names, key)), "count": cnt} for key, cnt in sorted(proj.counts.items())]
        return {"total": hist.total, "histogram": table}, [], []
    objs = []
    for o in combi.enumerate(g, kind, filt):
        rec = combi.statistics(o, g).to_dict()
        rec.pop("depth", None)
        objs.append({"object": str(o), "stats": rec})
    return objs, [], []


def cmd_moments(a):
    f = _family(a.family, a.param)
    n_max = _int_list(a.n)[-1]
    values = [moment(f, k) for k in range(n_max + 1)]
    verdicts = []
    if a.check:
        for k in range(n_max + 1):
            try:
                rhs = moment_combinatorial(f, k)
            except NotAvailable as exc:
                raise UsageError(str(exc)) from None
            verdicts.append(Report(f"moment {k} {f.label()}", values[k] == rhs, values[k], rhs))
    table = {"moments": values}
    if a.polynomials:
        table["polynomials"] = [[c for c in polynomial(f, k).coeffs] for k in range(n_max + 1)]
    return table, verdicts, []


def cmd_verify(a):
    results = run_suite(a.suite, max_total=a.max_total, samples=a.samples)
    verdicts, notes, summary = [], [], {}
    for r in results:
        verdicts.extend(r.reports)
        notes.extend(r.notes)
        summary[r.name] = {"pass": r.passed, "groups": len(r.reports), "failed": len(r.failures)}
    return summary, verdicts, notes


COMMANDS = {"compute": cmd_compute, "enumerate": cmd_enumerate, "moments": cmd_moments, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="olc", description="Exact linearization coefficients of orthogonal polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", default=True, help="JSON output (default)")
        sp.add_argument("--quiet", action="store_true", help="print nothing; use the exit code")
        sp.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-identical output")

    c = sub.add_parser("compute", help="value of L(prod p_n(lambda x)) and its generalizations")
    c.add_argument("--family")
    c.add_argument("--param", action="append", metavar="KEY=VALUE")
    c.add_argument("--n", required=True, help="comma list n_1,...,n_m")
    c.add_argument("--lambda", dest="lambda_", help="comma list of scalings")
    c.add_argument("--x-power", type=int, default=0)
    c.add_argument("--x-mode", choices=["monomial", "falling", "none"])
    c.add_argument("--second-param", action="append", metavar="KEY=VALUE", help="parameters of the second family (mixed values)")
    c.add_argument("--n2", help="comma list for the second family")
    c.add_argument("--check", action="store_true", help="also compare with the combinatorial sum")
    common(c)

    e = sub.add_parser("enumerate", help="list or count objects on boxed ground sets")
    e.add_argument("--kind", required=True)
    e.add_argument("--boxes", required=True)
    e.add_argument("--filter", choices=["inhomogeneous", "all"], default="inhomogeneous")
    e.add_argument("--stats", help="comma list of statistics for a histogram")
    e.add_argument("--count", action="store_true")
    common(e)

    m = sub.add_parser("moments", help="moments mu_0..mu_n of a family")
    m.add_argument("--family")
    m.add_argument("--param", action="append", metavar="KEY=VALUE")
    m.add_argument("--n", required=True, help="largest order")
    m.add_argument("--check", action="store_true", help="compare with the combinatorial formula")
    m.add_argument("--polynomials", action="store_true", help="include coefficient lists of p_0..p_n")
    common(m)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", choices=("all",) + SUITES)
    v.add_argument("--max-total", type=int)
    v.add_argument("--samples", type=int)
    common(v)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        value, verdicts, notes = COMMANDS[a.command](a)
    except (UsageError, FamilyInvalid, CapExceeded, NotAvailable, ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"olc: error: {exc}", file=err)
        return 2
    elapsed = 0 if a.no_timing else int((time.perf_counter() - start) * 1000)
    inputs = {k: v for k, v in sorted(vars(a).items()) if k not in ("command", "json", "quiet", "no_timing") and v not in (None, False)}
    if "lambda_" in inputs:
        inputs["lambda"] = inputs.pop("lambda_")
    envelope = {
        "command": a.command,
        "inputs": inputs,
        "value": _value_json(value),
        "verdicts": [_verdict(r) for r in verdicts],
        "notes": [_verdict(r) for r in notes],
        "elapsed_ms": elapsed,
    }
    if not a.quiet:
        json.dump(envelope, out, indent=2)
        out.write("\n")
    return 0 if all(r.passed for r in verdicts) else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
