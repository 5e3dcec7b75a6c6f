"""Command-line front end.

Exit codes: 0 ok, 1 invalid input, 2 mathematical violation detected,
3 computation budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from cyclolog import bounds, report, sweeps
from cyclolog.embedding import ramachandra_basis, ramachandra_logs
from cyclolog.errors import BudgetExceeded, CyclologError, InvalidModulus
from cyclolog.lattice.basis import gram
from cyclolog.lattice.enumeration import successive_minima
from cyclolog.lattice.lll import DEFAULT_DELTA, lll_reduce
from cyclolog.lattice.voronoi import (
    VORONOI_MAX_RANK,
    covering_radius_estimate,
    covering_radius_exact,
    lemma6_bound,
)
from cyclolog.numtheory import embedding_indices, make_modulus
from cyclolog.table1 import TABLE1_COLUMNS, table1

log = logging.getLogger("cyclolog")

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION, EXIT_BUDGET = 0, 1, 2, 3
LEMMA6_TOL = 1e-6
LATTICE_PARTS = ("gram", "lll", "minima", "mu")

SWEEP_COLUMNS = ["range", "checked", "violation_count", "input", "quantity", "relation", "observed"]


def _sweep_output(outcome: sweeps.SweepOutcome, args) -> str:
    if args.format == "json":
        return report.to_json(outcome.as_dict(include_elapsed=args.timing), args.precision)
    header = SWEEP_COLUMNS + (["elapsed"] if args.timing else [])
    head = [outcome.range, outcome.checked, len(outcome.violations)]
    tail = [outcome.elapsed] if args.timing else []
    if not outcome.violations:
        rows = [head + ["", "", "", ""] + tail]
    else:
        rows = [head + [report.pack_mapping(v.input), v.quantity, v.relation,
                        report.pack_mapping(v.observed, args.precision)] + tail
                for v in outcome.violations]
    return report.to_csv(header, rows, args.precision)


def cmd_bounds(args) -> tuple[str, int]:
    rep = bounds.bound_report(make_modulus(args.n)).as_dict()
    if args.format == "json":
        return report.to_json(rep, args.precision), EXIT_OK
    return report.to_csv(list(rep), [list(rep.values())], args.precision), EXIT_OK


def cmd_units(args) -> tuple[str, int]:
    m = make_modulus(args.n)
    limit = bounds.lemma4_bound(m.n, m.s)
    ks = embedding_indices(m)
    rows = []
    for u in ramachandra_logs(m):
        rows.append({"a": u.label, "components": list(u.vector.as_array()), "norm": u.norm,
                     "trace_residual": u.vector.trace, "lemma4_bound": limit, "margin": limit - u.norm})
    if args.format == "json":
        return report.to_json({"n": m.n, "embedding_indices": ks, "units": rows}, args.precision), EXIT_OK
    header = ["a", "norm", "trace_residual", "lemma4_bound", "margin"] + [f"log_k{k}" for k in ks]
    table = [[r["a"], r["norm"], r["trace_residual"], r["lemma4_bound"], r["margin"], *r["components"]]
             for r in rows]
    return report.to_csv(header, table, args.precision), EXIT_OK


def _parse_parts(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    unknown = [p for p in parts if p not in LATTICE_PARTS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown lattice quantities: {', '.join(unknown)}")
    return parts


def cmd_lattice(args) -> tuple[str, int]:
    m = make_modulus(args.n)
    basis = ramachandra_basis(m)
    parts = args.compute
    out: dict = {"n": m.n, "s": m.s, "rank": m.rank, "dimension": m.dimension}
    if "gram" in parts:
        out["gram"] = gram(basis)
    if "lll" in parts:
        reduced = lll_reduce(basis, DEFAULT_DELTA)
        out["lll"] = {"delta": DEFAULT_DELTA, "norms": reduced.norms(), "vectors": reduced.vectors}
    minima = None
    if "minima" in parts:
        minima = successive_minima(basis)
        out["minima"] = {"values": list(minima.values), "witness_coeffs": [list(c) for c in minima.coeffs]}
    if "mu" in parts:
        if m.rank <= VORONOI_MAX_RANK:
            res = covering_radius_exact(basis)
            note = ""
        else:
            res = covering_radius_estimate(basis, samples=args.samples, seed=args.seed)
            note = f"rank {m.rank} > {VORONOI_MAX_RANK}: randomized lower bound"
        mu = {"value": res.value, "method": res.method, "deep_hole": res.deep_hole,
              "certificate_distance": res.certificate_distance, "note": note}
        if minima is not None:
            bound6 = lemma6_bound(m.rank, minima.values[-1])
            mu["lemma6_bound"] = bound6
            mu["lemma6_holds"] = res.value <= bound6 + LEMMA6_TOL
        rep = bounds.bound_report(m)
        mu["comparisons"] = {
            name: {"bound": getattr(rep, name), "mu_below": res.value < getattr(rep, name)}
            for name in ("bound_new", "bound_old_sqrt3", "bound_old_sqrt6", "bound_corollary")
        }
        out["mu"] = mu
    if args.format == "json":
        return report.to_json(out, args.precision), EXIT_OK
    return report.to_csv(["quantity", "index", "value"], _long_rows(out), args.precision), EXIT_OK


def _long_rows(out: dict):
    rows = [[key, "", out[key]] for key in ("n", "s", "rank", "dimension")]
    if "gram" in out:
        g = out["gram"]
        rows += [["gram", f"{i + 1}.{j + 1}", g[i, j]] for i in range(g.shape[0]) for j in range(g.shape[1])]
    if "lll" in out:
        rows += [["lll_norm", i + 1, v] for i, v in enumerate(out["lll"]["norms"])]
    if "minima" in out:
        rows += [["lambda", i + 1, v] for i, v in enumerate(out["minima"]["values"])]
    if "mu" in out:
        mu = out["mu"]
        rows += [["mu", "", mu["value"]], ["mu_method", "", mu["method"]],
                 ["mu_certificate_distance", "", mu["certificate_distance"]]]
        rows += [["deep_hole", i + 1, v] for i, v in enumerate(mu["deep_hole"])]
        if mu["note"]:
            rows.append(["note", "", mu["note"]])
        if "lemma6_bound" in mu:
            rows += [["lemma6_bound", "", mu["lemma6_bound"]], ["lemma6_holds", "", mu["lemma6_holds"]]]
        for name, cmp in mu["comparisons"].items():
            rows += [[name, "", cmp["bound"]], [f"mu_below_{name}", "", cmp["mu_below"]]]
    return rows


def cmd_lemma2(args) -> tuple[str, int]:
    outcome, records = sweeps.lemma2_sweep(args.m_max, args.extra, jobs=args.jobs,
                                           keep_records=args.emit is not None)
    if args.emit is not None:
        rows = [[r.m, repr(r.sum), repr(r.lower), repr(r.upper), repr(r.sum / r.m)] for r in records]
        Path(args.emit).write_text(report.to_csv(["m", "S", "lower", "upper", "S_over_m"], rows),
                                   newline="")
    return _sweep_output(outcome, args), EXIT_OK if outcome.ok else EXIT_VIOLATION


def cmd_phibound(args) -> tuple[str, int]:
    outcome = sweeps.phibound_sweep(args.n_max)
    return _sweep_output(outcome, args), EXIT_OK if outcome.ok else EXIT_VIOLATION


def cmd_dominance(args) -> tuple[str, int]:
    outcome = sweeps.lemma3_sweep(args.lemma3_max, jobs=args.jobs)
    other = sweeps.lemma4_sweep(args.lemma4_max, jobs=args.jobs)
    outcome.name = "dominance"
    outcome.range = f"lemma3: {outcome.range}; lemma4: {other.range}"
    outcome.checked += other.checked
    outcome.violations.extend(other.violations)
    outcome.elapsed += other.elapsed
    return _sweep_output(outcome, args), EXIT_OK if outcome.ok else EXIT_VIOLATION


def cmd_table1(args) -> tuple[str, int]:
    rows = table1()
    failed = any(r.hard_failures for r in rows)
    for r in rows:
        for name in r.hard_failures:
            log.warning("n=%d: %s misses the published value", r.n, name)
        if r.mu_status == "informational":
            log.warning("n=%d: mu compares mu(Log C) to the full unit lattice; informational only", r.n)
    dicts = [r.as_dict() for r in rows]
    if args.format == "json":
        text = report.to_json({"rows": dicts, "ok": not failed}, args.precision)
    else:
        text = report.to_csv(TABLE1_COLUMNS, [list(d.values()) for d in dicts], args.precision)
    return text, EXIT_VIOLATION if failed else EXIT_OK


def _precision(text: str) -> int:
    value = int(text)
    if not 1 <= value <= report.MAX_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must be in [1, {report.MAX_PRECISION}]")
    return value


def _global_flags(parser: argparse.ArgumentParser, suppress: bool):
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=("csv", "json"), default=default("csv"))
    parser.add_argument("--precision", type=_precision, default=default(report.DEFAULT_PRECISION),
                        help="significant digits (1-17)")
    parser.add_argument("--jobs", type=int, default=default(1), help="worker processes for sweeps")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for the randomized estimator")
    parser.add_argument("--out", default=default(None), help="write output here instead of stdout")
    parser.add_argument("--timing", action="store_true", default=default(False),
                        help="include elapsed seconds in sweep output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclolog",
                                     description="Covering-radius bounds for cyclotomic log-unit lattices.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="all bounds for one n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("units", parents=[common], help="log vectors of the Ramachandra units")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_units)

    p = sub.add_parser("lattice", parents=[common], help="measure the cyclotomic-unit lattice")
    p.add_argument("n", type=int)
    p.add_argument("--compute", type=_parse_parts, default=list(LATTICE_PARTS),
                   help="comma list from gram,lll,minima,mu")
    p.add_argument("--samples", type=int, default=10_000, help="estimator samples when rank > 5")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("lemma2", parents=[common], help="sweep the sine-log-square sum envelope")
    p.add_argument("--m-max", type=int, default=10_000)
    p.add_argument("--extra", type=int, default=0, help="log-spaced m beyond m-max, up to 10^6")
    p.add_argument("--emit", default=None, help="CSV path for per-m records")
    p.set_defaults(func=cmd_lemma2)

    p = sub.add_parser("phibound", parents=[common], help="sweep the totient upper bound")
    p.add_argument("--n-max", type=int, default=100_000)
    p.set_defaults(func=cmd_phibound)

    p = sub.add_parser("dominance", parents=[common], help="sweep the unit-norm bounds")
    p.add_argument("--lemma3-max", type=int, default=200)
    p.add_argument("--lemma4-max", type=int, default=300)
    p.set_defaults(func=cmd_dominance)

    p = sub.add_parser("table1", parents=[common], help="recompute the published comparison table")
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        text, code = args.func(args)
    except InvalidModulus as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CyclologError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out:
        Path(args.out).write_text(text, newline="")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
