"""Command-line front end.

Subcommands: bound, min-c, trial, sweep, grunbaum, vcdim, report.

Every command resolves its full configuration (including the seed) before
doing any work and echoes it in the output header, so any emitted file can be
reproduced byte-for-byte by re-running the printed command line.  Exit codes:
0 success, 1 usage error, 2 runtime error, 3 theorem violation flagged by an
exact-mode audit.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from .epsnet.bounds import (
    epsilon_lower_bound,
    min_valid_C,
    net_size,
    thm_constant_check,
)
from .epsnet.shatter import vc_dimension_halfspaces
from .experiments.grunbaum import grunbaum_audit
from .experiments.records import csv_dumps, jsonl_dumps, read_jsonl
from .experiments.trials import estimate_success_probability, run_trial
from .geometry.bodies import ConvexBody, body_from_spec, body_to_spec
from .rng import derive_seed, stream
from .stats import wilson_interval
from .svgplot import line_plot

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2
EXIT_VIOLATION = 3

_BODY_ALIASES = {
    "cube": "cube",
    "simplex": "centered-simplex",
    "centered-simplex": "centered-simplex",
    "cross": "cross-polytope",
    "cross-polytope": "cross-polytope",
    "ball": "ball",
}


class UsageError(Exception):
    """Bad arguments or an inconsistent flag combination."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route that through the
    # usage-error code instead.
    def error(self, message):
        raise UsageError(message)


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _unit_open(text: str) -> float:
    x = float(text)
    if not 0.0 < x < 1.0:
        raise argparse.ArgumentTypeError(f"{x} not in (0, 1)")
    return x


def _unit_half_open(text: str) -> float:
    x = float(text)
    if not 0.0 <= x < 1.0:
        raise argparse.ArgumentTypeError(f"{x} not in [0, 1)")
    return x


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{n} is not >= 1")
    return n


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("HULLPROBE_SEED")
    if env is not None:
        try:
            return int(env, 0)
        except ValueError:
            raise UsageError(f"HULLPROBE_SEED={env!r} is not an integer") from None
    return 0


def _resolve_body(args, dim: int | None = None) -> ConvexBody:
    name = args.body
    if dim is None:
        dim = getattr(args, "d", None)
    if name in _BODY_ALIASES:
        if dim is None:
            raise UsageError(f"--body {name} needs an explicit -d")
        return body_from_spec({"kind": _BODY_ALIASES[name], "dim": dim})
    path = Path(name)
    if not path.exists():
        names = ", ".join(sorted(set(_BODY_ALIASES)))
        raise UsageError(f"--body must name one of {names} or a JSON spec file")
    body = body_from_spec(json.loads(path.read_text()))
    if dim is not None and dim != body.dim:
        raise UsageError(f"-d {dim} contradicts body file dimension {body.dim}")
    return body


def _resolve_t(args, d: int, theta: float) -> tuple[int, str]:
    """Return (t, description of how it was chosen)."""
    if args.t is not None and args.auto_t:
        raise UsageError("give either -t or --auto-t, not both")
    if args.t is not None:
        return args.t, "explicit"
    if args.auto_t:
        if args.delta is None:
            raise UsageError("--auto-t needs --delta")
        C = args.C if args.C is not None else min_valid_C(d, theta, args.delta)
        return net_size(d, theta, C), f"auto (delta={_fmt(args.delta)}, C={_fmt(C)})"
    raise UsageError("sample size required: give -t or --auto-t with --delta")


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
        print(f"wrote {out}")


# ---------------------------------------------------------------------------
# bound / min-c


def cmd_bound(args) -> int:
    d, theta, delta = args.d, args.theta, args.delta
    if args.C is not None:
        C, how = args.C, "given"
    else:
        C, how = min_valid_C(d, theta, delta), "auto-minimal"
    D = d + 1
    eps = epsilon_lower_bound(d, theta)
    t = net_size(d, theta, C)
    ok = thm_constant_check(d, theta, delta, C)
    print(f"d = {d}")
    print(f"theta = {_fmt(theta)}")
    print(f"delta = {_fmt(delta)}")
    print(f"C = {_fmt(C)} ({how})")
    print(f"D = {D}")
    print(f"epsilon = {_fmt(eps)}")
    print(f"t = {t}")
    print(f"condition C^2 (eps/e)^(C-2) <= (delta/4)^(1/D) / e^3: {str(ok).lower()}")
    if math.isclose(theta, 1.0 / d, rel_tol=1e-12):
        print(f"cross-check (theta = 1/d): t <= 500d: {str(t <= 500 * d).lower()}")
    return EXIT_OK


def cmd_min_c(args) -> int:
    C = min_valid_C(args.d, args.theta, args.delta)
    t = net_size(args.d, args.theta, C)
    print(f"min C = {_fmt(C)}")
    print(f"t at min C = {t}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# trial


def cmd_trial(args) -> int:
    seed = _resolve_seed(args)
    body = _resolve_body(args)
    theta = args.theta
    t, t_how = _resolve_t(args, body.dim, theta)
    outcome = run_trial(body, theta, t, stream(seed, 0))

    print(f"body = {json.dumps(body_to_spec(body), sort_keys=True)}")
    print(f"theta = {_fmt(theta)}")
    print(f"t = {t} ({t_how})")
    print(f"seed = {seed}")
    print(f"outcome: {'SUCCESS' if outcome.success else 'FAILURE'}")
    if not outcome.success:
        v = ", ".join(_fmt(x) for x in outcome.violated_vertex)
        cap = outcome.witness_cap
        n = ", ".join(_fmt(x) for x in cap.normal)
        print(f"violated vertex of theta*K: [{v}]")
        print(f"witness cap: <u, x> >= c with u = [{n}], c = {_fmt(cap.offset)}")
        print("every sampled point falls strictly below the cap")
    print(
        f"replay: hullprobe trial --body {args.body}"
        + (f" -d {body.dim}" if args.body in _BODY_ALIASES else "")
        + f" --theta {_fmt(theta)} -t {t} --seed {seed}"
    )

    if args.out is not None:
        record = {
            "command": "trial",
            "body": body_to_spec(body),
            "theta": theta,
            "t": t,
            "seed": seed,
            "success": outcome.success,
            "violated_vertex": (
                None
                if outcome.violated_vertex is None
                else [float(x) for x in outcome.violated_vertex]
            ),
            "witness_cap": (
                None
                if outcome.witness_cap is None
                else {
                    "normal": [float(x) for x in outcome.witness_cap.normal],
                    "offset": float(outcome.witness_cap.offset),
                }
            ),
        }
        Path(args.out).write_text(jsonl_dumps([record]), encoding="utf-8")
        print(f"wrote {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep


def cmd_sweep(args) -> int:
    seed = _resolve_seed(args)
    dims = args.d if args.d is not None else []
    thetas = args.theta if args.theta is not None else []
    if args.body not in _BODY_ALIASES:
        body_fixed = _resolve_body(args, dim=None) if not dims else None
        if dims:
            raise UsageError("-d lists only combine with --body aliases")
        dims = [body_fixed.dim]
    else:
        body_fixed = None
        if not dims:
            raise UsageError("sweep needs -d (one value or a comma list)")
    if not thetas:
        raise UsageError("sweep grid is empty: give --theta (comma list allowed)")

    cells = []
    for d in dims:
        body = body_fixed if body_fixed is not None else _resolve_body(args, dim=d)
        for theta in thetas:
            if not 0.0 < theta < 1.0:
                raise UsageError(f"theta {theta} not in (0, 1)")
            if args.t is not None:
                ts = args.t
            elif args.auto_t:
                if args.delta is None:
                    raise UsageError("--auto-t needs --delta")
                C = args.C if args.C is not None else min_valid_C(d, theta, args.delta)
                ts = [net_size(d, theta, C)]
            else:
                raise UsageError("sweep grid is empty: give -t values or --auto-t")
            for t in ts:
                cells.append((d, theta, t, body))
    if not cells:
        raise UsageError("sweep grid is empty")

    rows = []
    for index, (d, theta, t, body) in enumerate(cells):
        cell_seed = derive_seed(seed, index)
        est = estimate_success_probability(
            body, theta, t, args.trials, cell_seed, threads=args.threads
        )
        rows.append(
            {
                "d": d,
                "theta": theta,
                "t": t,
                "trials": est.trials,
                "seed": cell_seed,
                "successes": est.successes,
                "p_hat": est.p_hat,
                "wilson_low": est.wilson_low,
                "wilson_high": est.wilson_high,
            }
        )

    header = (
        f"hullprobe sweep: body={args.body} trials={args.trials} seed={seed} "
        f"d={','.join(str(d) for d in dims)} "
        f"theta={','.join(_fmt(x) for x in thetas)} "
        + (f"t={','.join(str(v) for v in args.t)}" if args.t is not None else
           f"auto-t delta={_fmt(args.delta)}" + (f" C={_fmt(args.C)}" if args.C is not None else ""))
    )
    fields = list(rows[0].keys())
    if args.format == "json":
        text = jsonl_dumps([{"config": header}] + rows)
    else:
        text = csv_dumps(fields, rows, header_comment=header)
    _write_or_print(text, args.out)

    if args.svg is not None:
        t_values = sorted({r["t"] for r in rows})
        if len(t_values) > 1:
            key, xlabel = "t", "sample size t"
        else:
            key, xlabel = "theta", "theta"
        series = {}
        for r in rows:
            label = f"d={r['d']}" + (f" theta={_fmt(r['theta'])}" if key == "t" else "")
            series.setdefault(label, ([], []))
            series[label][0].append(r[key])
            series[label][1].append(r["p_hat"])
        svg = line_plot(
            [(label, xs, ys) for label, (xs, ys) in series.items()],
            title=f"success probability ({args.body})",
            xlabel=xlabel,
            ylabel="p_hat",
        )
        Path(args.svg).write_text(svg, encoding="utf-8")
        print(f"wrote {args.svg}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# grunbaum


def cmd_grunbaum(args) -> int:
    seed = _resolve_seed(args)
    body = _resolve_body(args)
    audit = grunbaum_audit(
        body, args.theta, args.directions, args.mc, stream(seed, 0)
    )
    mode = "exact" if audit.exact else "mc"
    header = (
        f"hullprobe grunbaum: body={args.body} d={body.dim} theta={_fmt(args.theta)} "
        f"seed={seed} directions={args.directions} mode={mode}"
        + ("" if audit.exact else f" mc={args.mc}")
    )
    fields = ["index"] + [f"u{i}" for i in range(body.dim)] + [
        "fraction", "ci_low", "ci_high", "violation",
    ]
    rows = []
    for i, rec in enumerate(audit.records):
        row = {"index": i, "fraction": rec.fraction, "violation": rec.violation}
        for j, uj in enumerate(rec.direction):
            row[f"u{j}"] = float(uj)
        row["ci_low"] = "" if rec.estimate is None else rec.estimate.ci_low
        row["ci_high"] = "" if rec.estimate is None else rec.estimate.ci_high
        rows.append(row)

    if args.format == "json":
        text = jsonl_dumps(
            [{"config": header}]
            + [{k: (None if v == "" else v) for k, v in row.items()} for row in rows]
        )
    else:
        text = csv_dumps(fields, rows, header_comment=header)
    _write_or_print(text, args.out)

    print(f"floor (1-theta)^d / e = {_fmt(audit.floor)}")
    print(f"min observed fraction = {_fmt(audit.min_fraction)}")
    print(f"violations: {audit.violations} of {audit.n_directions} ({mode} mode)")
    if audit.exact and audit.violations:
        print("theorem violation in exact mode", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# vcdim / report


def cmd_vcdim(args) -> int:
    data = json.loads(Path(args.points).read_text())
    if isinstance(data, dict):
        data = data.get("points")
    pts = np.asarray(data, dtype=float)
    if pts.ndim != 2:
        raise ValueError("points file must hold a 2D array of coordinates")
    print(vc_dimension_halfspaces(pts))
    return EXIT_OK


def cmd_report(args) -> int:
    records = read_jsonl(args.file)
    if not records:
        raise ValueError(f"no records in {args.file}")

    headers = [r["config"] for r in records if "config" in r]
    estimates = [r for r in records if "p_hat" in r]
    trials = [r for r in records if "success" in r and "p_hat" not in r]

    rows = []
    for r in estimates:
        rows.append(
            {
                "kind": "estimate",
                "d": r.get("d", ""),
                "theta": r.get("theta", ""),
                "t": r.get("t", ""),
                "n": r.get("trials", ""),
                "successes": r.get("successes", ""),
                "p_hat": r.get("p_hat", ""),
                "wilson_low": r.get("wilson_low", ""),
                "wilson_high": r.get("wilson_high", ""),
            }
        )
    groups: dict[tuple, list[dict]] = {}
    for r in trials:
        body = r.get("body", {})
        key = (json.dumps(body, sort_keys=True), r.get("theta"), r.get("t"))
        groups.setdefault(key, []).append(r)
    for (body_json, theta, t), members in sorted(groups.items()):
        n = len(members)
        wins = sum(1 for m in members if m["success"])
        if n >= 2:
            low, high = wilson_interval(wins, n)
        else:
            low = high = ""
        rows.append(
            {
                "kind": "trials",
                "d": json.loads(body_json).get("dim", ""),
                "theta": theta,
                "t": t,
                "n": n,
                "successes": wins,
                "p_hat": wins / n,
                "wilson_low": low,
                "wilson_high": high,
            }
        )
    if not rows:
        raise ValueError("no trial or estimate records found")

    comment = "; ".join(headers) if headers else f"hullprobe report: {args.file}"
    fields = list(rows[0].keys())
    if args.format == "json":
        text = jsonl_dumps(rows)
    else:
        text = csv_dumps(fields, rows, header_comment=comment)
    _write_or_print(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_out_flags(p: _Parser) -> None:
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="table format (default csv)")


def build_parser() -> _Parser:
    parser = _Parser(prog="hullprobe", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("bound", help="sample-size bound t(d, theta, delta, C)")
    p.add_argument("-d", type=_positive_int, required=True, help="dimension")
    p.add_argument("--theta", type=_unit_open, required=True)
    p.add_argument("--delta", type=_unit_open, required=True)
    p.add_argument("-C", type=float, help="constant C (default: minimal valid)")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("min-c", help="smallest C satisfying the bound condition")
    p.add_argument("-d", type=_positive_int, required=True)
    p.add_argument("--theta", type=_unit_open, required=True)
    p.add_argument("--delta", type=_unit_open, required=True)
    p.set_defaults(func=cmd_min_c)

    p = sub.add_parser("trial", help="run one seeded containment trial")
    p.add_argument("--body", default="cube", help="cube|simplex|cross|ball or JSON file")
    p.add_argument("-d", type=_positive_int, help="dimension (for named bodies)")
    p.add_argument("--theta", type=_unit_open, required=True)
    p.add_argument("-t", type=_positive_int, help="number of sampled points")
    p.add_argument("--auto-t", action="store_true", help="derive t from the bound")
    p.add_argument("--delta", type=_unit_open, help="failure budget for --auto-t")
    p.add_argument("-C", type=float, help="constant C for --auto-t")
    p.add_argument("--seed", type=int, help="RNG seed (default: $HULLPROBE_SEED or 0)")
    p.add_argument("--out", metavar="PATH", help="append-ready JSONL record")
    p.set_defaults(func=cmd_trial)

    p = sub.add_parser("sweep", help="grid of success-probability estimates")
    p.add_argument("--body", default="cube", help="cube|simplex|cross|ball or JSON file")
    p.add_argument("-d", type=_int_list, help="dimension(s), comma list")
    p.add_argument("--theta", type=_float_list, help="theta value(s), comma list")
    p.add_argument("-t", type=_int_list, help="sample size(s), comma list")
    p.add_argument("--auto-t", action="store_true", help="derive t from the bound")
    p.add_argument("--delta", type=_unit_open, help="failure budget for --auto-t")
    p.add_argument("-C", type=float, help="constant C for --auto-t")
    p.add_argument("--trials", type=_positive_int, default=200, help="trials per cell")
    p.add_argument("--seed", type=int, help="RNG seed (default: $HULLPROBE_SEED or 0)")
    p.add_argument("--threads", type=_positive_int, default=None,
                   help="worker threads (default: available parallelism)")
    p.add_argument("--svg", metavar="PATH", help="also write an SVG curve plot")
    _add_out_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("grunbaum", help="audit the cap-volume floor (1-theta)^d / e")
    p.add_argument("--body", default="cube", help="cube|simplex|cross|ball or JSON file")
    p.add_argument("-d", type=_positive_int, help="dimension (for named bodies)")
    p.add_argument("--theta", type=_unit_half_open, default=0.0,
                   help="halfspaces support theta*K (0 = through the centroid)")
    p.add_argument("--directions", type=_positive_int, default=200,
                   help="number of random directions")
    p.add_argument("--mc", type=_positive_int, default=20000,
                   help="Monte Carlo points per cap (non-2D bodies)")
    p.add_argument("--seed", type=int, help="RNG seed (default: $HULLPROBE_SEED or 0)")
    _add_out_flags(p)
    p.set_defaults(func=cmd_grunbaum)

    p = sub.add_parser("vcdim", help="brute-force VC dimension of halfspaces on a point set")
    p.add_argument("--points", required=True, metavar="FILE",
                   help="JSON file: [[x, y, ...], ...]")
    p.set_defaults(func=cmd_vcdim)

    p = sub.add_parser("report", help="summarize a JSONL experiment file")
    p.add_argument("file", help="JSON-lines records from trial/sweep runs")
    _add_out_flags(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
