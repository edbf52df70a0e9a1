"""Command-line driver.

Subcommands: compute (per-degree Bott sums with an append-only JSONL cache),
interpolate (exact Lagrange fit from cached degrees), fixed-points, validate.
Exit codes: 0 success, 2 degenerate weights, 3 invalid parameters,
4 insufficient cache for interpolation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .families import TAGS, FamilySpec, family_spec
from .localize import WeightVector, bott_sum, contribution, validate_weights
from .polyfit import lagrange

EXIT_DEGENERATE_WEIGHTS = 2
EXIT_BAD_PARAMS = 3
EXIT_INSUFFICIENT_CACHE = 4

FAMILY_NAMES = tuple(t.replace("_", "-") for t in TAGS)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _family_options(sp: argparse.ArgumentParser) -> None:
    sp.add_argument(
        "--family", required=True, help="one of: " + ", ".join(FAMILY_NAMES)
    )
    sp.add_argument("--k", type=int, help="subspace dimension (linear only)")
    sp.add_argument("--n", type=int, help="ambient dimension (linear only)")
    sp.add_argument("--m", type=int, help="curve degree (plane-curve only)")


def _resolve_spec(args: argparse.Namespace) -> FamilySpec:
    params = {
        key: value
        for key, value in (("k", args.k), ("n", args.n), ("m", args.m))
        if value is not None
    }
    try:
        return family_spec(args.family.replace("-", "_"), **params)
    except ValueError as exc:
        raise CliError(EXIT_BAD_PARAMS, str(exc)) from exc


def _resolve_weights(args: argparse.Namespace, spec: FamilySpec) -> WeightVector:
    if args.weights is None:
        return spec.default_weights
    try:
        entries = tuple(int(x) for x in args.weights.split(","))
    except ValueError as exc:
        raise CliError(EXIT_BAD_PARAMS, f"unparsable weights {args.weights!r}") from exc
    if len(entries) != spec.n + 1:
        raise CliError(
            EXIT_BAD_PARAMS,
            f"expected {spec.n + 1} weights for P^{spec.n}, got {len(entries)}",
        )
    return WeightVector(entries)


def _checked_weights(spec: FamilySpec, w: WeightVector) -> WeightVector:
    report = validate_weights(spec.points(), w)
    if not report.ok:
        lines = [f"degenerate weights {w}:"]
        lines.extend(f"  {p}" for p in report.problems)
        lines.append(f"suggested default: {spec.default_weights}")
        raise CliError(EXIT_DEGENERATE_WEIGHTS, "\n".join(lines))
    return w


def _parse_degrees(args: argparse.Namespace, spec: FamilySpec) -> list[int]:
    if (args.d is None) == (args.d_range is None):
        raise CliError(EXIT_BAD_PARAMS, "exactly one of --d or --d-range is required")
    if args.d is not None:
        degrees = [args.d]
    else:
        lo, sep, hi = args.d_range.partition("..")
        if sep != ".." or not lo.isdigit() or not hi.isdigit() or int(lo) > int(hi):
            raise CliError(
                EXIT_BAD_PARAMS, f"bad --d-range {args.d_range!r}, expected A..B"
            )
        degrees = list(range(int(lo), int(hi) + 1))
    if degrees[0] < spec.d_min:
        raise CliError(
            EXIT_BAD_PARAMS,
            f"d={degrees[0]} is below the flatness threshold d_min={spec.d_min}",
        )
    return degrees


def _params_dict(spec: FamilySpec) -> dict[str, int]:
    return dict(spec.params)


def _record(spec: FamilySpec, d: int, degree: int, w: WeightVector) -> dict:
    return {
        "family": spec.tag.replace("_", "-"),
        "params": _params_dict(spec),
        "d": d,
        "degree": str(degree),
        "weights": list(w),
    }


def _load_cache(path: str | None, spec: FamilySpec) -> dict[int, int]:
    known: dict[int, int] = {}
    if path is None or not Path(path).exists():
        return known
    family = spec.tag.replace("_", "-")
    params = _params_dict(spec)
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                print(f"warning: skipping malformed cache line: {line[:60]}",
                      file=sys.stderr)
                continue
            if rec.get("family") == family and rec.get("params") == params:
                known[int(rec["d"])] = int(rec["degree"])
    return known


def _append_cache(path: str | None, rec: dict) -> None:
    if path is None:
        return
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(rec, separators=(",", ":")) + "\n")


def _partial_sum(payload) -> Fraction:
    points, d, entries = payload
    return sum((contribution(p, d, entries) for p in points), Fraction(0))


def _compute_degrees(
    spec: FamilySpec, degrees: list[int], w: WeightVector, jobs: int
) -> dict[int, int]:
    points = spec.points()
    if jobs <= 1:
        return {d: bott_sum(points, d, w) for d in degrees}
    chunk = max(1, len(points) // (4 * jobs))
    parts = [points[i : i + chunk] for i in range(0, len(points), chunk)]
    entries = tuple(w)
    totals = {d: Fraction(0) for d in degrees}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        tasks = [(d, part) for d in degrees for part in parts]
        for (d, _), total in zip(
            tasks, pool.map(_partial_sum, ((p, d, entries) for d, p in tasks))
        ):
            totals[d] += total
    out = {}
    for d, total in totals.items():
        if total.denominator != 1 or total < 0:
            raise ValueError("weight or fixed-point data inconsistent")
        out[d] = int(total)
    return out


def _emit_records(records: list[dict], fmt: str) -> None:
    if fmt == "plain":
        for rec in records:
            print(f"d={rec['d']}: {rec['degree']}")
    elif fmt == "json":
        for rec in records:
            print(json.dumps(rec, separators=(",", ":")))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["family", "params", "d", "degree"])
        for rec in records:
            params = " ".join(f"{k}={v}" for k, v in rec["params"].items())
            writer.writerow([rec["family"], params, rec["d"], rec["degree"]])


def cmd_compute(args: argparse.Namespace) -> int:
    spec = _resolve_spec(args)
    degrees = _parse_degrees(args, spec)
    w = _checked_weights(spec, _resolve_weights(args, spec))
    known = _load_cache(args.cache, spec)
    fresh = [d for d in degrees if d not in known]
    computed = _compute_degrees(spec, fresh, w, args.jobs) if fresh else {}
    records = []
    for d in degrees:
        if d in computed:
            rec = _record(spec, d, computed[d], w)
            _append_cache(args.cache, rec)
        else:
            rec = _record(spec, d, known[d], w)
        records.append(rec)
    _emit_records(records, args.format)
    return 0


def cmd_interpolate(args: argparse.Namespace) -> int:
    spec = _resolve_spec(args)
    bound = (
        spec.degree_bound_safe
        if args.bound == "safe"
        else spec.degree_bound_conjectural
    )
    start = spec.d_min if args.d_min is None else args.d_min
    if start < spec.d_min:
        raise CliError(
            EXIT_BAD_PARAMS,
            f"--d-min {start} is below the flatness threshold d_min={spec.d_min}",
        )
    degrees = list(range(start, start + bound + 1))
    known = _load_cache(args.cache, spec)
    missing = [d for d in degrees if d not in known]
    if missing and not args.compute_missing:
        head = ", ".join(f"d={d}" for d in missing[:8])
        tail = ", ..." if len(missing) > 8 else ""
        raise CliError(
            EXIT_INSUFFICIENT_CACHE,
            f"insufficient cache: {len(missing)} of {len(degrees)} degrees"
            f" missing ({head}{tail}); rerun with --compute-missing or run"
            f" compute first",
        )
    if missing:
        w = _checked_weights(spec, _resolve_weights(args, spec))
        for d, degree in _compute_degrees(spec, missing, w, args.jobs).items():
            known[d] = degree
            _append_cache(args.cache, _record(spec, d, degree, w))
    poly = lagrange([(d, Fraction(known[d])) for d in degrees])
    if args.format == "json":
        q, numerators = poly.common_denominator()
        print(
            json.dumps(
                {
                    "family": spec.tag.replace("_", "-"),
                    "params": _params_dict(spec),
                    "coefficients": [str(c) for c in poly.coefficients],
                    "common_denominator": str(q),
                    "numerators": [str(x) for x in numerators],
                    "fitted_degree": poly.degree,
                    "safe_bound": spec.degree_bound_safe,
                    "conjectural_bound": spec.degree_bound_conjectural,
                    "nodes": len(degrees),
                },
                separators=(",", ":"),
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["exponent", "coefficient"])
        for k, c in enumerate(poly.coefficients):
            writer.writerow([k, str(c)])
    else:
        print(f"p(d) = {poly.format()}")
        print(f"     = {poly.format_common_denominator()}")
        print(f"fitted degree: {poly.degree}")
        print(f"safe bound: {spec.degree_bound_safe} (nodes used: {len(degrees)})")
        print(f"conjectural bound: {spec.degree_bound_conjectural}")
    return 0


def cmd_fixed_points(args: argparse.Namespace) -> int:
    spec = _resolve_spec(args)
    points = spec.points()
    print(len(points))
    if args.list:
        for p in points:
            print(f"{p.label}: ideal {p.ideal} tangent {p.tangent}")
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    spec = _resolve_spec(args)
    w = _resolve_weights(args, spec)
    report = validate_weights(spec.points(), w)
    print(report)
    if not report.ok:
        print(f"suggested default: {spec.default_weights}")
        return EXIT_DEGENERATE_WEIGHTS
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bott-enum",
        description="Exact degrees of hypersurface loci singular along a family"
        " member, by torus localization.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compute", help="evaluate degrees for one or more d")
    _family_options(sp)
    sp.add_argument("--d", type=int)
    sp.add_argument("--d-range", help="inclusive range A..B")
    sp.add_argument("--weights", help="comma-separated torus weights")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--cache", help="append-only JSONL result cache")
    sp.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("interpolate", help="fit the degree polynomial from cache")
    _family_options(sp)
    sp.add_argument("--bound", choices=("safe", "conjectural"), default="safe")
    sp.add_argument("--d-min", type=int, help="first interpolation node")
    sp.add_argument("--cache", required=True)
    sp.add_argument("--compute-missing", action="store_true")
    sp.add_argument("--weights", help="used only with --compute-missing")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    sp.set_defaults(func=cmd_interpolate)

    sp = sub.add_parser("fixed-points", help="count (or list) torus-fixed points")
    _family_options(sp)
    sp.add_argument("--list", action="store_true")
    sp.set_defaults(func=cmd_fixed_points)

    sp = sub.add_parser("validate", help="check a weight vector for degeneracy")
    _family_options(sp)
    sp.add_argument("--weights", required=True)
    sp.set_defaults(func=cmd_validate)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
