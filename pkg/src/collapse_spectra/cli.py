"""Command-line frontend.

    collapse-spectra degeneracies MODEL [--t-min A --t-max B | --count Q] [--json PATH]
    collapse-spectra scan MODEL --t-min A --t-max B --steps N [--csv PATH] [--linear]
    collapse-spectra certify MODEL
    collapse-spectra smax --family {complex,quaternionic-diagonal,octonionic} [--n N]
    collapse-spectra report MODEL --t-min A --t-max B [--out-dir DIR]

Range bounds are exact rationals ("1/10" or "0.35"; decimal strings parse
exactly).  stdout carries data, stderr diagnostics.  Exit codes: 0 success
(certificate passed, for certify), 2 model-schema violation, 3 hypothesis
violation, 4 certificate failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from .bifurcation import (
    UNCERTIFIED,
    DegeneracyRecord,
    DegeneracyScan,
    certify_product_records,
    degeneracy_values,
    morse_index_product_at_usq,
    multiplicity_report,
    pinching_certificate,
    smallest_degeneracies,
    threshold_at_usq,
    trivial_count_at_usq,
)
from .errors import (
    CollapseSpectraError,
    HypothesisViolationError,
    InconsistentModelError,
    ModelSchemaError,
    NotAProductError,
)
from .exactnum import format_exact, format_value
from .modelfile import LoadedModel, load_model
from .submersion import (
    SubmersionModel,
    hopf_complex_model,
    hopf_octonionic_model,
    hopf_quaternionic_model,
    scal_at_usq,
    scal_positivity_root,
)

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_HYPOTHESIS = 3
EXIT_CERT_FAIL = 4


def _parse_bound(text: str, flag: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{flag} must be an exact rational, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{flag} must be positive")
    return value


def _thread_count() -> int:
    raw = os.environ.get("COLLAPSE_SPECTRA_THREADS", "")
    if raw.strip():
        try:
            n = int(raw)
        except ValueError:
            n = 1
        return max(1, n)
    return min(8, os.cpu_count() or 1)


def log_grid(t_min: Fraction, t_max: Fraction, steps: int) -> list[Fraction]:
    """Geometrically spaced rational grid (endpoints exact).

    The accumulation of crossings sits at t = 0, so the default grid is
    logarithmic; interior nodes are float-placed and then snapped to
    rationals, which keeps every evaluated row exact.
    """
    import math

    if steps < 2:
        raise ValueError("steps must be >= 2")
    if not 0 < t_min < t_max:
        raise ValueError("need 0 < t_min < t_max")
    lo, hi = math.log(float(t_min)), math.log(float(t_max))
    out = [t_min]
    for i in range(1, steps - 1):
        x = math.exp(lo + (hi - lo) * i / (steps - 1))
        snapped = Fraction(x).limit_denominator(10**4)
        if snapped <= out[-1] or snapped >= t_max:  # keep strictly increasing
            snapped = (out[-1] + t_max) / 2
        out.append(snapped)
    out.append(t_max)
    return out


def linear_grid(t_min: Fraction, t_max: Fraction, steps: int) -> list[Fraction]:
    if steps < 2:
        raise ValueError("steps must be >= 2")
    step = (t_max - t_min) / (steps - 1)
    return [t_min + i * step for i in range(steps)]


# ---------------------------------------------------------------------------
# Record presentation
# ---------------------------------------------------------------------------


def _record_row(record: DegeneracyRecord) -> dict:
    quad, lin, const = record.coefficients
    return {
        "coefficients": [format_value(quad), format_exact(lin), format_value(const)],
        "u": format_value(record.u_root),
        "t_float": record.t_approx,
        "eigenvalue": format_exact(record.eigenvalue),
        "multiplicity": record.base_multiplicity,
        "trivial_drop": record.trivial_drop,
        "certified_by": record.certified_by,
    }


def _certified_scan(loaded: LoadedModel, scan: DegeneracyScan) -> DegeneracyScan:
    """Best available certification tags for plain degeneracy listings."""
    model = loaded.model
    if scan.scal_independent or not scan.records:
        return scan
    if model.is_homogeneous_fibration and model.scal_fiber > 0 and model.fiber_dim >= 2:
        from dataclasses import replace

        from .bifurcation import EQUIVARIANT

        return DegeneracyScan(
            tuple(replace(r, certified_by=EQUIVARIANT) for r in scan.records)
        )
    if model.is_product:
        return certify_product_records(model, scan)
    return scan


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_degeneracies(args) -> int:
    loaded = load_model(args.model)
    model = loaded.model
    if args.count is not None:
        scan = smallest_degeneracies(model, args.count)
    else:
        scan = degeneracy_values(model, args.t_min, args.t_max)
    scan = _certified_scan(loaded, scan)

    out = sys.stdout
    if scan.scal_independent:
        out.write("scal independent of t; locally rigid family\n")
    header = f"{'t':>12}  {'u = t^2':>24}  {'eigenvalue':>12}  {'mult':>4}  {'drop':>4}  certified"
    out.write(header + "\n")
    for record in scan.records:
        out.write(
            f"{record.t_approx:>12.6f}  {format_value(record.u_root):>24}  "
            f"{format_exact(record.eigenvalue):>12}  {record.base_multiplicity:>4}  "
            f"{record.trivial_drop:>4}  {record.certified_by}\n"
        )
    if not scan.records and not scan.scal_independent:
        out.write("(no degeneracy values in range)\n")

    if args.json:
        payload = {
            "model": model.name,
            "scal_independent": scan.scal_independent,
            "records": [_record_row(r) for r in scan.records],
        }
        if args.count is not None:
            payload["count"] = args.count
        else:
            payload["t_min"] = str(args.t_min)
            payload["t_max"] = str(args.t_max)
        Path(args.json).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _scan_row(model: SubmersionModel, is_product: bool, crossings, t: Fraction) -> list[str]:
    u = t * t
    scal = scal_at_usq(model, u)
    level = threshold_at_usq(model, u)
    count = trivial_count_at_usq(model, u)
    if is_product:
        morse = str(morse_index_product_at_usq(model, u))
    else:
        morse = "n/a"
    if crossings:
        nearest = min(crossings, key=lambda x: abs(x - float(t)))
        nearest_text = repr(nearest)
    else:
        nearest_text = ""
    return [str(t), str(scal), str(level), str(count), morse, nearest_text]


def cmd_scan(args) -> int:
    loaded = load_model(args.model)
    model = loaded.model
    if args.steps < 2:
        raise ModelSchemaError("--steps must be >= 2")
    grid_fn = linear_grid if args.linear else log_grid
    grid = grid_fn(args.t_min, args.t_max, args.steps)
    scan = degeneracy_values(model, args.t_min, args.t_max)
    crossings = [r.t_approx for r in scan.records]

    threads = _thread_count()
    work = lambda t: _scan_row(model, model.is_product, crossings, t)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(work, grid))
    else:
        rows = [work(t) for t in grid]

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        ["t", "scal", "threshold", "trivial_count", "morse_index", "nearest_degeneracy"]
    )
    writer.writerows(rows)
    text = buffer.getvalue()
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_certify(args) -> int:
    loaded = load_model(args.model)
    model = loaded.model
    if model.fiber_dim < 2:
        raise HypothesisViolationError("fiber dimension >= 2 required")
    if loaded.pinching is None:
        raise HypothesisViolationError(
            "model file carries no pinching block (k1, k2, tau, ricMLowerAtTau)"
        )
    cert = pinching_certificate(
        model, loaded.pinching.k1, loaded.pinching.k2, loaded.pinching.tau
    )
    out = sys.stdout
    out.write(f"pinching certificate for {model.name} "
              f"(l={cert.fiber_dim}, m={cert.total_dim}, tau={cert.tau})\n")
    for check in cert.all_checks():
        out.write("  " + check.render() + "\n")
    out.write(f"  phi_1 = {cert.phi1} ({cert.phi1_source}); "
              f"mu_1 = {cert.mu1} ({cert.mu1_source})\n")
    if cert.verdict:
        out.write(
            f"PASS: every degeneracy value in (0, t*) is a bifurcation value; "
            f"t*^2 = {cert.t_star_sq}, t* = {format_value(cert.t_star)} "
            f"~ {cert.t_star_float:.5f}\n"
        )
        return EXIT_OK
    out.write(f"FAIL at {cert.failed}\n")
    return EXIT_CERT_FAIL


_FAMILIES = {
    "complex": lambda n: hopf_complex_model(n),
    "quaternionic-diagonal": lambda n: hopf_quaternionic_model(n),
    "octonionic": lambda n: hopf_octonionic_model(),
}


def cmd_smax(args) -> int:
    model = _FAMILIES[args.family](args.n)
    result = scal_positivity_root(model)
    out = sys.stdout
    if result.kind != "root":
        out.write(f"{args.family} n={args.n}: {result.kind}\n")
        return EXIT_OK
    out.write(
        f"{args.family} n={args.n}: s_max^2 = {format_value(result.u_max)}  "
        f"s_max = {result.s_max_float!r}\n"
    )
    return EXIT_OK


def cmd_report(args) -> int:
    loaded = load_model(args.model)
    model = loaded.model
    pinching = (
        (loaded.pinching.k1, loaded.pinching.k2) if loaded.pinching is not None else None
    )
    report = multiplicity_report(model, args.t_min, args.t_max, pinching=pinching)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "report.csv"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        ["t_float", "u_exact", "eigenvalue", "multiplicity", "certified_by",
         "witness_index", "conclusion"]
    )
    for entry in report.entries:
        r = entry.record
        writer.writerow(
            [repr(r.t_approx), format_value(r.u_root), format_exact(r.eigenvalue),
             r.base_multiplicity, r.certified_by, entry.witness_count, entry.conclusion]
        )
    for r in report.uncertified:
        writer.writerow(
            [repr(r.t_approx), format_value(r.u_root), format_exact(r.eigenvalue),
             r.base_multiplicity, UNCERTIFIED, "", ""]
        )
    csv_path.write_text(buffer.getvalue())

    from .diagrams import save_crossing_diagram, save_index_staircase

    grid = log_grid(args.t_min, args.t_max, 256)
    all_records = tuple(e.record for e in report.entries) + report.uncertified
    fig1 = save_crossing_diagram(model, all_records, grid, out_dir / "crossings.png")
    fig2 = save_index_staircase(model, grid, out_dir / "index_counts.png")

    out = sys.stdout
    out.write(f"multiplicity report for {model.name} on [{args.t_min}, {args.t_max}]\n")
    if report.scal_independent:
        out.write("scal independent of t; locally rigid family; no claims\n")
    elif not report.entries:
        out.write("no certified bifurcation values in range; no claims\n")
    else:
        out.write(f"certification route: {report.route}\n")
        for entry in report.entries:
            out.write(
                f"  t ~ {entry.record.t_approx:.6f} (eigenvalue "
                f"{format_exact(entry.record.eigenvalue)}, drop "
                f"{entry.record.trivial_drop}): index witness {entry.witness_count} > 0 "
                f"-> {entry.conclusion}\n"
            )
    print(f"wrote {csv_path}, {fig1.name}, {fig2.name} in {out_dir}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_range(parser, required=True):
    parser.add_argument("--t-min", type=lambda s: _parse_bound(s, "--t-min"),
                        required=required, help="lower fiber scale (exact rational)")
    parser.add_argument("--t-max", type=lambda s: _parse_bound(s, "--t-max"),
                        required=required, help="upper fiber scale (exact rational)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collapse-spectra",
        description="Exact crossing analysis for fiber-shrinking submersion metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degeneracies", help="locate threshold crossings")
    p.add_argument("model", help="model JSON file")
    _add_range(p, required=False)
    p.add_argument("--count", type=int, help="return the COUNT first crossings instead")
    p.add_argument("--json", help="also write records as JSON to this path")
    p.set_defaults(func=cmd_degeneracies)

    p = sub.add_parser("scan", help="CSV sweep of scal/threshold/counts")
    p.add_argument("model")
    _add_range(p)
    p.add_argument("--steps", type=int, required=True, help="number of grid rows (>= 2)")
    p.add_argument("--csv", help="output path (default stdout)")
    p.add_argument("--linear", action="store_true", help="linear grid instead of log")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("certify", help="run the curvature pinching certificate")
    p.add_argument("model")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("smax", help="positivity range of the sphere-fiber families")
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p.add_argument("--n", type=int, default=1, help="family index (ignored for octonionic)")
    p.set_defaults(func=cmd_smax)

    p = sub.add_parser("report", help="certified multiplicity report + figures")
    p.add_argument("model")
    _add_range(p)
    p.add_argument("--out-dir", default="collapse-report",
                   help="directory for report.csv and figures")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "func", None) is cmd_degeneracies:
        if args.count is None and (args.t_min is None or args.t_max is None):
            parser.error("degeneracies needs --count or both --t-min and --t-max")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (ModelSchemaError, InconsistentModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (HypothesisViolationError, NotAProductError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except CollapseSpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
