"""Batch front end: parse a function descriptor, construct, verify, report.

Usage:

    cpolyapprox --function "ratio [1] / [1, -0.5]" --N 8..32step4 \\
        --a 0.5 --eps 0.2 --out report.json --csv

One JSON document is written per run; the optional CSV companions hold
per-angle error magnitudes and per-root circle deviations for plotting.
Exit codes: 0 all checks passed, 1 verification failure, 2 configuration
or construction failure.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .construct import (
    ComplexPolynomial,
    ConstantFunction,
    FunctionSpec,
    RationalFunction,
    TaylorFunction,
    ZeroFunction,
    construct,
    error_bound,
)
from .errors import ApproximationError, DomainError, InsufficientData, ParseError
from .series import TruncatedSeries
from .verify import (
    ErrorReport,
    check_roots_on_circle,
    check_vanishing_order,
    default_root_tolerance,
    error_profile,
    fit_rate,
    measure_sup_error,
    simple_fraction_residual,
)

# Error-bound compliance (sup <= 2 x bound) is asserted only from this
# degree on; below it the asymptotic bound carries no content.
BOUND_CHECK_MIN_DEGREE = 16
FRACTION_RESIDUAL_TOL = 1e-8


def _parse_complex(text: str, position: int) -> complex:
    """Parse 'a+bi' / 'a-bi' / 'a' / 'bi' with decimal literals."""
    cleaned = text.strip()
    if not cleaned:
        raise ParseError("empty number", position)
    try:
        value = complex(cleaned.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ParseError(f"malformed complex number {cleaned!r}", position) from None
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ParseError(f"non-finite number {cleaned!r}", position)
    return value


def _parse_coeff_list(text: str, position: int) -> list[complex]:
    cleaned = text.strip()
    if not cleaned.startswith("[") or not cleaned.endswith("]"):
        raise ParseError("expected a bracketed coefficient list", position)
    inner = cleaned[1:-1]
    if not inner.strip():
        raise ParseError("empty coefficient list", position + 1)
    out = []
    offset = position + 1
    for part in inner.split(","):
        out.append(_parse_complex(part, offset + len(part) - len(part.lstrip())))
        offset += len(part) + 1
    return out


def parse_spec(text: str) -> FunctionSpec:
    """Parse a function descriptor.

    Grammar:
        zero
        const <complex>
        ratio <coeff list> / <coeff list>
        coeffs <coeff list>

    Complex numbers use 'i' notation ("0.5+0.25i"); coefficient lists are
    bracketed, ascending order, constant term first.  Rational denominators
    are certified zero-free on the closed unit disk at parse time.
    """
    stripped = text.strip()
    head, _, rest = stripped.partition(" ")
    rest_pos = text.find(stripped) + len(head) + 1 if rest else len(text)
    if head == "zero":
        if rest.strip():
            raise ParseError("'zero' takes no arguments", rest_pos)
        return ZeroFunction()
    if head == "const":
        return ConstantFunction(_parse_complex(rest, rest_pos))
    if head == "ratio":
        num_text, sep, den_text = rest.partition("/")
        if not sep:
            raise ParseError("'ratio' needs numerator / denominator", rest_pos)
        numerator = ComplexPolynomial(_parse_coeff_list(num_text, rest_pos))
        denominator = ComplexPolynomial(
            _parse_coeff_list(den_text, rest_pos + len(num_text) + 1)
        )
        return RationalFunction(numerator, denominator)
    if head == "coeffs":
        return TaylorFunction(TruncatedSeries(_parse_coeff_list(rest, rest_pos)))
    raise ParseError(
        f"unknown function kind {head!r} (expected zero/const/ratio/coeffs)",
        text.find(head) if head else 0,
    )


_RANGE_RE = re.compile(r"^(\d+)\.\.(\d+)(?:\s*step\s*(\d+))?$")


def parse_degree_list(text: str) -> list[int]:
    """Parse '--N' values: '4,8,20' or '6..32 step 2' (default step 1)."""
    cleaned = text.strip()
    match = _RANGE_RE.match(cleaned)
    if match:
        lo, hi = int(match.group(1)), int(match.group(2))
        step = int(match.group(3)) if match.group(3) else 1
        if step < 1 or hi < lo:
            raise ParseError(f"bad degree range {cleaned!r}")
        return list(range(lo, hi + 1, step))
    try:
        return [int(part) for part in cleaned.split(",")]
    except ValueError:
        raise ParseError(f"bad degree list {cleaned!r}") from None


@dataclass(frozen=True)
class RunConfig:
    """Validated batch-run parameters."""

    function_text: str
    degrees: list[int]
    radius: float = 0.5
    margin: float = 0.2
    samples: int = 4096
    root_tol: float | None = None      # None: per-degree default
    vanish_tol: float = 1e-8
    out_path: str = "report.json"
    write_csv: bool = False

    def validate(self) -> None:
        if not 0.0 < self.radius < 1.0:
            raise DomainError(f"--a must lie in (0, 1), got {self.radius}")
        if not 0.0 < self.margin < 1.0 - self.radius:
            raise DomainError(
                f"--eps must lie in (0, 1 - a) = (0, {1.0 - self.radius}), "
                f"got {self.margin}"
            )
        if not self.degrees or any(n < 2 for n in self.degrees):
            raise DomainError("every --N value must be >= 2")
        if self.samples < 256:
            raise DomainError(f"--samples must be >= 256, got {self.samples}")


def _run_one(f: FunctionSpec, degree: int, config: RunConfig):
    """Construct and verify one degree; returns (appr, circle, record, report)."""
    appr = construct(f, degree)
    samples = max(config.samples, 8 * degree)
    root_tol = config.root_tol or default_root_tolerance(degree)
    sup = measure_sup_error(appr, f, config.radius, samples)
    bound = error_bound(config.radius, config.margin, appr.cutoff)
    circle = check_roots_on_circle(appr, root_tol)
    vanish = check_vanishing_order(appr, f, config.vanish_tol)
    residual = simple_fraction_residual(appr)

    checks = {
        "roots_on_circle": circle.passed,
        "vanishing_order": vanish.ok,
        "error_bound": (sup <= 2.0 * bound
                        if degree >= BOUND_CHECK_MIN_DEGREE else None),
        "fraction_identity": residual <= FRACTION_RESIDUAL_TOL,
    }
    passed = all(v for v in checks.values() if v is not None)
    report = ErrorReport(
        degree=degree,
        cutoff=appr.cutoff,
        radius=config.radius,
        margin=config.margin,
        sup_error=sup,
        bound=bound,
        max_circle_deviation=circle.max_deviation,
        vanishing_order_ok=vanish.ok,
        first_violated_index=vanish.first_bad,
        fraction_residual=residual,
        samples_used=samples,
    )
    record = {
        "N": degree,
        "n": appr.cutoff,
        "q": appr.base_degree,
        "m": appr.shift_power,
        "sup_error": sup,
        "bound": bound,
        "bound_ratio": sup / bound,
        "max_circle_deviation": circle.max_deviation,
        "root_tol": root_tol,
        "vanishing_order_ok": vanish.ok,
        "first_violated_index": vanish.first_bad,
        "fraction_residual": residual,
        "samples_used": samples,
        "min_modulus": appr.min_modulus,
        "coeff_bound": appr.coeff_bound,
        "checks": checks,
        "passed": passed,
    }
    return appr, circle, record, report


def _write_csv_files(out_path: Path, rows):
    """Companion CSVs with per-angle errors and per-root deviations."""
    error_path = out_path.with_name(out_path.name + ".error.csv")
    roots_path = out_path.with_name(out_path.name + ".roots.csv")
    with error_path.open("w", encoding="utf-8") as fh:
        fh.write("N,angle,abs_error\n")
        for degree, angles, errs, _ in rows:
            for ang, err in zip(angles, errs):
                fh.write(f"{degree},{float(ang)!r},{float(err)!r}\n")
    with roots_path.open("w", encoding="utf-8") as fh:
        fh.write("N,re,im,abs_deviation\n")
        for degree, _, _, roots in rows:
            for root in roots:
                dev = abs(abs(root) - 1.0)
                fh.write(f"{degree},{float(root.real)!r},"
                         f"{float(root.imag)!r},{float(dev)!r}\n")


def run(config: RunConfig) -> int:
    """Execute the batch: one record per degree, a rate-fit summary, exit code."""
    try:
        config.validate()
        f = parse_spec(config.function_text)
    except ApproximationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    records = []
    reports = []
    csv_rows = []
    construction_failed = False
    for degree in sorted(config.degrees):
        try:
            appr, circle, record, report = _run_one(f, degree, config)
        except ApproximationError as exc:
            construction_failed = True
            records.append({
                "N": degree,
                "error": {"type": type(exc).__name__, "message": str(exc)},
                "passed": False,
            })
            continue
        records.append(record)
        reports.append(report)
        if config.write_csv:
            angles, errs = error_profile(appr, f, config.radius,
                                         record["samples_used"])
            csv_rows.append((degree, angles, errs, circle.roots))

    summary: dict = {"all_passed": (not construction_failed
                                    and all(r["passed"] for r in records))}
    try:
        fit = fit_rate(reports)
        if math.isfinite(fit.slope):
            summary["rate_slope"] = fit.slope
            summary["rate_intercept"] = fit.intercept
        else:
            summary["rate_slope"] = None
            summary["rate_note"] = "exact approximation encountered; slope undefined"
    except InsufficientData:
        summary["rate_slope"] = None
        summary["rate_note"] = "need >= 3 degrees with positive error for a fit"

    document = {
        "config": {
            "function": config.function_text,
            "N": sorted(config.degrees),
            "a": config.radius,
            "eps": config.margin,
            "samples": config.samples,
            "root_tol": config.root_tol,
            "vanish_tol": config.vanish_tol,
            "out": str(config.out_path),
        },
        "records": records,
        "summary": summary,
    }
    out_path = Path(config.out_path)
    with out_path.open("w", encoding="utf-8") as fh:
        json.dump(document, fh, indent=2)
        fh.write("\n")
    if config.write_csv:
        _write_csv_files(out_path, csv_rows)

    for record in records:
        if "error" in record:
            print(f"N={record['N']}: construction failed: "
                  f"{record['error']['message']}")
        else:
            status = "pass" if record["passed"] else "FAIL"
            print(f"N={record['N']}: sup_error={record['sup_error']:.6e} "
                  f"bound={record['bound']:.6e} "
                  f"circle_dev={record['max_circle_deviation']:.2e} [{status}]")
    if summary.get("rate_slope") is not None:
        print(f"fitted rate slope: {summary['rate_slope']:.4f}")
    print(f"report written to {out_path}")

    if construction_failed:
        return 2
    if not summary["all_passed"]:
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpolyapprox",
        description="Construct circle-rooted polynomial approximants of a "
                    "bounded analytic function and verify every claim about "
                    "them.",
    )
    parser.add_argument("--function", required=True,
                        help='descriptor: "zero", "const 0.5+0.25i", '
                             '"ratio [1] / [1, -0.5i]", "coeffs [1, 0.5]"')
    parser.add_argument("--N", required=True, dest="degrees",
                        help='degrees: comma list "4,8,20" or range '
                             '"6..32 step 2"')
    parser.add_argument("--a", type=float, default=0.5, dest="radius",
                        help="radius of the measurement disk (default 0.5)")
    parser.add_argument("--eps", type=float, default=0.2, dest="margin",
                        help="bound margin in (0, 1-a) (default 0.2)")
    parser.add_argument("--samples", type=int, default=4096,
                        help="boundary samples for sup-error measurement")
    parser.add_argument("--out", default="report.json", dest="out_path",
                        help="JSON report path (default report.json)")
    parser.add_argument("--csv", action="store_true", dest="write_csv",
                        help="also write <out>.error.csv and <out>.roots.csv")
    parser.add_argument("--root-tol", type=float, default=None, dest="root_tol",
                        help="circle-deviation tolerance (default: per-degree)")
    parser.add_argument("--vanish-tol", type=float, default=1e-8,
                        dest="vanish_tol",
                        help="vanishing-order tolerance (default 1e-8)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        degrees = parse_degree_list(args.degrees)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    config = RunConfig(
        function_text=args.function,
        degrees=degrees,
        radius=args.radius,
        margin=args.margin,
        samples=args.samples,
        root_tol=args.root_tol,
        vanish_tol=args.vanish_tol,
        out_path=args.out_path,
        write_csv=args.write_csv,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
