"""Command-line front end.

Subcommands: ``entropy`` (classical or family conditional entropy),
``threshold`` (boundary point or exact large-q limit), ``sweep``
(boundary curve over a grid of orders, CSV or JSON), and ``verify``
(dense-oracle certification suite).  Data goes to stdout, errors and
diagnostics to stderr; exit codes are 0 on success, 1 on domain errors or
failed verification, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .classical import ProbDist, tsallis_entropy
from .errors import QTsallisError, ValidationError
from .oracle import default_family_grid, default_order_grid, verify_family, \
    verify_separable_witness
from .solver import MONOTONE_TOL, asymptotic_threshold, threshold_for_q
from .werner import WernerParams, conditional_entropy_block


def format_scalar(value: float, sci: bool = False) -> str:
    """Render with 15 significant digits.

    Plain decimal notation is used even for small magnitudes unless
    ``sci`` is set; the decimal separator is always '.'.
    """
    if not math.isfinite(value):
        return str(value)
    if value == 0.0:
        return "0"
    text = f"{value:.15g}"
    if ("e" in text or "E" in text) and not sci:
        exponent = math.floor(math.log10(abs(value)))
        decimals = max(0, 14 - exponent)
        text = f"{value:.{decimals}f}".rstrip("0").rstrip(".")
    return text


@dataclass(frozen=True)
class SweepSpec:
    """Parameters of a boundary sweep over entropy orders."""

    levels: int
    parties: int
    q_min: float
    q_max: float
    q_points: int
    log_scale: bool
    output_format: str

    def __post_init__(self) -> None:
        if self.q_min <= 0.0:
            raise ValidationError("q_min must be positive")
        if not self.q_min < self.q_max:
            raise ValidationError("q_min must be smaller than q_max")
        if self.q_points < 2:
            raise ValidationError("need at least two grid points")
        if self.output_format not in ("csv", "json"):
            raise ValidationError(f"unknown output format {self.output_format!r}")

    def q_values(self) -> np.ndarray:
        if self.log_scale:
            return np.geomspace(self.q_min, self.q_max, self.q_points)
        return np.linspace(self.q_min, self.q_max, self.q_points)


def _parse_floats(text: str, count: int | None = None) -> list[float]:
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"could not parse {text!r} as comma-separated numbers") from exc
    if count is not None and len(values) != count:
        raise ValidationError(f"expected {count} comma-separated values, got {len(values)}")
    return values


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_entropy(args) -> int:
    if args.condition_on is not None and args.werner is None:
        print("error: --condition-on requires --werner", file=sys.stderr)
        return 2
    if args.dist is not None:
        value = tsallis_entropy(ProbDist(np.array(_parse_floats(args.dist))), args.q)
    else:
        raw_levels, raw_parties, mixing = _parse_floats(args.werner, 3)
        params = WernerParams(int(raw_levels), int(raw_parties), mixing)
        conditioned = params.parties - 1 if args.condition_on is None else args.condition_on
        value = conditional_entropy_block(params, conditioned, args.q)
    print(format_scalar(value, args.sci))
    return 0


def _cmd_threshold(args) -> int:
    if args.asymptotic:
        print(format_scalar(asymptotic_threshold(args.N, args.n), args.sci))
        return 0
    point = threshold_for_q(args.N, args.n, args.q)
    print("none" if point.x_star is None else format_scalar(point.x_star, args.sci))
    return 0


def _cmd_sweep(args) -> int:
    spec = SweepSpec(args.N, args.n, args.q_min, args.q_max, args.q_points,
                     args.log_scale, args.format)
    points = [threshold_for_q(spec.levels, spec.parties, float(q))
              for q in spec.q_values()]

    previous = None
    for point in points:
        if point.x_star is None:
            continue
        if previous is not None and point.x_star > previous.x_star + MONOTONE_TOL:
            print(f"monotonicity violation: x_star rose from "
                  f"{format_scalar(previous.x_star)} at q={format_scalar(previous.q)} "
                  f"to {format_scalar(point.x_star)} at q={format_scalar(point.q)}",
                  file=sys.stderr)
        previous = point

    def converged(point) -> bool:
        return point.x_star is not None and point.bracket_width <= 1e-12

    if spec.output_format == "csv":
        lines = ["q,x_star,converged"]
        for point in points:
            x_text = "" if point.x_star is None else format_scalar(point.x_star, args.sci)
            lines.append(f"{format_scalar(point.q, args.sci)},{x_text},"
                         f"{'true' if converged(point) else 'false'}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = [{"q": point.q, "x_star": point.x_star, "converged": converged(point)}
                   for point in points]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    family = verify_family(default_family_grid(args.max_dim), default_order_grid())
    witness = verify_separable_witness(1000, args.seed)
    rows = family.to_json_obj() + witness.to_json_obj()
    text = json.dumps(rows, indent=2) + "\n"
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0 if family.passed and witness.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtsallis",
        description="Nonadditive entropies and entanglement thresholds for "
                    "GHZ-diluted mixed states.")
    sub = parser.add_subparsers(dest="command", required=True)

    entropy = sub.add_parser("entropy", help="classical or family conditional entropy")
    source = entropy.add_mutually_exclusive_group(required=True)
    source.add_argument("--dist", help="comma-separated probabilities")
    source.add_argument("--werner", help="family coordinates as N,n,x")
    entropy.add_argument("--q", type=float, required=True, help="entropy order")
    entropy.add_argument("--condition-on", type=int, default=None,
                         help="number of conditioned parties (default n-1)")
    entropy.add_argument("--sci", action="store_true", help="allow scientific notation")
    entropy.set_defaults(func=_cmd_entropy)

    threshold = sub.add_parser("threshold", help="boundary point of the family")
    threshold.add_argument("--N", type=int, required=True, help="levels per party")
    threshold.add_argument("--n", type=int, required=True, help="number of parties")
    which = threshold.add_mutually_exclusive_group(required=True)
    which.add_argument("--q", type=float, help="entropy order to solve at")
    which.add_argument("--asymptotic", action="store_true",
                       help="print the exact large-q limit instead")
    threshold.add_argument("--sci", action="store_true", help="allow scientific notation")
    threshold.set_defaults(func=_cmd_threshold)

    sweep = sub.add_parser("sweep", help="boundary curve over a grid of orders")
    sweep.add_argument("--N", type=int, required=True, help="levels per party")
    sweep.add_argument("--n", type=int, required=True, help="number of parties")
    sweep.add_argument("--q-min", type=float, required=True)
    sweep.add_argument("--q-max", type=float, required=True)
    sweep.add_argument("--q-points", type=int, required=True)
    sweep.add_argument("--log-scale", action="store_true",
                       help="space the grid geometrically")
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--out", default=None, help="output file (default stdout)")
    sweep.add_argument("--sci", action="store_true", help="allow scientific notation")
    sweep.set_defaults(func=_cmd_sweep)

    verify = sub.add_parser("verify", help="dense-oracle certification suite")
    verify.add_argument("--seed", type=int, default=42,
                        help="seed for the random witness suite")
    verify.add_argument("--max-dim", type=int, default=4096,
                        help="restrict the family grid to this total dimension")
    verify.add_argument("--json", default=None, help="write the report to this file")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QTsallisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
