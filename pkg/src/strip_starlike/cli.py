"""
Command-line entry point.

    strip-starlike table1
    strip-starlike radius --alpha pi/2 --class ss --gamma 0.5
    strip-starlike coeffs --alpha 2pi/3 --order 12
    strip-starlike membership --input f.json --predicate strip:pi/2 --r 0.9
    strip-starlike boundary --alpha pi/2 --r 0.9 --samples 360 --format csv
    strip-starlike bounds --alpha pi/2 --r 0.5

Output is JSON on stdout unless stated otherwise.  Floats carry at most 12
significant digits so repeated runs diff cleanly.  Exit status is 0 on
success, 2 on invalid input and 3 on a numerical failure.
"""

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from .exceptions import NumericalFailure
from .factory import NormalizedFunction, SchwarzFunction, extremal, from_schwarz, q_of
from .membership import RegionPredicate, parse_angle, test_membership
from .powerseries import DEFAULT_ORDER, TruncatedSeries, evaluate
from .radius import RadiusProblem, solve, table1
from .strip_kernel import arg_center, arg_spread, mapping_point, modulus_bound, sharp_bounds, validate_alpha

ORDER_ENV = "STRIP_STARLIKE_ORDER"
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


def rounded(x):
    """Recursively cap floats at 12 significant digits."""
    if isinstance(x, dict):
        return {k: rounded(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [rounded(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if not math.isfinite(x) else float(f"{x:.12g}") + 0.0  # + 0.0 drops -0.0
    if isinstance(x, (int, np.integer)):
        return int(x)
    return x


def _emit(payload, out=None):
    text = json.dumps(rounded(payload), indent=2) + "\n"
    _write(text, out)


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _alpha(text):
    return float(validate_alpha(parse_angle(text)))


def _default_order():
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        order = int(raw)
    except ValueError:
        raise ValueError(f"{ORDER_ENV} must be an integer, got {raw!r}") from None
    if order < 2:
        raise ValueError(f"{ORDER_ENV} must be at least 2")
    return order


def _load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _pair(z):
    return [float(z.real), float(z.imag)]


def cmd_table1(args):
    _emit(table1())


def cmd_radius(args):
    kind = args.kind
    gamma = args.gamma
    if kind == "ss" and gamma is None:
        raise ValueError("--gamma is required for --class ss")
    _emit(solve(RadiusProblem(kind, _alpha(args.alpha), gamma)).to_dict())


def cmd_coeffs(args):
    alpha = _alpha(args.alpha)
    order = args.order if args.order is not None else _default_order()
    if args.schwarz:
        w = SchwarzFunction(TruncatedSeries.from_dict(_load_json(args.schwarz)))
        f = from_schwarz(alpha, w, order)
    else:
        f = extremal(alpha, order)
    a = f.coefficients
    modulus = np.abs(a)
    within = modulus <= 1 + 1e-9
    _emit(
        {
            "alpha": alpha,
            "order": order,
            "source": "schwarz" if args.schwarz else "extremal",
            "coefficients": [_pair(c) for c in a],
            "modulus": modulus.tolist(),
            "within_unit_bound": within.tolist(),
            "all_within_unit_bound": bool(np.all(within)),
        }
    )


def cmd_membership(args):
    f = NormalizedFunction.from_dict(_load_json(args.input))
    report = test_membership(f, RegionPredicate.parse(args.predicate), args.r, args.samples)
    _emit({**report.to_dict(), "passed": report.passed})


def cmd_boundary(args):
    alpha = _alpha(args.alpha)
    if not 0 < args.r < 1:
        raise ValueError("--r must lie in (0, 1)")
    if args.samples < 1:
        raise ValueError("--samples must be positive")
    theta = 2 * np.pi * np.arange(args.samples + 1) / args.samples
    z = args.r * np.exp(1j * theta)
    if args.input:
        q = evaluate(q_of(NormalizedFunction.from_dict(_load_json(args.input))), z)
    else:
        q = 1 + mapping_point(alpha, z)
    if args.format == "json":
        rows = [{"theta": t, "re_q": v.real, "im_q": v.imag} for t, v in zip(theta, q)]
        _emit({"alpha": alpha, "r": args.r, "samples": args.samples, "points": rows}, args.out)
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theta", "re_q", "im_q"])
    for t, v in zip(theta, q):
        writer.writerow([f"{t:.12g}", f"{v.real:.12g}", f"{v.imag:.12g}"])
    _write(buf.getvalue(), args.out)


def cmd_bounds(args):
    alpha = _alpha(args.alpha)
    b = sharp_bounds(args.r, alpha)
    _emit(
        {
            "alpha": alpha,
            "r": args.r,
            "re_bracket": [b.re_min, b.re_max],
            "im_bound": b.im_max,
            "arg_center": arg_center(args.r, alpha),
            "arg_spread": arg_spread(args.r, alpha),
            "modulus_bound": modulus_bound(args.r, alpha),
        }
    )


def build_parser():
    p = argparse.ArgumentParser(prog="strip-starlike", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("table1", help="radii at alpha = pi/2 against the published values")
    s.set_defaults(handler=cmd_table1)

    s = sub.add_parser("radius", help="inclusion radius for any alpha")
    s.add_argument("--alpha", required=True, help="radians, or pi forms such as 2pi/3")
    s.add_argument("--class", dest="kind", required=True, choices=("ss", "ps", "sl"))
    s.add_argument("--gamma", type=float, help="order for --class ss, in (0, 1)")
    s.set_defaults(handler=cmd_radius)

    s = sub.add_parser("coeffs", help="Taylor coefficients of a class member")
    s.add_argument("--alpha", required=True)
    s.add_argument("--order", type=int, help=f"series order (default ${ORDER_ENV} or {DEFAULT_ORDER})")
    s.add_argument("--schwarz", help="series JSON for the Schwarz function (default w(z) = z)")
    s.set_defaults(handler=cmd_coeffs)

    s = sub.add_parser("membership", help="sample zf'/f on |z| = r against a region")
    s.add_argument("--input", required=True, help="normalized function as series JSON")
    s.add_argument("--predicate", required=True, help="strip:A, starlike:B, ss:G, ps or sl")
    s.add_argument("--r", type=float, required=True)
    s.add_argument("--samples", type=int, default=720)
    s.set_defaults(handler=cmd_membership)

    s = sub.add_parser("boundary", help="image of |z| = r under zf'/f, for plotting")
    s.add_argument("--alpha", required=True)
    s.add_argument("--r", type=float, required=True)
    s.add_argument("--samples", type=int, default=360)
    s.add_argument("--out", help="output file (default stdout)")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--input", help="normalized function JSON (default: the extremal member)")
    s.set_defaults(handler=cmd_boundary)

    s = sub.add_parser("bounds", help="sharp real-part bracket and imaginary bound on |z| = r")
    s.add_argument("--alpha", required=True)
    s.add_argument("--r", type=float, required=True)
    s.set_defaults(handler=cmd_bounds)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.handler(args)
    except NumericalFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return 0


if __name__ == "__main__":
    sys.exit(main())
