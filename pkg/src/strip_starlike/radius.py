"""
Inclusion radii: strongly starlike, parabolic and lemniscate targets.

On ``|z| = r`` every member has ``zf'/f`` inside the rectangle returned by
:func:`strip_kernel.sharp_bounds`.  Each radius is the first ``r`` at which a
corner of that rectangle leaves the target region:

* strongly starlike of order ``gamma``: the corner ``(re_min, im_max)``
  reaches argument ``pi gamma / 2``,
* parabolic: the same corner reaches the parabola ``v^2 = 2u - 1``,
* lemniscate: either corner ``(re_min, im_max)`` or ``(re_max, im_max)``
  reaches ``(u^2 + v^2)^2 = 2(u^2 - v^2)``.

Each equation is negative at ``r = 0`` and the radius is its least positive
root, found by a forward scan for the first sign change followed by
bisection.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .exceptions import InvalidParameter, NoSignChange
from .strip_kernel import arg_center, arg_spread, modulus_bound, validate_alpha

SCAN_STEP = 1e-3
ROOT_TOL = 1e-10
R_LIMIT = 1 - 1e-9
KINDS = ("ss", "ps", "sl")

# published radii at alpha = pi/2 (gamma = 1/2 for the strongly starlike row)
PUBLISHED_RADII = {"ss": 0.493918, "ps": 0.421547, "sl": 0.304506}
PUBLISHED_TOL = 1e-4


def _pieces(r, alpha):
    # sin a, arg_center, arg_spread, log modulus_bound
    s = math.sin(alpha)
    c, d = arg_center(r, alpha), arg_spread(r, alpha)
    return s, c, d, np.log(modulus_bound(r, alpha))


def ss_radius_equation(r, alpha, gamma):
    """Argument of the lower-left corner minus ``pi gamma / 2``.

    ``arctan(log(modulus_bound) / (2 sin a + arg_center - arg_spread)) - pi gamma / 2``.
    """
    s, c, d, log_n = _pieces(r, alpha)
    return np.arctan(log_n / (2 * s + c - d)) - np.pi * gamma / 2


def ps_radius_equation(r, alpha):
    """``v^2 - 2u + 1`` at the lower-left corner ``(u, v)``; positive outside the parabola.

    Written out: ``log^2(modulus_bound)/(4 sin^2 a) - (arg_center - arg_spread)/sin a - 1``.
    """
    s, c, d, log_n = _pieces(r, alpha)
    return log_n**2 / (4 * s * s) - (c - d) / s - 1


def sl_radius_equation(r, alpha, sign):
    """``(u^2 + v^2)^2 - 2u^2 + 2v^2``, positive outside the lemniscate.

    ``u = 1 + (arg_center + sign * arg_spread)/(2 sin a)`` and
    ``v = log(modulus_bound)/(2 sin a)``: the upper corner on the right
    (``sign = 1``) or left (``sign = -1``) edge of the rectangle.
    """
    if sign not in (1, -1):
        raise InvalidParameter("sign must be +1 or -1")
    s, c, d, log_n = _pieces(r, alpha)
    u = 1 + (c + sign * d) / (2 * s)
    v = log_n / (2 * s)
    return (u * u + v * v) ** 2 - 2 * u * u + 2 * v * v


@dataclass(frozen=True)
class Root:
    value: float
    iterations: int


def least_positive_root(fn, scan_step=SCAN_STEP, tol=ROOT_TOL, r_limit=R_LIMIT):
    """First sign change of ``fn`` on ``(0, r_limit]``, refined by bisection.

    ``fn(0)`` must be negative.  The scan visits ``scan_step, 2 scan_step, ...``
    and finally ``r_limit``; the bracket is then halved until it is at most
    ``tol`` wide and its midpoint returned.
    """
    if not (scan_step > 0 and tol > 0):
        raise InvalidParameter("scan_step and tol must be positive")
    f0 = float(fn(0.0))
    if not f0 < 0:
        raise InvalidParameter(f"need fn(0) < 0, got {f0!r}")
    count = 1
    lo = 0.0
    hi = None
    k = 1
    while lo < r_limit:
        r = min(k * scan_step, r_limit)
        count += 1
        value = float(fn(r))
        if value == 0:
            return Root(r, count)
        if value > 0:
            hi = r
            break
        lo = r
        k += 1
    if hi is None:
        raise NoSignChange(f"no sign change on (0, {r_limit}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        count += 1
        if fn(mid) < 0:
            lo = mid
        else:
            hi = mid
    return Root(0.5 * (lo + hi), count)


@dataclass(frozen=True)
class RadiusProblem:
    kind: str
    alpha: float
    gamma: float = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameter(f"kind must be one of {KINDS}, got {self.kind!r}")
        object.__setattr__(self, "alpha", float(validate_alpha(self.alpha)))
        if self.kind == "ss":
            if self.gamma is None or not 0 < self.gamma < 1:
                raise InvalidParameter("strongly starlike order gamma must lie in (0, 1)")
            object.__setattr__(self, "gamma", float(self.gamma))
        elif self.gamma is not None:
            raise InvalidParameter(f"gamma only applies to kind 'ss', not {self.kind!r}")

    def equations(self):
        """Named equations whose least positive roots are reported."""
        a = self.alpha
        if self.kind == "ss":
            return {"r1": lambda r: ss_radius_equation(r, a, self.gamma)}
        if self.kind == "ps":
            return {"r2": lambda r: ps_radius_equation(r, a)}
        return {
            "r3": lambda r: sl_radius_equation(r, a, 1),
            "r4": lambda r: sl_radius_equation(r, a, -1),
        }


@dataclass(frozen=True)
class RadiusResult:
    problem: RadiusProblem
    radius: float
    roots: dict = field(default_factory=dict)
    iterations: int = 0

    def to_dict(self):
        return {
            "kind": self.problem.kind,
            "alpha": self.problem.alpha,
            "gamma": self.problem.gamma,
            "radius": self.radius,
            "roots": dict(self.roots),
            "iterations": self.iterations,
        }


def solve(problem, scan_step=SCAN_STEP, tol=ROOT_TOL):
    """Least positive root(s) for the problem; the lemniscate radius is the smaller of two."""
    roots, iterations = {}, 0
    for name, fn in problem.equations().items():
        root = least_positive_root(fn, scan_step, tol)
        roots[name] = root.value
        iterations += root.iterations
    return RadiusResult(problem, min(roots.values()), roots, iterations)


def table_problems():
    half_pi = math.pi / 2
    return [RadiusProblem("ss", half_pi, 0.5), RadiusProblem("ps", half_pi), RadiusProblem("sl", half_pi)]


def table1(scan_step=SCAN_STEP, tol=ROOT_TOL):
    """The three radii at ``alpha = pi/2``, solved concurrently, in fixed order."""
    problems = table_problems()
    with ThreadPoolExecutor(max_workers=len(problems)) as pool:
        results = list(pool.map(lambda p: solve(p, scan_step, tol), problems))
    rows = []
    for res in results:
        row = res.to_dict()
        row["published"] = PUBLISHED_RADII[res.problem.kind]
        row["matches_paper"] = abs(res.radius - row["published"]) <= PUBLISHED_TOL
        rows.append(row)
    return rows
