"""
Region predicates and sampled membership tests.

A function is tested through ``q = zf'/f``: its values on a circle
``|z| = r`` are compared with a target region.  Because the regions used here
are tied to harmonic quantities (real parts, arguments) the extremes on
``|z| <= r`` occur on the circle, so sampling the circle is enough, up to the
sampling resolution.  None of this is a proof of membership.
"""

import math
import re
from dataclasses import asdict, dataclass

import numpy as np

from .exceptions import (
    BoundViolation,
    DerivativeVanishes,
    ExcludedTheta,
    InvalidParameter,
)
from .factory import q_of
from .powerseries import TruncatedSeries, derivative, evaluate, hadamard
from .strip_kernel import sharp_bounds, strip_bounds, validate_alpha

DEFAULT_SAMPLES = 720
BOUND_SLACK = 1e-9
R_MAX = 1 - 1e-9

_TAGS = ("strip", "starlike", "strongly_starlike", "parabolic", "lemniscate")


@dataclass(frozen=True)
class RegionPredicate:
    """Target region for ``zf'/f``.

    ``param`` is ``alpha`` for ``strip``, ``beta`` for ``starlike``, ``gamma``
    for ``strongly_starlike`` and unused (``None``) otherwise.
    """

    tag: str
    param: float = None

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise InvalidParameter(f"unknown region {self.tag!r}; choose from {_TAGS}")
        p = self.param
        if self.tag == "strip":
            object.__setattr__(self, "param", validate_alpha(p))
        elif self.tag == "starlike":
            if p is None or not 0 <= p < 1:
                raise InvalidParameter(f"starlike order must be in [0, 1), got {p!r}")
        elif self.tag == "strongly_starlike":
            if p is None or not 0 < p <= 1:
                raise InvalidParameter(f"strongly starlike order must be in (0, 1], got {p!r}")
        elif p is not None:
            raise InvalidParameter(f"region {self.tag!r} takes no parameter")

    @classmethod
    def strip(cls, alpha):
        return cls("strip", alpha)

    @classmethod
    def starlike(cls, beta=0.0):
        return cls("starlike", beta)

    @classmethod
    def strongly_starlike(cls, gamma):
        return cls("strongly_starlike", gamma)

    @classmethod
    def parabolic(cls):
        return cls("parabolic")

    @classmethod
    def lemniscate(cls):
        return cls("lemniscate")

    @classmethod
    def parse(cls, text):
        """Parse ``tag`` or ``tag:value``, e.g. ``strip:pi/2``, ``ss:0.5``, ``sl``."""
        tag, _, value = text.strip().partition(":")
        tag = {"ss": "strongly_starlike", "ps": "parabolic", "sl": "lemniscate"}.get(tag, tag)
        if not value:
            return cls(tag)
        return cls(tag, parse_angle(value) if tag == "strip" else float(value))

    def margin(self, w):
        return contains(self, w)

    def __str__(self):
        return self.tag if self.param is None else f"{self.tag}({self.param:.12g})"


_ANGLE = re.compile(r"^\s*([0-9.eE+-]*)\s*\*?\s*pi\s*(?:/\s*([0-9.eE+-]+))?\s*$")


def parse_angle(text):
    """Radians from ``"2.1"``, ``"pi/2"``, ``"2pi/3"``, ``"0.75*pi"`` and the like."""
    m = _ANGLE.match(str(text))
    if m is None:
        try:
            return float(text)
        except ValueError:
            raise InvalidParameter(f"cannot parse angle {text!r}") from None
    coef = m.group(1)
    num = {"": 1.0, "+": 1.0, "-": -1.0}.get(coef)
    if num is None:
        num = float(coef)
    den = float(m.group(2)) if m.group(2) else 1.0
    return num * math.pi / den


def contains(p, w):
    """Signed margin of ``w`` inside region ``p``; positive iff strictly inside.

    ``w`` may be a scalar or an array.  The margins are

    * strip: ``min(Re w - lower, upper - Re w)``
    * starlike(beta): ``Re w - beta``
    * strongly_starlike(gamma): ``pi gamma / 2 - |arg w|``
    * parabolic: ``(2u - 1) - v^2``
    * lemniscate: ``2(u^2 - v^2) - (u^2 + v^2)^2``
    """
    w = np.asarray(w, dtype=np.complex128)
    u, v = w.real, w.imag
    if p.tag == "strip":
        m = strip_bounds(p.param).margin(u)
    elif p.tag == "starlike":
        m = u - p.param
    elif p.tag == "strongly_starlike":
        m = math.pi * p.param / 2 - np.abs(np.angle(w))
    elif p.tag == "parabolic":
        m = (2 * u - 1) - v**2
    else:
        # the lemniscate has a second (left) loop; restrict to Re w > 0
        m = np.where(u > 0, 2 * (u**2 - v**2) - (u**2 + v**2) ** 2, -np.abs(u) - v**2)
    return float(m) if m.ndim == 0 else m


@dataclass(frozen=True)
class MembershipReport:
    predicate: RegionPredicate
    radius_tested: float
    samples: int
    worst_margin: float
    witness: complex

    @property
    def passed(self):
        return self.worst_margin > 0

    def to_dict(self):
        return {
            "predicate": str(self.predicate),
            "r": self.radius_tested,
            "samples": self.samples,
            "worst_margin": self.worst_margin,
            "witness": [self.witness.real, self.witness.imag],
        }


def circle(r, samples):
    return r * np.exp(2j * np.pi * np.arange(samples) / samples)


def _check_r(r):
    if not 0 < r <= R_MAX:
        raise InvalidParameter(f"radius must be in (0, 1 - 1e-9], got {r!r}")


def test_membership(f, p, r, samples=DEFAULT_SAMPLES):
    """Worst margin of ``zf'/f`` inside ``p`` over ``samples`` points of ``|z| = r``."""
    _check_r(r)
    if samples < 8:
        raise InvalidParameter("need at least 8 samples")
    z = circle(r, samples)
    margins = contains(p, evaluate(q_of(f), z))
    k = int(np.argmin(margins))
    return MembershipReport(p, float(r), int(samples), float(margins[k]), complex(z[k]))


test_membership.__test__ = False  # not a pytest test


@dataclass(frozen=True)
class BoundsReport:
    """Sharp bounds at radius ``r`` next to the values actually attained."""

    r: float
    alpha: float
    samples: int
    re_min_bound: float
    re_max_bound: float
    im_bound: float
    re_min_attained: float
    re_max_attained: float
    im_max_attained: float

    def to_dict(self):
        return asdict(self)


def check_sharp_bounds(f, alpha, r, samples=DEFAULT_SAMPLES, slack=BOUND_SLACK):
    """Verify the real-part bracket and imaginary-part bound for ``zf'/f`` on ``|z| = r``.

    Raises :class:`BoundViolation` (with the offending ``z`` as ``witness``)
    if any sample leaves the bounds by more than ``slack``.
    """
    a = validate_alpha(alpha)
    if not 0 < r < 1:
        raise InvalidParameter(f"radius must be in (0, 1), got {r!r}")
    z = circle(r, samples)
    q = evaluate(q_of(f), z)
    b = sharp_bounds(r, a)
    excess = np.maximum.reduce([
        b.re_min - q.real,
        q.real - b.re_max,
        np.abs(q.imag) - b.im_max,
    ])
    k = int(np.argmax(excess))
    if excess[k] > slack:
        raise BoundViolation(
            f"zf'/f = {q[k]:.12g} at z = {z[k]:.12g} leaves the bounds by {excess[k]:.3g}",
            witness=complex(z[k]),
        )
    return BoundsReport(
        r=float(r),
        alpha=a,
        samples=int(samples),
        re_min_bound=b.re_min,
        re_max_bound=b.re_max,
        im_bound=b.im_max,
        re_min_attained=float(q.real.min()),
        re_max_attained=float(q.real.max()),
        im_max_attained=float(np.abs(q.imag).max()),
    )


# -- convolution criterion --------------------------------------------------


def _check_theta(alpha, theta):
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    if np.any(theta <= 0) or np.any(theta >= 2 * math.pi):
        raise ExcludedTheta("theta must lie in (0, 2 pi)")
    if np.any(_excluded_gap(alpha, theta) < 1e-9):
        raise ExcludedTheta("theta - alpha = pi is excluded")
    return theta


def _excluded_gap(alpha, theta):
    # distance of theta - alpha from pi, modulo 2 pi
    return np.abs(np.remainder(theta - alpha, 2 * math.pi) - math.pi)


def theta_grid(alpha, count=360):
    """``count`` midpoint angles in ``(0, 2 pi)``, minus the excluded direction."""
    a = validate_alpha(alpha)
    theta = 2 * math.pi * (np.arange(count) + 0.5) / count
    return theta[_excluded_gap(a, theta) >= 1e-9]


def boundary_value(alpha, theta):
    """``F(e^{i theta})``; ``inf`` where ``theta + alpha`` hits ``pi`` (mod ``2 pi``)."""
    a = validate_alpha(alpha)
    theta = np.asarray(theta, dtype=float)
    num = 1 + np.exp(1j * (theta + a))
    den = 1 + np.exp(1j * (theta - a))
    with np.errstate(divide="ignore", invalid="ignore"):
        val = np.log(num / den) / (2j * math.sin(a))
    val = np.where(np.abs(num) < 1e-15, complex(np.inf, 0), val)
    return complex(val) if val.ndim == 0 else val


def convolution_kernel(alpha, theta, order):
    """Series ``z^2/(1-z)^2 - F(e^{i theta}) z/(1-z)`` up to ``z**order``."""
    n = np.arange(order + 1, dtype=float)
    c = (n - 1) - boundary_value(alpha, theta)
    c[0] = 0.0
    return TruncatedSeries(c)


def convolution_hadamard_form(f, alpha, theta, z):
    """``(f * kernel)(z)`` with the Hadamard product taken on coefficients."""
    _check_theta(validate_alpha(alpha), theta)
    return evaluate(hadamard(f.series, convolution_kernel(alpha, theta, f.order)), z)


def convolution_direct_form(f, alpha, theta, z):
    """``z f'(z) - (1 + F(e^{i theta})) f(z)`` from pointwise values of ``f`` and ``f'``."""
    _check_theta(validate_alpha(alpha), theta)
    z = np.asarray(z, dtype=np.complex128)
    fz = evaluate(f.series, z)
    dfz = evaluate(derivative(f.series), z)
    return z * dfz - (1 + boundary_value(alpha, theta)) * fz


@dataclass(frozen=True)
class ConvolutionReport:
    min_modulus: float
    theta: float
    z: complex
    thetas: int
    grid_points: int

    def to_dict(self):
        return {
            "min_modulus": self.min_modulus,
            "theta": self.theta,
            "z": [self.z.real, self.z.imag],
            "thetas": self.thetas,
            "grid_points": self.grid_points,
        }


def convolution_criterion(f, alpha, thetas, r, radii=24, angles=180, r_min=0.05):
    """Smallest ``|zf' - (1 + F(e^{i theta})) f|`` over ``thetas`` and a polar grid.

    The grid covers ``r_min <= |z| <= r``; ``z = 0`` is left out because the
    expression vanishes there for every normalized ``f``.  Members give a
    strictly positive minimum.
    """
    a = validate_alpha(alpha)
    thetas = _check_theta(a, thetas)
    if not r_min < r < 1:
        raise InvalidParameter(f"radius must be in ({r_min}, 1), got {r!r}")
    rho = np.linspace(r_min, r, radii)
    phi = 2 * math.pi * np.arange(angles) / angles
    z = (rho[:, None] * np.exp(1j * phi)[None, :]).ravel()
    fz = evaluate(f.series, z)
    zdf = z * evaluate(derivative(f.series), z)
    shift = 1 + boundary_value(a, thetas)
    best = (math.inf, float(thetas[0]), 0j)
    for th, c in zip(thetas, np.atleast_1d(shift)):
        if not np.isfinite(c):
            continue
        mod = np.abs(zdf - c * fz)
        k = int(np.argmin(mod))
        if mod[k] < best[0]:
            best = (float(mod[k]), float(th), complex(z[k]))
    return ConvolutionReport(best[0], best[1], best[2], int(len(thetas)), int(z.size))


# -- sufficient condition -----------------------------------------------------


@dataclass(frozen=True)
class SufficientConditionReport:
    r: float
    samples: int
    hypothesis_margin: float
    hypothesis_holds: bool
    conclusion_margin: float  # None when the hypothesis fails
    screening: str = "strip real-part bounds on 1 + zf''/f'"

    @property
    def implication_ok(self):
        return (not self.hypothesis_holds) or self.conclusion_margin > 0

    def to_dict(self):
        return dict(asdict(self), implication_ok=self.implication_ok)


def sufficient_condition_check(f, alpha, r, samples=DEFAULT_SAMPLES):
    """Screen ``1 + zf''/f'`` against the strip; if it passes, test ``zf'/f`` too.

    Subordination of ``1 + zf''/f'`` to ``1 + F`` is screened through the real
    part bounds of the strip.  Raises :class:`DerivativeVanishes` if
    ``|f'| < 1e-9`` at a sample.
    """
    a = validate_alpha(alpha)
    _check_r(r)
    z = circle(r, samples)
    d1 = derivative(f.series)
    fp = evaluate(d1, z)
    if np.min(np.abs(fp)) < 1e-9:
        raise DerivativeVanishes(f"f' vanishes near z = {z[int(np.argmin(np.abs(fp)))]:.6g}")
    p = 1 + z * evaluate(derivative(d1), z) / fp
    strip = RegionPredicate.strip(a)
    h = float(np.min(contains(strip, p)))
    conclusion = test_membership(f, strip, r, samples).worst_margin if h > 0 else None
    return SufficientConditionReport(float(r), int(samples), h, h > 0, conclusion)
