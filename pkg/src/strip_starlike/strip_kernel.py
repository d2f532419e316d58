"""
Special functions attached to the vertical strip of parameter ``alpha``.

For ``pi/2 <= alpha < pi`` the class is cut out by

    1 + (alpha - pi)/(2 sin alpha) < Re(z f'(z)/f(z)) < 1 + alpha/(2 sin alpha),

and the convex map

    F(z) = log((1 + e^{i alpha} z)/(1 + e^{-i alpha} z)) / (2i sin alpha)
         = sum_{n>=1} (-1)^(n-1) sin(n alpha)/(n sin alpha) z^n

takes the unit disk into the strip shifted by ``-1``.  On ``|z| = r`` the
quotient inside the logarithm ranges over a closed disk whose geometry gives
the sharp bounds used everywhere downstream:

* ``arg_center(r, alpha)``  - argument of that disk's center,
* ``arg_spread(r, alpha)``  - half the angle the disk subtends at the origin,
* ``modulus_bound(r, alpha)`` - the largest modulus on the disk.

Every function here accepts scalars or broadcastable numpy arrays for ``r``
and ``alpha``.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import BranchHazard, InternalConsistencyError, InvalidAlpha, InvalidParameter
from .powerseries import DEFAULT_ORDER, TruncatedSeries, log_series

ALPHA_MIN = np.pi / 2
ALPHA_MAX = np.pi
ALPHA_RTOL = 1e-12
ARCSIN_SLACK = 1e-12
BRANCH_EPS = 1e-12


def validate_alpha(alpha):
    """Return ``alpha`` as float (or float array) after range checking.

    Values within a relative ``1e-12`` below ``pi/2`` are snapped to ``pi/2``;
    anything else outside ``[pi/2, pi)`` raises :class:`InvalidAlpha`.
    """
    a = np.asarray(alpha, dtype=float)
    if not np.all(np.isfinite(a)):
        raise InvalidAlpha(f"alpha must be finite, got {alpha!r}")
    low = ALPHA_MIN * (1 - ALPHA_RTOL)
    if np.any(a < low) or np.any(a >= ALPHA_MAX):
        raise InvalidAlpha(f"alpha must lie in [pi/2, pi), got {alpha!r}")
    a = np.where(a < ALPHA_MIN, ALPHA_MIN, a)
    assert np.all(np.sin(a) > 0)
    return float(a) if a.ndim == 0 else a


def _validate_r(r, upper_open=True, lower_open=False):
    rr = np.asarray(r, dtype=float)
    bad = (rr <= 0) if lower_open else (rr < 0)
    bad = bad | ((rr >= 1) if upper_open else (rr > 1)) | ~np.isfinite(rr)
    if np.any(bad):
        raise InvalidParameter(f"radius out of range: {r!r}")
    return rr


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


@dataclass(frozen=True)
class StripBounds:
    """Open interval ``(lower, upper)`` for ``Re(zf'/f)``."""

    lower: float
    upper: float

    @property
    def width(self):
        return self.upper - self.lower

    def margin(self, x):
        """Signed distance of ``x`` inside the interval (negative = outside)."""
        return np.minimum(np.asarray(x) - self.lower, self.upper - np.asarray(x))


def strip_bounds(alpha):
    a = validate_alpha(alpha)
    s = np.sin(a)
    return StripBounds(lower=_scalar(1 + (a - np.pi) / (2 * s)), upper=_scalar(1 + a / (2 * s)))


def mapping_coefficient(alpha, n):
    """Taylor coefficient ``(-1)^(n-1) sin(n alpha) / (n sin alpha)`` of ``F``."""
    a = validate_alpha(alpha)
    nn = np.asarray(n)
    if np.any(nn < 1):
        raise InvalidParameter("coefficient index must be >= 1")
    sign = np.where(nn % 2 == 1, 1.0, -1.0)
    return _scalar(sign * np.sin(nn * a) / (nn * np.sin(a)))


def mapping_series(alpha, order=DEFAULT_ORDER):
    """Series of ``F`` up to ``z**order`` (zero constant term, real coefficients)."""
    if order < 1:
        raise InvalidParameter("order must be >= 1")
    c = np.zeros(order + 1, dtype=np.complex128)
    c[1:] = mapping_coefficient(alpha, np.arange(1, order + 1))
    return TruncatedSeries(c)


def mapping_series_from_logs(alpha, order=DEFAULT_ORDER):
    """Series of ``F`` built from two series logarithms.

    Independent of :func:`mapping_series`; used as its cross-check.
    """
    a = validate_alpha(alpha)
    z = TruncatedSeries.variable(order)
    up = log_series(1 + np.exp(1j * a) * z)
    down = log_series(1 + np.exp(-1j * a) * z)
    return (up - down) * (1 / (2j * np.sin(a)))


def mapping_point(alpha, z):
    """Evaluate ``F`` at ``z`` (scalar or array) with the principal logarithm.

    The quotient ``(1 + e^{ia} z)/(1 + e^{-ia} z)`` stays off the negative
    real axis for ``|z| < 1``, so no branch tracking is needed.
    """
    a = validate_alpha(alpha)
    zz = np.asarray(z, dtype=np.complex128)
    num = 1 + np.exp(1j * a) * zz
    den = 1 + np.exp(-1j * a) * zz
    if np.any(np.abs(num) < BRANCH_EPS) or np.any(np.abs(den) < BRANCH_EPS):
        raise BranchHazard("z is within 1e-12 of a logarithmic singularity of F")
    w = np.log(num / den) / (2j * np.sin(a))
    return complex(w) if w.ndim == 0 else w


def _root_term(r, a):
    # == abs(1 - r^2 e^{2ia})
    return np.sqrt(1 - 2 * r**2 * np.cos(2 * a) + r**4)


def _safe_arcsin(t):
    t = np.asarray(t, dtype=float)
    excess = np.max(np.abs(t)) - 1.0 if t.size else 0.0
    if excess > ARCSIN_SLACK:
        raise InternalConsistencyError(f"arcsin argument exceeds 1 by {excess:.3g}")
    return np.arcsin(np.clip(t, -1.0, 1.0))


def arg_center(r, alpha):
    """``arcsin(-r^2 sin 2a / sqrt(1 - 2 r^2 cos 2a + r^4))``.

    Nonnegative on the whole parameter range, zero at ``alpha = pi/2``.
    """
    a = validate_alpha(alpha)
    rr = _validate_r(r)
    return _scalar(_safe_arcsin(-(rr**2) * np.sin(2 * a) / _root_term(rr, a)))


def arg_spread(r, alpha):
    """``arcsin(2 r sin a / sqrt(1 - 2 r^2 cos 2a + r^4))``."""
    a = validate_alpha(alpha)
    rr = _validate_r(r)
    return _scalar(_safe_arcsin(2 * rr * np.sin(a) / _root_term(rr, a)))


def modulus_bound(r, alpha):
    """``(sqrt(1 - 2 r^2 cos 2a + r^4) + 2 r sin a) / (1 - r^2)``; always >= 1."""
    a = validate_alpha(alpha)
    rr = _validate_r(r)
    return _scalar((_root_term(rr, a) + 2 * rr * np.sin(a)) / (1 - rr**2))


def modulus_lower_bound(r, alpha):
    """Smallest modulus on the image disk; equals ``1 / modulus_bound``.

    ``(sqrt(D) - 2 r sin a)/(1 - r^2)`` rationalized to ``(1 - r^2)/(sqrt(D) + 2 r sin a)``,
    which avoids the cancellation near ``r = 1``.
    """
    a = validate_alpha(alpha)
    rr = _validate_r(r)
    return _scalar((1 - rr**2) / (_root_term(rr, a) + 2 * rr * np.sin(a)))


@dataclass(frozen=True)
class SharpBounds:
    """Rectangle containing ``zf'/f`` on ``|z| = r`` for every class member."""

    re_min: float
    re_max: float
    im_max: float

    def corners(self):
        return (complex(self.re_min, self.im_max), complex(self.re_max, self.im_max))


def sharp_bounds(r, alpha):
    """Real-part bracket and imaginary-part bound for ``zf'/f`` on ``|z| = r``."""
    a = validate_alpha(alpha)
    s2 = 2 * np.sin(a)
    c = arg_center(r, a)
    d = arg_spread(r, a)
    return SharpBounds(
        re_min=_scalar(1 + (c - d) / s2),
        re_max=_scalar(1 + (c + d) / s2),
        im_max=_scalar(np.log(modulus_bound(r, a)) / s2),
    )


@dataclass(frozen=True)
class ImageDisk:
    center: complex
    radius: float

    @property
    def power_of_origin(self):
        """``|center|^2 - radius^2``; identically 1 for these disks."""
        return abs(self.center) ** 2 - self.radius**2


def image_disk(r, alpha):
    """Image of ``|z| <= r`` under ``(1 + e^{ia} w)/(1 + e^{-ia} w)``, ``|w| <= |z|``."""
    a = validate_alpha(alpha)
    rr = float(_validate_r(r, lower_open=True))
    q = 1 - rr**2
    center = complex((1 - rr**2 * np.cos(2 * a)) / q, -(rr**2) * np.sin(2 * a) / q)
    return ImageDisk(center=center, radius=float(2 * rr * np.sin(a) / q))


def limits_check(alpha, eps=1e-8):
    """Evaluate the bound functions next to ``r = 0`` and ``r = 1``.

    Returns ``{name: {"r": r, "value": v, "expected": e}}``; ``expected`` is
    the published limit, with ``inf`` for the divergent one.
    """
    a = validate_alpha(alpha)
    lo, hi = eps, 1 - eps
    return {
        "arg_center_at_0": {"r": lo, "value": arg_center(lo, a), "expected": 0.0},
        "arg_spread_at_0": {"r": lo, "value": arg_spread(lo, a), "expected": 0.0},
        "modulus_bound_at_0": {"r": lo, "value": modulus_bound(lo, a), "expected": 1.0},
        "arg_center_at_1": {"r": hi, "value": arg_center(hi, a), "expected": 1.5 * np.pi - a},
        "arg_spread_at_1": {"r": hi, "value": arg_spread(hi, a), "expected": np.pi / 2},
        "modulus_bound_at_1": {"r": hi, "value": modulus_bound(hi, a), "expected": float("inf")},
    }
