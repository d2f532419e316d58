"""
Constructing members of the class.

Every member is ``f(z) = z exp( int_0^z F(w(t))/t dt )`` for a Schwarz
function ``w``, with ``F`` the strip map from :mod:`strip_kernel`; then
``zf'/f = 1 + F(w(z))``.  The choice ``w(z) = z`` gives the extremal member.
Everything is done on truncated series, so the construction is exact up to
the working order.
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import InvalidParameter, NonzeroConstantTerm
from .powerseries import (
    DEFAULT_ORDER,
    TruncatedSeries,
    compose,
    derivative,
    div,
    evaluate,
    exp_series,
    shift_down,
    shift_up,
)
from .strip_kernel import mapping_coefficient, mapping_series, validate_alpha

SCHWARZ_RADIUS = 1 - 1e-6
SCHWARZ_SAMPLES = 2048


@dataclass(frozen=True, eq=False)
class NormalizedFunction:
    """``f(z) = z + a_2 z^2 + ...`` held as a truncated series.

    The constant term must be exactly 0 and the linear term exactly 1.
    """

    series: TruncatedSeries

    def __post_init__(self):
        c = self.series.coeffs
        if self.series.order < 1 or c[0] != 0 or c[1] != 1:
            raise InvalidParameter("a normalized function needs f(0) = 0 and f'(0) = 1 exactly")

    @classmethod
    def from_coefficients(cls, a):
        """Build from ``a_2, a_3, ...`` (``a_1 = 1`` is implied)."""
        return cls(TruncatedSeries(np.concatenate(([0.0, 1.0], np.asarray(a, dtype=complex)))))

    @property
    def order(self):
        return self.series.order

    @property
    def coefficients(self):
        """``a_1, ..., a_N`` as a complex array."""
        return self.series.coeffs[1:]

    def __call__(self, z):
        return evaluate(self.series, z)

    def to_dict(self):
        return {"kind": "normalized", **self.series.to_dict()}

    @classmethod
    def from_dict(cls, data):
        kind = data.get("kind", "normalized")
        if kind != "normalized":
            raise ValueError(f"expected a normalized function record, got kind={kind!r}")
        return cls(TruncatedSeries.from_dict(data))


def _sample_bound(coeffs):
    z = SCHWARZ_RADIUS * np.exp(2j * np.pi * np.arange(SCHWARZ_SAMPLES) / SCHWARZ_SAMPLES)
    return float(np.max(np.abs(evaluate(TruncatedSeries(coeffs), z))))


@dataclass(frozen=True, eq=False)
class SchwarzFunction:
    """Polynomial surrogate for a Schwarz function.

    ``w(0) = 0`` is required exactly.  ``certified_bound`` is the largest
    ``|w|`` found at 2048 equally spaced points of ``|z| = 1 - 1e-6``; it
    must be below 1.  This is sampling evidence, not a proof, which is
    adequate for the low-degree polynomials used here.
    """

    series: TruncatedSeries
    certified_bound: float = field(init=False)

    def __post_init__(self):
        if self.series.coeffs[0] != 0:
            raise NonzeroConstantTerm("a Schwarz function must vanish at 0")
        bound = _sample_bound(self.series.coeffs)
        if not bound < 1:
            raise InvalidParameter(f"|w| reaches {bound:.6g} on the sample circle; need < 1")
        object.__setattr__(self, "certified_bound", bound)

    @classmethod
    def identity(cls, order=1):
        return cls(TruncatedSeries.variable(order))

    @classmethod
    def from_coefficients(cls, c):
        """Polynomial ``c[0] z + c[1] z^2 + ...``."""
        return cls(TruncatedSeries(np.concatenate(([0.0], np.asarray(c, dtype=complex)))))

    def series_at(self, order):
        """The polynomial as a series of the given order (zero-extended or cut)."""
        c = np.zeros(order + 1, dtype=np.complex128)
        m = min(order, self.series.order) + 1
        c[:m] = self.series.coeffs[:m]
        return TruncatedSeries(c)


def random_schwarz(rng, max_degree=8, max_bound=0.95, min_bound=0.3):
    """Random polynomial Schwarz function with ``certified_bound`` in ``[min_bound, max_bound)``."""
    degree = int(rng.integers(1, max_degree + 1))
    c = np.zeros(degree + 1, dtype=np.complex128)
    c[1:] = rng.normal(size=degree) + 1j * rng.normal(size=degree)
    target = rng.uniform(min_bound, max_bound)
    c *= target / _sample_bound(c)
    w = SchwarzFunction(TruncatedSeries(c))
    if not w.certified_bound < max_bound:  # pragma: no cover - rounding guard
        return random_schwarz(rng, max_degree, max_bound, min_bound)
    return w


def schwarz_corpus(size=50, seed=0, max_degree=8, max_bound=0.95):
    rng = np.random.default_rng(seed)
    return [random_schwarz(rng, max_degree, max_bound) for _ in range(size)]


def integrate_over_t(g):
    """``int_0^z g(t)/t dt`` for ``g(0) = 0``: coefficient ``n`` divided by ``n``."""
    if g.coeffs[0] != 0:
        raise NonzeroConstantTerm("g(t)/t must be regular at 0")
    c = np.zeros_like(g.coeffs)
    c[1:] = g.coeffs[1:] / np.arange(1, g.order + 1)
    return TruncatedSeries(c)


def _normalized(e):
    """``z * e(z)`` with the normalization imposed bit-exactly."""
    c = shift_up(e).coeffs.copy()
    c[0], c[1] = 0.0, 1.0
    return NormalizedFunction(TruncatedSeries(c))


def extremal(alpha, order=DEFAULT_ORDER):
    """The member generated by ``w(z) = z``: ``z exp(sum_n B_n z^n / n)``."""
    if order < 2:
        raise InvalidParameter("order must be >= 2")
    n = np.arange(1, order)
    c = np.zeros(order, dtype=np.complex128)
    c[1:] = mapping_coefficient(alpha, n) / n
    return _normalized(exp_series(TruncatedSeries(c)))


def from_schwarz(alpha, w, order=DEFAULT_ORDER):
    """Member of the class generated by the Schwarz function ``w``."""
    if order < 2:
        raise InvalidParameter("order must be >= 2")
    validate_alpha(alpha)
    g = compose(mapping_series(alpha, order - 1), w.series_at(order - 1))
    return _normalized(exp_series(integrate_over_t(g)))


def koebe(order=DEFAULT_ORDER):
    """Truncated Koebe function ``z/(1-z)^2 = sum n z^n``; not a member."""
    return NormalizedFunction(TruncatedSeries(np.arange(order + 1, dtype=float)))


def q_of(f):
    """``zf'(z)/f(z)`` as a series of order ``f.order - 1``.

    The factor ``z`` is cancelled from numerator and denominator before
    dividing, so the divisor has constant term exactly 1.
    """
    return div(derivative(f.series), shift_down(f.series))


def coefficient_recursion(A):
    """Coefficients ``a_2..a_N`` of ``f`` from ``zf'/f = 1 + sum A_n z^n``.

    Uses ``(n-1) a_n = A_{n-1} + sum_{k=2}^{n-1} a_k A_{n-k}`` with ``a_1 = 1``.
    ``A`` holds ``A_1..A_{N-1}``.
    """
    A = np.asarray(A, dtype=np.complex128)
    m = A.size
    a = np.zeros(m + 2, dtype=np.complex128)  # a[k] = a_k
    a[1] = 1.0
    for n in range(2, m + 2):
        # sum_{k=1}^{n-1} a_k A_{n-k}, with A_j stored at A[j-1]
        a[n] = np.dot(a[1:n], A[n - 2 :: -1]) / (n - 1)
    return a[2:]
