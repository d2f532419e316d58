"""
Truncated complex Taylor series.

A :class:`TruncatedSeries` of order ``N`` holds the coefficients
``c[0], ..., c[N]`` of a function analytic at the origin.  Coefficients past
``N`` are *unknown*, not zero, so binary operations truncate to the smaller of
the two orders and nothing is ever padded.

    >>> z = TruncatedSeries.variable(6)
    >>> log_series(1 + z).coeffs.real.round(4)
    array([ 0.    ,  1.    , -0.5   ,  0.3333, -0.25  ,  0.2   , -0.1667])

All arithmetic is exact up to the truncation order (apart from float
rounding).  Values are immutable; every function here is pure.
"""

import json
from dataclasses import dataclass

import numpy as np

from .exceptions import DivisionByNonUnit, NonzeroConstantTerm, NonzeroInnerConstant

__all__ = [
    "DEFAULT_ORDER",
    "EPS_DIV",
    "TruncatedSeries",
    "add",
    "sub",
    "mul",
    "div",
    "exp_series",
    "log_series",
    "derivative",
    "integrate",
    "evaluate",
    "compose",
    "hadamard",
    "shift_down",
    "shift_up",
    "truncate",
]

DEFAULT_ORDER = 64
EPS_DIV = 1e-300


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Degree-``order`` complex Taylor polynomial ``sum(c[n] z**n)``.

    Parameters
    ----------
    coeffs : array_like
        Coefficients ``c_0 .. c_N``.  Copied, cast to ``complex128`` and
        frozen.  Must be non-empty and finite.
    """

    coeffs: np.ndarray

    # numpy scalars must defer to the reflected operators below
    __array_ufunc__ = None

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128, copy=True).reshape(-1)
        if c.size == 0:
            raise ValueError("a series needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self):
        return self.coeffs.size - 1

    @classmethod
    def constant(cls, value, order=DEFAULT_ORDER):
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls.constant(0.0, order)

    @classmethod
    def one(cls, order=DEFAULT_ORDER):
        return cls.constant(1.0, order)

    @classmethod
    def variable(cls, order=DEFAULT_ORDER):
        """The series ``z`` of the given order (``order >= 1``)."""
        if order < 1:
            raise ValueError("the variable z needs order >= 1")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.coeffs.size

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs!r})"

    def __call__(self, z):
        return evaluate(self, z)

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return add(self, other)
        c = self.coeffs.copy()
        c[0] += other
        return TruncatedSeries(c)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return div(self, other)
        return TruncatedSeries(self.coeffs / other)

    def allclose(self, other, rtol=1e-12, atol=0.0):
        """Coefficient-wise comparison over the common order."""
        n = min(self.order, other.order) + 1
        return np.allclose(self.coeffs[:n], other.coeffs[:n], rtol=rtol, atol=atol)

    def to_dict(self):
        return {
            "order": self.order,
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data):
        """Inverse of :meth:`to_dict`; checks ``order`` against the length."""
        try:
            pairs = data["coeffs"]
            order = int(data["order"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed series record: {exc}") from None
        if len(pairs) != order + 1:
            raise ValueError(
                f"series record has order {order} but {len(pairs)} coefficients"
            )
        c = []
        for p in pairs:
            if isinstance(p, (int, float)):
                c.append(complex(p))
            elif len(p) == 2:
                c.append(complex(float(p[0]), float(p[1])))
            else:
                raise ValueError(f"coefficient {p!r} is not [re, im]")
        return cls(c)

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _common(a, b):
    n = min(a.order, b.order) + 1
    return a.coeffs[:n], b.coeffs[:n]


def truncate(a, order):
    if order > a.order:
        raise ValueError(f"cannot raise order {a.order} to {order} by truncation")
    return TruncatedSeries(a.coeffs[: order + 1])


def add(a, b):
    x, y = _common(a, b)
    return TruncatedSeries(x + y)


def sub(a, b):
    x, y = _common(a, b)
    return TruncatedSeries(x - y)


def _trimmed(c):
    nz = np.flatnonzero(c)
    return c[: nz[-1] + 1] if nz.size else c[:1]


def mul(a, b):
    """Cauchy product truncated at the smaller order."""
    x, y = _common(a, b)
    out = np.zeros(x.size, dtype=np.complex128)
    prod = np.convolve(_trimmed(x), _trimmed(y))[: x.size]
    out[: prod.size] = prod
    return TruncatedSeries(out)


def _check_unit(c0, eps):
    if not abs(c0) > eps:
        raise DivisionByNonUnit(
            f"constant term {c0!r} has modulus <= {eps:g}; not invertible"
        )


def div(a, b, eps=EPS_DIV):
    """Series quotient ``a / b`` by forward substitution.

    Requires ``|b[0]| > eps``.  The result ``c`` satisfies ``mul(b, c) == a``
    up to the common order.
    """
    x, y = _common(a, b)
    _check_unit(y[0], eps)
    n = x.size
    c = np.zeros(n, dtype=np.complex128)
    inv0 = 1.0 / y[0]
    c[0] = x[0] * inv0
    for k in range(1, n):
        # sum_{j=1..k} y[j] c[k-j]
        c[k] = (x[k] - np.dot(y[1 : k + 1], c[k - 1 :: -1])) * inv0
    return TruncatedSeries(c)


def exp_series(a):
    """``exp(a)``, from ``E' = a' E`` with ``E(0) = exp(a(0))``."""
    x = a.coeffs
    n = x.size
    ka = np.arange(n) * x  # k * a_k
    e = np.zeros(n, dtype=np.complex128)
    e[0] = np.exp(x[0])
    for m in range(1, n):
        e[m] = np.dot(ka[1 : m + 1], e[m - 1 :: -1]) / m
    return TruncatedSeries(e)


def log_series(a, eps=EPS_DIV):
    """Principal ``log(a)``, from ``L' = a'/a`` with ``L(0) = Log a(0)``."""
    x = a.coeffs
    _check_unit(x[0], eps)
    n = x.size
    lg = np.zeros(n, dtype=np.complex128)
    lg[0] = np.log(x[0])
    kl = np.zeros(n, dtype=np.complex128)  # k * L_k
    for m in range(1, n):
        # m a_m = sum_{k=1..m} k L_k a_{m-k}
        s = np.dot(kl[1:m], x[m - 1 : 0 : -1]) if m > 1 else 0.0
        kl[m] = (m * x[m] - s) / x[0]
        lg[m] = kl[m] / m
    return TruncatedSeries(lg)


def derivative(a):
    if a.order == 0:
        return TruncatedSeries([0.0])
    return TruncatedSeries(a.coeffs[1:] * np.arange(1, a.order + 1))


def integrate(a):
    """Antiderivative vanishing at 0; its order is ``a.order + 1``.

    Only series with ``a[0] == 0`` are accepted.  Integrals of the form
    ``int_0^z g(t)/t dt`` go through :func:`shift_down` first, or through
    ``integrate_over_t`` in the factory module.
    """
    if a.coeffs[0] != 0:
        raise NonzeroConstantTerm(
            f"integrate() requires a zero constant term, got {a.coeffs[0]!r}"
        )
    c = np.zeros(a.order + 2, dtype=np.complex128)
    c[1:] = a.coeffs / np.arange(1, a.order + 2)
    return TruncatedSeries(c)


def evaluate(a, z):
    """Horner evaluation at a scalar or an array of points.

    Intended for ``|z| <= 1``; nothing stops larger arguments but the
    truncation error then grows quickly.
    """
    c = a.coeffs
    zz = np.asarray(z, dtype=np.complex128)
    acc = np.full(zz.shape, c[-1], dtype=np.complex128)
    for coef in c[-2::-1]:
        acc = acc * zz + coef
    return complex(acc) if acc.ndim == 0 else acc


def compose(outer, inner):
    """``outer(inner(z))`` for ``inner(0) == 0``, by Horner's rule on series."""
    if inner.coeffs[0] != 0:
        raise NonzeroInnerConstant(
            f"compose() requires inner(0) == 0 exactly, got {inner.coeffs[0]!r}"
        )
    n = min(outer.order, inner.order) + 1
    w = _trimmed(inner.coeffs[:n])
    acc = np.zeros(n, dtype=np.complex128)
    for coef in outer.coeffs[n - 1 :: -1]:
        prod = np.convolve(acc, w)[:n]
        acc = np.zeros(n, dtype=np.complex128)
        acc[: prod.size] = prod
        acc[0] += coef
    return TruncatedSeries(acc)


def hadamard(a, b):
    """Coefficient-wise (Hadamard) product ``a * b``."""
    x, y = _common(a, b)
    return TruncatedSeries(x * y)


def shift_down(a):
    """``a(z) / z`` for ``a(0) == 0``; order drops by one."""
    if a.coeffs[0] != 0:
        raise NonzeroConstantTerm("shift_down() requires a(0) == 0")
    if a.order == 0:
        raise ValueError("cannot divide an order-0 series by z")
    return TruncatedSeries(a.coeffs[1:])


def shift_up(a):
    """``z * a(z)``; order rises by one (the new top coefficient is known)."""
    return TruncatedSeries(np.concatenate(([0.0], a.coeffs)))

