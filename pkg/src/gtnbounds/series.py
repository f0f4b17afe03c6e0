"""Truncated formal power series over complex double-precision coefficients.

A series is a dense coefficient vector ``c[0..N]`` for an explicit truncation
order ``N``.  Binary operations truncate to the smaller of the two orders
(composition chains naturally shrink order), and every operation returns a new
object, so instances behave as immutable values and are safe to share across
threads.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

#: tolerance for the "constant term is exactly 0 / exactly 1" preconditions;
#: inputs are constructed rather than measured, so this is deliberately tight.
UNIT_TOL = 1e-12


class SeriesError(ValueError):
    """Base class for series precondition failures."""


class DivisionByNonUnit(SeriesError):
    """Denominator has (numerically) vanishing constant term."""


class NonzeroConstantTerm(SeriesError):
    """exp() requires a series with zero constant term."""


class ConstantTermNotOne(SeriesError):
    """log() / fractional powers require a unit constant term."""


class InnerConstantNonzero(SeriesError):
    """Composition requires the inner series to vanish at 0."""


class NotInvertible(SeriesError):
    """Compositional inverse needs c0 = 0 and c1 != 0."""


class TruncatedSeries:
    """Coefficients ``coeffs[k]`` of ``z**k`` for ``k = 0..order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex], order: int | None = None):
        c = np.array(coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            raise ValueError("a series needs at least the constant coefficient")
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be non-negative")
            padded = np.zeros(order + 1, dtype=complex)
            keep = min(order + 1, c.size)
            padded[:keep] = c[:keep]
            c = padded
        c.setflags(write=False)
        self._c = c

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __getitem__(self, k: int) -> complex:
        return complex(self._c[k])

    def __len__(self) -> int:
        return self._c.size

    def __repr__(self) -> str:
        return f"TruncatedSeries({np.array2string(self._c, precision=6)})"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, scale(other, -1.0))

    def __neg__(self) -> "TruncatedSeries":
        return scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return div(self, other)


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries([0.0], order=order)


def one(order: int) -> TruncatedSeries:
    return TruncatedSeries([1.0], order=order)


def identity(order: int) -> TruncatedSeries:
    """The series z."""
    return TruncatedSeries([0.0, 1.0], order=order)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(a.coeffs[: n + 1] + b.coeffs[: n + 1])


def scale(a: TruncatedSeries, s: complex) -> TruncatedSeries:
    return TruncatedSeries(a.coeffs * s)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    full = np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])
    return TruncatedSeries(full[: n + 1])


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Long division; requires |b[0]| above the unit tolerance."""
    if abs(b.coeffs[0]) <= UNIT_TOL:
        raise DivisionByNonUnit("denominator constant term is (numerically) zero")
    n = min(a.order, b.order)
    ac = a.coeffs
    bc = b.coeffs
    q = np.zeros(n + 1, dtype=complex)
    b0 = bc[0]
    for k in range(n + 1):
        acc = ac[k]
        if k:
            acc = acc - np.dot(q[:k], bc[k:0:-1])
        q[k] = acc / b0
    return TruncatedSeries(q)


def exp_series(a: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term.

    Uses the first-order recurrence E' = a' E, which is numerically stable
    and costs O(N^2).
    """
    if abs(a.coeffs[0]) > UNIT_TOL:
        raise NonzeroConstantTerm("exp needs a zero constant term")
    n = a.order
    ka = a.coeffs * np.arange(n + 1)
    e = np.zeros(n + 1, dtype=complex)
    e[0] = 1.0
    for m in range(1, n + 1):
        e[m] = np.dot(ka[1 : m + 1], e[m - 1 :: -1]) / m
    return TruncatedSeries(e)


def log_series(a: TruncatedSeries) -> TruncatedSeries:
    """log of a series with unit constant term (principal branch)."""
    if abs(a.coeffs[0] - 1.0) > UNIT_TOL:
        raise ConstantTermNotOne("log needs constant term 1")
    n = a.order
    ac = a.coeffs
    l = np.zeros(n + 1, dtype=complex)
    for m in range(1, n + 1):
        acc = ac[m]
        if m > 1:
            kl = l[1:m] * np.arange(1, m)
            acc = acc - np.dot(kl, ac[m - 1 : 0 : -1]) / m
        l[m] = acc
    return TruncatedSeries(l)


def pow_real(a: TruncatedSeries, e: float) -> TruncatedSeries:
    """a**e for real e via exp(e * log a); needs a unit constant term."""
    if abs(a.coeffs[0] - 1.0) > UNIT_TOL:
        raise ConstantTermNotOne("fractional power needs constant term 1")
    if e == 0:
        return one(a.order)
    return exp_series(scale(log_series(a), e))


def _compose_raw(outer: np.ndarray, inner: np.ndarray, n: int) -> np.ndarray:
    # Horner evaluation of outer at the inner series, truncated at order n.
    # outer[k] for k > n cannot reach order <= n because inner vanishes at 0.
    r = np.zeros(n + 1, dtype=complex)
    top = min(n, outer.size - 1)
    r[0] = outer[top]
    for k in range(top - 1, -1, -1):
        r = np.convolve(r, inner[: n + 1])[: n + 1]
        r[0] += outer[k]
    return r


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(z)); the inner series must vanish at 0."""
    if abs(inner.coeffs[0]) > UNIT_TOL:
        raise InnerConstantNonzero("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    return TruncatedSeries(_compose_raw(outer.coeffs, inner.coeffs, n))


def revert(a: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse: compose(a, revert(a)) = z up to the order.

    Solved order by order: the unknown b[m] enters coefficient m of a(b(z))
    only through the linear term a[1]*b[m].
    """
    if abs(a.coeffs[0]) > UNIT_TOL or abs(a.coeffs[1]) <= UNIT_TOL:
        raise NotInvertible("need c0 = 0 and c1 != 0 for a compositional inverse")
    n = a.order
    ac = a.coeffs
    b = np.zeros(n + 1, dtype=complex)
    b[1] = 1.0 / ac[1]
    for m in range(2, n + 1):
        comp = _compose_raw(ac, b, m)
        b[m] = -comp[m] / ac[1]
    return TruncatedSeries(b)


def derive(a: TruncatedSeries) -> TruncatedSeries:
    """Termwise d/dz; drops the top coefficient (order N -> N-1)."""
    if a.order == 0:
        return zero(0)
    return TruncatedSeries(a.coeffs[1:] * np.arange(1, a.order + 1))


def integrate(a: TruncatedSeries) -> TruncatedSeries:
    """Termwise antiderivative with constant term 0 (order N -> N+1)."""
    out = np.zeros(a.order + 2, dtype=complex)
    out[1:] = a.coeffs / np.arange(1, a.order + 2)
    return TruncatedSeries(out)


def truncate(a: TruncatedSeries, order: int) -> TruncatedSeries:
    return TruncatedSeries(a.coeffs, order=order)


def evaluate(a: TruncatedSeries, z) -> complex | np.ndarray:
    """Evaluate the truncated polynomial at z (scalar or array)."""
    return np.polyval(a.coeffs[::-1], z)


def boundary_max(a: TruncatedSeries, radius: float = 0.99, samples: int = 256) -> float:
    """Max modulus over equispaced samples of the circle |z| = radius."""
    angles = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    return float(np.max(np.abs(evaluate(a, radius * np.exp(1j * angles)))))


def max_coeff_diff(a: TruncatedSeries, b: TruncatedSeries) -> float:
    """Max absolute coefficient difference up to the smaller order."""
    n = min(a.order, b.order)
    return float(np.max(np.abs(a.coeffs[: n + 1] - b.coeffs[: n + 1])))
