"""Mixed Bazilevic-type class functional, membership machinery, and the
independent coefficient-relation oracle.

For a normalized analytic f(z) = z + a2 z^2 + ... the class functional is

    W(f) = [ zf'/(f^{1-k} z^k) + zf''/f' + (k-1)(zf'/f - 1) ]^t
           * [ zf'/(f^{1-k} z^k) ]^{1-t}

with exponents t = vartheta and weight k = kappa; membership in the class
means W(f) is subordinate to exp(z + varkappa*z^2/2).  Both bracket bases
have constant term 1 for normalized f, so the fractional powers use the
principal branch.

Writing W(f) = 1 + b1 z + b2 z^2 + ..., the grading a_n -> t^{n-1} a_n forces

    b1 = A2 * a2          b2 = A3 * a3 + Aq * a2^2

for constants depending only on (vartheta, kappa).  ``derive_relation``
recovers (A2, A3, Aq) numerically from small perturbations of f = z; those
oracle constants are exact up to rounding because the dependence is exactly
linear/quadratic.  ``printed_relation`` returns the two printed variants of the
same constants, which do not always agree with the oracle (measuring that gap
is the point of this package).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gtnbounds import series as ps
from gtnbounds.series import TruncatedSeries
from gtnbounds.telephone import x_series


class NotNormalized(ValueError):
    """f must satisfy f(0) = 0 and f'(0) = 1."""


class PowerBranchFailure(ValueError):
    """A bracket base drifted away from constant term 1."""


class NotSchwarz(ValueError):
    """The driving series must vanish at 0 and stay inside the unit disk."""


class SolveSingular(ValueError):
    """The linear coefficient on the next unknown vanished."""


class WitnessUndefined(ValueError):
    """The witness recursion produced non-finite values."""


class FitUnstable(ValueError):
    """Relation estimates at the two step sizes disagree."""


@dataclass(frozen=True)
class ClassParams:
    """Class parameters (vartheta, kappa) plus the subordination weight
    varkappa; the derived constants are recomputed on access."""

    vartheta: float
    kappa: float
    varkappa: float

    def __post_init__(self):
        if self.vartheta < 0 or self.kappa < 0 or self.varkappa < 0:
            raise ValueError("vartheta, kappa and varkappa must all be >= 0")

    @property
    def M(self) -> float:
        t = self.vartheta
        return t * t - t + 1.0

    @property
    def S(self) -> float:
        t = self.vartheta
        return 2.0 * t * t - 4.0 * t + 1.0

    @property
    def Q(self) -> float:
        t = self.vartheta
        return t * t - 7.0 * t - 2.0

    @property
    def msq(self) -> float:
        """The quadratic combination M*kappa^2 + S*kappa + Q."""
        k = self.kappa
        return self.M * k * k + self.S * k + self.Q

    @property
    def W(self) -> float:
        return (1.0 + self.vartheta) * (1.0 + self.kappa)

    @property
    def L(self) -> float:
        return (1.0 + 2.0 * self.vartheta) * (1.0 + 2.0 * self.kappa)


@dataclass(frozen=True)
class CoefficientRelation:
    """b1 = linear_a2 * a2 and b2 = linear_a3 * a3 + quad_a2 * a2^2."""

    linear_a2: float
    linear_a3: float
    quad_a2: float

    def __post_init__(self):
        if self.linear_a2 <= 0 or self.linear_a3 <= 0:
            raise ValueError("the linear multipliers must be positive")


def w_functional(f: TruncatedSeries, params: ClassParams) -> TruncatedSeries:
    """Evaluate the class functional as a series of order f.order - 1."""
    if f.order < 3:
        raise NotNormalized("need at least order 3 to form the functional")
    if abs(f.coeffs[0]) > 1e-9 or abs(f.coeffs[1] - 1.0) > 1e-9:
        raise NotNormalized("f must have f(0) = 0 and f'(0) = 1")
    n = f.order - 1
    f_over_z = TruncatedSeries(f.coeffs[1:])              # f/z, constant 1
    fp = ps.derive(f)                                     # f'
    base = ps.mul(fp, ps.pow_real(f_over_z, params.kappa - 1.0))  # zf'/(f^{1-k} z^k)
    u = ps.div(fp, f_over_z)                              # zf'/f
    zfpp = TruncatedSeries(np.concatenate(([0.0], ps.derive(fp).coeffs)))  # z f''
    ratio = ps.div(ps.truncate(zfpp, n), fp)              # zf''/f'
    bracket = ps.add(ps.add(base, ratio), ps.scale(u - ps.one(n), params.kappa - 1.0))
    if abs(base.coeffs[0] - 1.0) > 1e-9 or abs(bracket.coeffs[0] - 1.0) > 1e-9:
        raise PowerBranchFailure("bracket base lost its unit constant term")
    return ps.mul(
        ps.pow_real(bracket, params.vartheta),
        ps.pow_real(base, 1.0 - params.vartheta),
    )


def _b_coeffs(params: ClassParams, extra: np.ndarray, order: int) -> np.ndarray:
    """Coefficients of W(f) for f = z + sum(extra[j] z^(j+2))."""
    c = np.zeros(order + 2, dtype=complex)
    c[1] = 1.0
    c[2 : 2 + extra.size] = extra
    return w_functional(TruncatedSeries(c), params).coeffs


def derive_relation(params: ClassParams, eps: tuple[float, float] = (1e-3, 2e-3)) -> CoefficientRelation:
    """Recover the true (linear_a2, linear_a3, quad_a2) numerically.

    The grading argument makes b1 exactly linear in a2, and b2 exactly
    linear in a3 plus quadratic in a2, so single small-parameter probes are
    exact up to rounding; two step sizes plus Richardson extrapolation guard
    against an implementation that broke that exactness.
    """
    order = 6
    ests = []
    for e in eps:
        w_a2 = _b_coeffs(params, np.array([e, 0.0]), order)
        w_a3 = _b_coeffs(params, np.array([0.0, e]), order)
        ests.append(
            (
                w_a2[1].real / e,
                w_a3[2].real / e,
                w_a2[2].real / (e * e),
            )
        )
    out = []
    for i in range(3):
        e1, e2 = ests[0][i], ests[1][i]
        if abs(e1 - e2) > 1e-6:
            raise FitUnstable(f"relation estimates disagree: {e1} vs {e2}")
        out.append(2.0 * e1 - e2)
    return CoefficientRelation(out[0], out[1], out[2])


def printed_relation(params: ClassParams, variant: str = "expansion") -> CoefficientRelation:
    """The printed coefficient relation, exactly as stated.

    variant="expansion" uses the (1+2t)(2+k) linear multiplier from the displayed
    expansion; variant="statement" uses (1+2t)(1+2k), the constant the bound
    statements divide by.  Both share quad_a2 = M k^2 + S k + Q.
    """
    t, k = params.vartheta, params.kappa
    if variant == "expansion":
        lin3 = (1.0 + 2.0 * t) * (2.0 + k)
    elif variant == "statement":
        lin3 = params.L
    else:
        raise ValueError("variant must be 'expansion' or 'statement'")
    return CoefficientRelation(params.W, lin3, params.msq)


def solve_from_schwarz(w: TruncatedSeries, params: ClassParams, order: int) -> TruncatedSeries:
    """Build f with W(f) = X(w(z)) coefficientwise, order by order.

    Each unknown a_{n+1} enters coefficient n of W(f) affinely, so two
    evaluations per step identify and solve the linear equation.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    if abs(w.coeffs[0]) > 1e-9:
        raise NotSchwarz("w(0) must be 0")
    wmax = ps.boundary_max(w)
    if wmax >= 1.0:
        raise NotSchwarz(f"|w| reaches {wmax:.6f} >= 1 on the sampling circle")
    work = max(order, 3)
    target = ps.compose(x_series(params.varkappa, work - 1), ps.truncate(w, work - 1))
    fc = np.zeros(work + 1, dtype=complex)
    fc[1] = 1.0
    for n in range(1, work):
        fc[n + 1] = 0.0
        w0 = w_functional(TruncatedSeries(fc), params).coeffs[n]
        fc[n + 1] = 1.0
        w1 = w_functional(TruncatedSeries(fc), params).coeffs[n]
        slope = w1 - w0
        if abs(slope) < 1e-10:
            raise SolveSingular(f"no linear response of coefficient {n} to a_{n + 1}")
        fc[n + 1] = (target.coeffs[n] - w0) / slope
    return TruncatedSeries(fc[: order + 1])


def membership_witness(f: TruncatedSeries, params: ClassParams) -> tuple[TruncatedSeries, float]:
    """Recover the driving series w with X(w) = W(f) and report its maximum
    modulus over 256 samples of |z| = 0.99; callers compare that sup-norm
    against 1 to decide membership."""
    g = ps.log_series(w_functional(f, params))
    n = g.order
    vk = params.varkappa
    wc = np.zeros(n + 1, dtype=complex)
    for m in range(1, n + 1):
        acc = g.coeffs[m]
        if m >= 2:
            acc -= (vk / 2.0) * np.dot(wc[1:m], wc[m - 1 : 0 : -1])
        wc[m] = acc
    if not np.all(np.isfinite(wc.view(float))):
        raise WitnessUndefined("witness recursion produced non-finite coefficients")
    witness = TruncatedSeries(wc)
    return witness, ps.boundary_max(witness)
