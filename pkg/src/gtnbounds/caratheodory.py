"""Exact parametrization of the first two Caratheodory coefficients and
brute-force suprema of functionals over that body.

For p(z) = 1 + c1 z + c2 z^2 + ... with positive real part on the unit disk,
the admissible pairs are exactly

    |c1| <= 2   and   |c2 - c1^2/2| <= 2 - |c1|^2/2,

so (c1, c2) = (2 rho e^{i alpha},  c1^2/2 + (2 - |c1|^2/2) tau e^{i beta})
with rho, tau in [0, 1] covers the body exactly and saturates the boundary.
All four classical sharp bounds used downstream are attained on that boundary,
so grid search with endpoints included approaches them from below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np


class ParameterOutOfRange(ValueError):
    """Sampler parameters rho, tau must lie in [0, 1]."""


@dataclass(frozen=True)
class CaratheodoryPoint:
    c1: complex
    c2: complex

    def is_admissible(self, tol: float = 1e-12) -> bool:
        return (
            abs(self.c1) <= 2.0 + tol
            and abs(self.c2 - self.c1**2 / 2.0) <= 2.0 - abs(self.c1) ** 2 / 2.0 + tol
        )


@dataclass(frozen=True)
class GridSpec:
    """Steps per sampler parameter (rho, alpha, tau, beta)."""

    rho_steps: int = 60
    alpha_steps: int = 60
    tau_steps: int = 60
    beta_steps: int = 60

    def __post_init__(self):
        for name in ("rho_steps", "alpha_steps", "tau_steps", "beta_steps"):
            if getattr(self, name) < 2:
                raise ValueError(f"{name} must be >= 2")

    @classmethod
    def uniform(cls, n: int) -> "GridSpec":
        return cls(n, n, n, n)


def sample_point(rho: float, alpha: float, tau: float, beta: float) -> CaratheodoryPoint:
    """Admissible point from sampler parameters; saturates the body boundary
    at rho = 1 or tau = 1."""
    if not (0.0 <= rho <= 1.0 and 0.0 <= tau <= 1.0):
        raise ParameterOutOfRange("rho and tau must lie in [0, 1]")
    c1 = 2.0 * rho * np.exp(1j * alpha)
    c2 = c1**2 / 2.0 + (2.0 - abs(c1) ** 2 / 2.0) * tau * np.exp(1j * beta)
    return CaratheodoryPoint(complex(c1), complex(c2))


def lemma1_bound(v: float) -> float:
    """Sharp bound for |c2 - v c1^2| with real v: piecewise linear in v."""
    if v <= 0.0:
        return 2.0 - 4.0 * v
    if v <= 1.0:
        return 2.0
    return 4.0 * v - 2.0


def lemma3_bound(v: complex) -> float:
    """Sharp bound for |c2 - v c1^2| with complex v: 2*max(1, |2v - 1|)."""
    return 2.0 * max(1.0, abs(2.0 * v - 1.0))


def lemma4_bound(hbar: complex) -> float:
    """Sharp bound for |c2 - hbar*c1^2/2|: max(2, 2|hbar - 1|)."""
    return max(2.0, 2.0 * abs(hbar - 1.0))


Functional = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _axes(grid: GridSpec):
    rho = np.linspace(0.0, 1.0, grid.rho_steps)
    alpha = np.linspace(0.0, 2.0 * np.pi, grid.alpha_steps, endpoint=False)
    tau = np.linspace(0.0, 1.0, grid.tau_steps)
    beta = np.linspace(0.0, 2.0 * np.pi, grid.beta_steps, endpoint=False)
    return rho, alpha, tau, beta


def brute_force_sup(
    functional: Functional,
    grid: GridSpec = GridSpec(),
    refine: bool = False,
) -> Tuple[float, CaratheodoryPoint]:
    """Maximum of the functional over the sampled body with its argmax.

    ``functional`` must accept numpy arrays of c1 and c2 (broadcast together)
    and return real values elementwise.  The scan order is lexicographic in
    (rho, alpha, tau, beta) with strict improvement, so ties break toward the
    smallest parameter tuple and the result does not depend on chunking.

    ``refine=True`` runs a few deterministic golden-section passes around the
    grid argmax; off by default so results are reproducible grid evaluations.
    """
    rho, alpha, tau, beta = _axes(grid)
    phase_b = np.exp(1j * beta)
    best = -np.inf
    best_params = (0.0, 0.0, 0.0, 0.0)
    for r in rho:
        c1_row = 2.0 * r * np.exp(1j * alpha)  # (A,)
        radius = 2.0 - np.abs(c1_row) ** 2 / 2.0
        c1 = c1_row[:, None, None]
        c2 = c1**2 / 2.0 + radius[:, None, None] * tau[None, :, None] * phase_b[None, None, :]
        vals = np.asarray(functional(c1, c2), dtype=float)
        vals = np.broadcast_to(vals, c2.shape)
        idx = int(np.argmax(vals))
        m = float(vals.flat[idx])
        if m > best:
            ia, it, ib = np.unravel_index(idx, c2.shape)
            best = m
            best_params = (float(r), float(alpha[ia]), float(tau[it]), float(beta[ib]))
    if refine:
        best, best_params = _golden_refine(functional, best, best_params, grid)
    p = sample_point(*best_params)
    return best, p


_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def _golden_refine(functional, best, params, grid, passes: int = 3, iters: int = 24):
    spans = (
        1.0 / (grid.rho_steps - 1),
        2.0 * np.pi / grid.alpha_steps,
        1.0 / (grid.tau_steps - 1),
        2.0 * np.pi / grid.beta_steps,
    )
    lims = ((0.0, 1.0), (-np.inf, np.inf), (0.0, 1.0), (-np.inf, np.inf))

    def value(p):
        pt = sample_point(p[0], p[1], min(max(p[2], 0.0), 1.0), p[3])
        return float(functional(np.asarray(pt.c1), np.asarray(pt.c2)))

    p = list(params)
    for _ in range(passes):
        for axis in range(4):
            lo = max(lims[axis][0], p[axis] - spans[axis])
            hi = min(lims[axis][1], p[axis] + spans[axis])
            a, b = lo, hi
            for _ in range(iters):
                x1 = b - _INVPHI * (b - a)
                x2 = a + _INVPHI * (b - a)
                q1, q2 = list(p), list(p)
                q1[axis], q2[axis] = x1, x2
                if value(q1) >= value(q2):
                    b = x2
                else:
                    a = x1
            cand = list(p)
            cand[axis] = (a + b) / 2.0
            if value(cand) > best:
                best = value(cand)
                p = cand
    return best, tuple(p)
