"""Gamma, Riemann-Liouville fractional integrals, and the t^mu c^t kernel integral.

The fractional integrals are computed after the substitution s = (x-t)^mu
(resp. (t-x)^mu), which absorbs the weak endpoint singularity for mu < 1 and
leaves a bounded integrand:

    J_{a+}^mu f(x) = (1/Gamma(mu+1)) * int_0^{(x-a)^mu} f(x - s^(1/mu)) ds

Quadrature is fixed-order Gauss-Legendre on dyadically subdivided panels;
refinement stops when two successive levels agree within tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """Adaptive quadrature did not reach tolerance within max_subdivisions."""


@dataclass(frozen=True)
class FracParams:
    """One instance of the fractional Ostrowski setting (a, b, x, mu)."""

    a: float
    b: float
    x: float
    mu: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "x", "mu"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.a < 0:
            raise DomainError("a >= 0 required")
        if not self.a < self.b:
            raise DomainError("a < b required")
        if not self.a <= self.x <= self.b:
            raise DomainError("x in [a, b] required")
        if not self.mu > 0:
            raise DomainError("mu > 0 required")


@dataclass(frozen=True)
class QuadConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    # Depth of local bisection; algebraic corners (t^mu, mu ~ 0.1) need
    # geometric grading well past what uniform refinement would suggest.
    max_subdivisions: int = 32
    base_nodes: int = 16

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("tolerances must be positive")
        if self.max_subdivisions < 1 or self.base_nodes < 1:
            raise DomainError("max_subdivisions and base_nodes must be >= 1")


DEFAULT_QUAD = QuadConfig()

# Below this, ln(c) is treated as zero and limit values are returned.
LN_GUARD = 1e-8


def gamma(z: float) -> float:
    """Gamma function for positive real arguments."""
    if not (math.isfinite(z) and z > 0):
        raise DomainError(f"gamma requires finite z > 0, got {z!r}")
    return math.gamma(z)


@lru_cache(maxsize=32)
def _leggauss(n: int):
    return np.polynomial.legendre.leggauss(n)


def _panel_sum(g, lo: float, hi: float, panels: int, nodes: int) -> float:
    ref, w = _leggauss(nodes)
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    pts = mid[:, None] + half[:, None] * ref[None, :]
    vals = np.asarray(g(pts.ravel()), dtype=float).reshape(panels, nodes)
    return float(np.sum(vals * w[None, :] * half[:, None]))


def adaptive_gauss(g, lo: float, hi: float, cfg: QuadConfig = DEFAULT_QUAD) -> float:
    """Integrate g on [lo, hi] with fixed-order Gauss-Legendre panels refined
    by dyadic bisection wherever parent and child estimates disagree.

    Local bisection grades the panels into endpoints where the integrand has
    only algebraic smoothness, which uniform refinement handles poorly.
    g must accept a 1-d numpy array and return values elementwise.
    """
    if hi < lo:
        raise DomainError("integration bounds reversed")
    if hi == lo:
        return 0.0
    n = cfg.base_nodes
    whole = _panel_sum(g, lo, hi, 1, n)
    tol = max(cfg.abs_tol, cfg.rel_tol * abs(whole))
    total = hi - lo
    # Per-panel acceptance floor; keeps algebraic corner panels from chasing
    # an ever-halving target they cannot meet.
    floor = 0.01 * cfg.abs_tol
    # At the depth cap a panel's remaining error is of the order of its own
    # disagreement (each bisection shrinks it geometrically), so tiny
    # disagreements are accepted rather than reported as failure.
    cap_accept = 10.0 * cfg.abs_tol

    def refine(a: float, b: float, est: float, depth: int) -> float:
        mid = 0.5 * (a + b)
        left = _panel_sum(g, a, mid, 1, n)
        right = _panel_sum(g, mid, b, 1, n)
        err = abs(left + right - est)
        if err <= max(tol * (b - a) / total, floor):
            return left + right
        if depth >= cfg.max_subdivisions:
            if err <= cap_accept:
                return left + right
            raise ConvergenceError(
                f"quadrature on [{a}, {b}] not converged at depth "
                f"{cfg.max_subdivisions} (disagreement {err:.3g})"
            )
        return refine(a, mid, left, depth + 1) + refine(mid, b, right, depth + 1)

    return refine(lo, hi, whole, 0)


def _as_callable(f):
    return getattr(f, "f", f)


def rl_lower(f, a: float, x: float, mu: float, cfg: QuadConfig = DEFAULT_QUAD) -> float:
    """Left-sided fractional integral (1/Gamma(mu)) int_a^x (x-t)^(mu-1) f(t) dt."""
    fn = _as_callable(f)
    if not mu > 0:
        raise DomainError("mu > 0 required")
    if not x > a:
        raise DomainError("x > a required")
    upper = (x - a) ** mu
    inv = 1.0 / mu

    def g(s):
        return fn(x - s**inv)

    return adaptive_gauss(g, 0.0, upper, cfg) / gamma(mu + 1.0)


def rl_upper(f, x: float, b: float, mu: float, cfg: QuadConfig = DEFAULT_QUAD) -> float:
    """Right-sided fractional integral (1/Gamma(mu)) int_x^b (t-x)^(mu-1) f(t) dt."""
    fn = _as_callable(f)
    if not mu > 0:
        raise DomainError("mu > 0 required")
    if not b > x:
        raise DomainError("b > x required")
    upper = (b - x) ** mu
    inv = 1.0 / mu

    def g(s):
        return fn(x + s**inv)

    return adaptive_gauss(g, 0.0, upper, cfg) / gamma(mu + 1.0)


@lru_cache(maxsize=16384)
def mexp_integral(c: float, mu: float) -> float:
    """int_0^1 t^mu c^t dt for 0 < c <= 1, mu > 0.

    Uses the exact repeated-integration-by-parts antiderivative when mu is an
    integer, quadrature otherwise.  Near c = 1 the closed forms cancel
    catastrophically, so the limit 1/(mu+1) is returned instead.
    """
    if not (0.0 < c <= 1.0):
        raise DomainError("c in (0, 1] required")
    if not mu > 0:
        raise DomainError("mu > 0 required")
    ln_c = math.log(c)
    if abs(ln_c) < LN_GUARD:
        return 1.0 / (mu + 1.0)
    # The parts recurrence amplifies roundoff by roughly (n/|ln c|)^n, so it
    # is only used where that stays small.
    if float(mu).is_integer() and mu <= 2.0 * abs(ln_c):
        # I_n = c/L - (n/L) I_{n-1}, I_0 = (c-1)/L, L = ln c
        val = (c - 1.0) / ln_c
        for n in range(1, int(mu) + 1):
            val = c / ln_c - (n / ln_c) * val
        return val
    return adaptive_gauss(lambda t: t**mu * c**t, 0.0, 1.0)
