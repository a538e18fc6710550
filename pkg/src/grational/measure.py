"""The probability measure on ``Z = [1/4, inf)`` and quadrature against it.

The measure has density ``sqrt(4z - 1) / (2 pi z**2)``.  Under
``x = 1/(2 sqrt(z))`` (equivalently ``x = cos(theta)`` with
``theta = arctan(sqrt(4z - 1))``) it becomes ``(4/pi) sqrt(1 - x**2) dx`` on
``(0, 1)``, and every ``g_n`` pulls back to the polynomial ``U_n(x)``.

:func:`build_quadrature` returns the N-point Gauss rule for that half-range
weight, so integrals of products ``g_m g_n`` with ``m + n <= 2N - 1`` are
exact up to rounding, for odd and even indices alike.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable

import mpmath
import numpy as np

from .exceptions import DomainError, EvaluationError

INF = math.inf


@dataclass(frozen=True)
class DomainPoint:
    """A point of ``[1/4, inf]``; ``DomainPoint(INF)`` stands for ``+inf``."""

    z: float

    def __post_init__(self):
        if not (self.z >= 0.25):
            raise DomainError(f"domain point must satisfy z >= 1/4, got {self.z!r}")

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.z)

    def theta(self) -> float:
        return math.pi / 2 if self.is_infinite else theta_of_z(self.z)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes in ``z`` and positive weights summing to one.

    Nodes are sorted increasingly in ``z``.  ``x_nodes`` holds the matching
    points ``1/(2 sqrt(z))`` in ``(0, 1)``.
    """

    order: int
    nodes: np.ndarray
    weights: np.ndarray
    x_nodes: np.ndarray

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(zip(self.nodes, self.weights))


def theta_of_z(z: float) -> float:
    """``arctan(sqrt(4z - 1))``, mapping ``[1/4, inf)`` onto ``[0, pi/2)``."""
    if not z >= 0.25:
        raise DomainError(f"theta_of_z requires z >= 1/4, got {z!r}")
    return math.atan(math.sqrt(4.0 * z - 1.0))


def z_of_theta(theta: float) -> float:
    """Inverse of :func:`theta_of_z`: ``1 / (4 cos(theta)**2)``."""
    if not 0.0 <= theta < math.pi / 2:
        raise DomainError(f"z_of_theta requires theta in [0, pi/2), got {theta!r}")
    c = math.cos(theta)
    return 1.0 / (4.0 * c * c)


def weight_density(z):
    """Density ``sqrt(4z - 1) / (2 pi z**2)`` of the measure, for ``z > 1/4``."""
    arr = np.asarray(z, dtype=float)
    if np.any(~(arr > 0.25)):
        raise DomainError(f"weight_density requires z > 1/4, got {z!r}")
    out = np.sqrt(4.0 * arr - 1.0) / (2.0 * math.pi * arr * arr)
    return float(out) if out.ndim == 0 else out


def _recurrence_coefficients(n):
    """Jacobi-matrix coefficients for ``(4/pi) sqrt(1 - x**2)`` on ``[0, 1]``.

    Runs the Chebyshev moment algorithm in multiprecision; power moments are
    badly conditioned, so the working precision grows with ``n``.
    """
    dps = 40 + int(1.7 * n)
    with mpmath.workdps(dps):
        scale = 4 / mpmath.pi
        moments = [scale * mpmath.beta(mpmath.mpf(k + 1) / 2, mpmath.mpf(3) / 2) / 2 for k in range(2 * n)]
        alpha = [mpmath.mpf(0)] * n
        beta = [mpmath.mpf(0)] * n
        alpha[0] = moments[1] / moments[0]
        beta[0] = moments[0]
        sig_prev = [mpmath.mpf(0)] * (2 * n)
        sig = list(moments)
        for k in range(1, n):
            sig_new = [mpmath.mpf(0)] * (2 * n)
            for ell in range(k, 2 * n - k):
                sig_new[ell] = sig[ell + 1] - alpha[k - 1] * sig[ell] - beta[k - 1] * sig_prev[ell]
            alpha[k] = sig_new[k + 1] / sig_new[k] - sig[k] / sig[k - 1]
            beta[k] = sig_new[k] / sig[k - 1]
            sig_prev, sig = sig, sig_new
        return [float(a) for a in alpha], [float(b) for b in beta]


@functools.lru_cache(maxsize=32)
def build_quadrature(N: int) -> QuadratureRule:
    """N-point Gauss rule for the measure, returned in ``z`` coordinates.

    Exact (to rounding) for every integrand whose pullback
    ``f(1/(4 x**2))`` is a polynomial in ``x`` of degree at most ``2N - 1``.
    Neither endpoint (``z = 1/4`` or ``z = inf``) is ever a node.
    """
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise DomainError(f"quadrature order must be a positive integer, got {N!r}")
    alpha, beta = _recurrence_coefficients(N)
    jac = np.diag(alpha)
    off = np.sqrt(beta[1:])
    jac += np.diag(off, 1) + np.diag(off, -1)
    x, vecs = np.linalg.eigh(jac)
    w = beta[0] * vecs[0, :] ** 2
    order = np.argsort(-x)  # decreasing x == increasing z
    x, w = x[order], w[order]
    z = 1.0 / (4.0 * x * x)
    for arr in (x, z, w):
        arr.setflags(write=False)
    return QuadratureRule(N, z, w, x)


def _evaluate(f: Callable, rule: QuadratureRule) -> np.ndarray:
    try:
        values = f(rule.nodes)
    except (TypeError, ValueError):
        values = [f(float(z)) for z in rule.nodes]
    values = np.broadcast_to(np.asarray(values, dtype=float), rule.nodes.shape)
    bad = ~np.isfinite(values)
    if np.any(bad):
        k = int(np.argmax(bad))
        node = float(rule.nodes[k])
        raise EvaluationError(f"integrand is not finite at node z={node!r} (index {k})", node=node)
    return values


def integrate(f: Callable, rule: QuadratureRule) -> float:
    """Integrate ``f`` against the measure with ``rule``.

    ``f`` is called once with the node array; callables that only accept
    scalars are evaluated node by node instead.
    """
    return float(np.dot(rule.weights, _evaluate(f, rule)))
