"""The irrational sequence ``g_n(z) = G_n(z) / z**(n/2)`` on ``z >= 1/4``.

With ``x = 1/(2 sqrt(z))`` one has ``g_n(z) = U_n(x)``, so all float
evaluation runs the Chebyshev-U three-term recurrence in ``x``, which is
stable on ``[0, 1]``.  The binomial sum is only used in exact arithmetic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Callable

import numpy as np

from .exactseq import _check_n
from .exceptions import DomainError

DIRICHLET_SMALL_ANGLE = 1e-8


class GenFunKind(str, enum.Enum):
    ORDINARY = "ordinary"
    EXPONENTIAL = "exponential"
    LOGARITHMIC = "logarithmic"


def _check_domain(z, strict=False):
    arr = np.asarray(z, dtype=float)
    bad = arr <= 0.25 if strict else arr < 0.25
    if np.any(bad) or np.any(np.isnan(arr)):
        op = ">" if strict else ">="
        raise DomainError(f"z must satisfy z {op} 1/4, got {z!r}")


def _x_of_z(z):
    return 0.5 / np.sqrt(z) if isinstance(z, np.ndarray) else 0.5 / math.sqrt(z)


def _u_with_derivatives(n, x):
    """Return ``U_n(x), U_n'(x), U_n''(x)`` by differentiated recurrences."""
    u_prev, u = 1.0 + 0 * x, 2.0 * x
    d_prev, d = 0.0 * x, 2.0 + 0 * x
    dd_prev, dd = 0.0 * x, 0.0 * x
    if n == 0:
        return u_prev, d_prev, dd_prev
    for _ in range(n - 1):
        u_prev, u, d_prev, d, dd_prev, dd = (
            u,
            2 * x * u - u_prev,
            d,
            2 * u + 2 * x * d - d_prev,
            dd,
            4 * d + 2 * x * dd - dd_prev,
        )
    return u, d, dd


def g_fun_eval(n: int, z):
    """Evaluate ``g_n(z)`` for float ``z >= 1/4`` (scalar or ndarray).

    At ``z = 1/4`` the value is exactly ``n + 1``.
    """
    _check_n(n)
    scalar = np.ndim(z) == 0
    if scalar:
        z = float(z)
    else:
        z = np.asarray(z, dtype=float)
    _check_domain(z)
    x = _x_of_z(z)
    prev, cur = 1.0 + 0 * x, 2.0 * x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def g_even_exact(n: int, z) -> Fraction:
    """Exact ``g_n(z)`` for even ``n`` and nonzero rational ``z``.

    Uses ``g_n(z) = sum_k (-1)**k C(n-k, k) z**(k - n/2)``, a polynomial in
    ``1/z`` with integer coefficients.
    """
    _check_n(n)
    if n % 2:
        raise DomainError("exact evaluation is only available for even n")
    z = Fraction(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    m = n // 2
    w = 1 / z
    acc = Fraction(0)
    # ascending in w = 1/z: coefficient of w**j is (-1)**(m-j) C(m+j, m-j)
    for j in range(m, -1, -1):
        acc = acc * w + (-1) ** (m - j) * comb(m + j, m - j)
    return acc


def g_fun_limit_inf(n: int) -> float:
    """Limit of ``g_n(z)`` as ``z -> +inf``: ``(-1)**(n/2)`` for even ``n``, else 0."""
    _check_n(n)
    if n % 2:
        return 0.0
    return float((-1) ** (n // 2))


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _derivative_exact(n, z: Fraction, order):
    if z < Fraction(1, 4):
        raise DomainError(f"z must satisfy z >= 1/4, got {z}")
    s = _rational_sqrt(z)
    if n % 2 and s is None:
        raise DomainError("odd n needs a rational z with a rational square root")

    def half_power(j):
        # z**(j/2)
        if j % 2 == 0:
            return z ** (j // 2)
        return s**j

    acc = Fraction(0)
    for k in range(n // 2 + 1):
        c = (-1) ** k * comb(n - k, k)
        e = Fraction(2 * k - n, 2)
        if order == 1:
            acc += c * e * half_power(2 * k - n - 2)
        else:
            acc += c * e * (e - 1) * half_power(2 * k - n - 4)
    return acc


def g_fun_derivative(n: int, z, order: int = 1):
    """First or second derivative of ``g_n`` with respect to ``z``.

    A rational ``z`` (``Fraction`` or ``int``) is differentiated termwise in
    exact arithmetic; at ``z = 1/4`` the first derivative is
    ``-2/3 n (n+1) (n+2)``.  Float ``z`` uses the chain rule through
    ``x = 1/(2 sqrt(z))`` and the differentiated U recurrence.
    """
    _check_n(n)
    if order not in (1, 2):
        raise DomainError(f"order must be 1 or 2, got {order!r}")
    if isinstance(z, Rational) and not isinstance(z, bool):
        return _derivative_exact(n, Fraction(z), order)
    scalar = np.ndim(z) == 0
    z = float(z) if scalar else np.asarray(z, dtype=float)
    _check_domain(z)
    x = _x_of_z(z)
    _, du, ddu = _u_with_derivatives(n, x)
    dx = -0.25 * z**-1.5
    if order == 1:
        return du * dx
    ddx = 0.375 * z**-2.5
    return ddu * dx * dx + du * ddx


def dirichlet_kernel(n: int, theta: float) -> float:
    """``sin((n + 1/2) theta) / sin(theta / 2)``, with limit ``2n + 1`` near 0."""
    _check_n(n)
    if abs(theta) < DIRICHLET_SMALL_ANGLE:
        return float(2 * n + 1)
    return math.sin((n + 0.5) * theta) / math.sin(0.5 * theta)


def _check_genfun_args(kind, z, t):
    kind = GenFunKind(kind)
    _check_domain(z)
    if kind is not GenFunKind.EXPONENTIAL and not abs(t) < 1:
        raise DomainError(f"{kind.value} generating function needs |t| < 1, got {t!r}")
    return kind


def generating_function(kind, z: float, t: float) -> float:
    """Closed form of ``sum g_n t**n``, ``sum g_n t**n/n!`` or ``sum_{n>=1} g_n t**n/n``.

    The logarithmic series is the integral of the ordinary one from 0, so its
    value at ``t = 0`` is 0 for every ``z``.  At ``z = 1/4`` the exponential
    series sums to ``(t + 1) e**t`` and the logarithmic one to
    ``t/(1-t) - log(1-t)``.
    """
    kind = _check_genfun_args(kind, z, t)
    z = float(z)
    rz = math.sqrt(z)
    if kind is GenFunKind.ORDINARY:
        return 1.0 / (1.0 - t / rz + t * t)
    s = math.sqrt(4.0 * z - 1.0)
    if kind is GenFunKind.EXPONENTIAL:
        if s == 0.0:
            return (t + 1.0) * math.exp(t)
        w = s / (2.0 * rz)
        return math.exp(t / (2.0 * rz)) * (math.cos(t * w) + math.sin(t * w) / s)
    if s == 0.0:
        return t / (1.0 - t) - math.log1p(-t)
    # arctan((2 sqrt(z) t - 1)/s) - arctan(-1/s) folded into one arctan;
    # valid because 2 sqrt(z) > 1 > t.
    return math.atan(t * s / (2.0 * rz - t)) / s - 0.5 * math.log(1.0 - t / rz + t * t)


def generating_function_partial(kind, z: float, t: float, terms: int) -> float:
    """Truncated defining series of :func:`generating_function`.

    ``terms`` counts summands: ``n = 0 .. terms-1`` for the ordinary and
    exponential kinds, ``n = 1 .. terms`` for the logarithmic kind.
    """
    kind = _check_genfun_args(kind, z, t)
    if terms < 1:
        raise DomainError("terms must be >= 1")
    x = _x_of_z(float(z))
    us = [1.0, 2.0 * x]
    while len(us) < terms + 1:
        us.append(2.0 * x * us[-1] - us[-2])
    if kind is GenFunKind.LOGARITHMIC:
        return sum(us[n] * t**n / n for n in range(1, terms + 1))
    if kind is GenFunKind.ORDINARY:
        return sum(us[n] * t**n for n in range(terms))
    total, term = 0.0, 1.0
    for n in range(terms):
        total += us[n] * term
        term *= t / (n + 1)
    return total


@dataclass(frozen=True)
class SLProblem:
    """Self-adjoint form ``(p v')' + (q + lam r) v = 0`` satisfied by ``g_n``.

    ``p(z) = (4z - 1)**1.5``, ``q = 0``, ``r(z) = sqrt(4z - 1) / (4 z**2)`` and
    ``lam = n (n + 2)``.
    """

    n: int
    p: Callable = field(default=lambda z: (4.0 * z - 1.0) ** 1.5, repr=False)
    q: Callable = field(default=lambda z: 0.0, repr=False)
    r: Callable = field(default=lambda z: math.sqrt(4.0 * z - 1.0) / (4.0 * z * z), repr=False)

    @property
    def lam(self) -> int:
        return self.n * (self.n + 2)

    def residual(self, z: float) -> float:
        """``(p g')' + (q + lam r) g`` at ``g = g_n``, expanded as ``p g'' + p' g' + ...``."""
        if not z > 0.25:
            raise DomainError(f"z must satisfy z > 1/4, got {z!r}")
        dp = 6.0 * math.sqrt(4.0 * z - 1.0)
        g = g_fun_eval(self.n, z)
        d1 = g_fun_derivative(self.n, z, 1)
        d2 = g_fun_derivative(self.n, z, 2)
        return self.p(z) * d2 + dp * d1 + (self.q(z) + self.lam * self.r(z)) * g


def sl_residual(n: int, z: float) -> float:
    """``(16z^3 - 4z^2) g_n'' + 24 z^2 g_n' + n(n+2) g_n`` using analytic derivatives."""
    _check_n(n)
    if not float(z) > 0.25:
        raise DomainError(f"z must satisfy z > 1/4, got {z!r}")
    z = float(z)
    g = g_fun_eval(n, z)
    d1 = g_fun_derivative(n, z, 1)
    d2 = g_fun_derivative(n, z, 2)
    return (16.0 * z**3 - 4.0 * z * z) * d2 + 24.0 * z * z * d1 + n * (n + 2) * g
