"""Fourier analysis in L2 of the measure, with respect to the basis ``{g_2n}``."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .exceptions import DomainError
from .gseq import g_fun_eval
from .measure import QuadratureRule, _evaluate

MEMBERSHIP_CASES = ("shifted_pole", "left_endpoint")


def g_basis(n: int) -> Callable:
    """The function ``z -> g_n(z)`` as a callable accepting arrays."""
    return functools.partial(g_fun_eval, n)


def inv_sqrt(z):
    """``1/sqrt(z)``, which coincides with ``g_1`` on the domain."""
    return 1.0 / np.sqrt(z)


@dataclass(frozen=True)
class FourierExpansion:
    """Coefficients ``c_0 .. c_N`` of ``sum c_n g_2n``."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(float(c) for c in self.coeffs)
        if not all(math.isfinite(c) for c in cs):
            raise ValueError("expansion coefficients must be finite")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncated(self, order: int) -> "FourierExpansion":
        return FourierExpansion(self.coeffs[: order + 1])

    def __call__(self, z):
        return expansion_eval(self, z)


@dataclass(frozen=True)
class MembershipCase:
    """Power function ``(z - z0)**gamma``.

    ``case="shifted_pole"`` needs ``z0 > 1/4``; ``case="left_endpoint"`` fixes
    ``z0 = 1/4``.
    """

    case: str
    gamma: float
    z0: Optional[float] = None


def inner_product(f: Callable, g: Callable, rule: QuadratureRule) -> float:
    """``(f, g)``, the integral of ``f g`` against the measure."""
    return float(np.dot(rule.weights, _evaluate(f, rule) * _evaluate(g, rule)))


def fourier_coefficients(f: Callable, N: int, rule: QuadratureRule) -> FourierExpansion:
    """Coefficients ``(f, g_2n)`` for ``n = 0 .. N``.

    ``f`` is sampled once at the rule nodes.
    """
    if N < 0:
        raise DomainError(f"expansion order must be >= 0, got {N!r}")
    fw = _evaluate(f, rule) * rule.weights
    return FourierExpansion(tuple(float(np.dot(fw, g_fun_eval(2 * n, rule.nodes))) for n in range(N + 1)))


def odd_even_coeff(m: int, n: int) -> float:
    """Closed form of ``(g_{2m+1}, g_{2n})``.

    Equals ``8 (m+1) (-1)**(n+m+1) / (pi (2n - 2m - 1) (2n + 2m + 3))``; both
    factors in the denominator are odd, so it never vanishes.
    """
    if m < 0 or n < 0:
        raise DomainError("m and n must be nonnegative")
    sign = -1 if (n + m + 1) % 2 else 1
    return 8.0 * (m + 1) * sign / (math.pi * (2 * n - 2 * m - 1) * (2 * n + 2 * m + 3))


def odd_expansion(m: int, order: int) -> FourierExpansion:
    """Order-``order`` best approximation of ``g_{2m+1}`` from the closed form."""
    return FourierExpansion(tuple(odd_even_coeff(m, n) for n in range(order + 1)))


def expansion_eval(e: FourierExpansion, z):
    """``sum_n c_n g_2n(z)``, stepping the U recurrence two indices at a time."""
    scalar = np.ndim(z) == 0
    zz = float(z) if scalar else np.asarray(z, dtype=float)
    if np.any(np.asarray(zz) < 0.25):
        raise DomainError(f"z must satisfy z >= 1/4, got {z!r}")
    x = 0.5 / np.sqrt(zz)
    total = 0.0 * x
    even, odd = 1.0 + 0.0 * x, 2.0 * x  # U_2n, U_2n+1
    for c in e.coeffs:
        total = total + c * even
        even = 2.0 * x * odd - even
        odd = 2.0 * x * even - odd
    return float(total) if scalar else total


def truncation_error(f: Callable, e: FourierExpansion, rule: QuadratureRule) -> float:
    """``||f - sum c_n g_2n||`` in L2 of the measure, by quadrature."""
    resid = _evaluate(f, rule) - expansion_eval(e, rule.nodes)
    return math.sqrt(float(np.dot(rule.weights, resid * resid)))


def parseval_error(norm_sq: float, e: FourierExpansion) -> float:
    """``sqrt(||f||**2 - sum c_n**2)`` for an orthonormal-basis expansion."""
    gap = norm_sq - math.fsum(c * c for c in e.coeffs)
    return math.sqrt(max(gap, 0.0))


def parseval_partial(m: int, N: int) -> float:
    """``sum_{n=0}^{N} m**2 / ((2n - 2m + 1)**2 (2n + 2m + 1)**2)``.

    Converges to ``pi**2 / 64`` from below for every nonzero integer ``m``.
    """
    if m == 0:
        raise DomainError("m must be a nonzero integer")
    if N < 0:
        raise DomainError("N must be nonnegative")
    return math.fsum(m * m / ((2 * n - 2 * m + 1) ** 2 * (2 * n + 2 * m + 1) ** 2) for n in range(N + 1))


def parseval_partial_sums(m: int, N: int) -> np.ndarray:
    """All partial sums of :func:`parseval_partial` for ``0 .. N``."""
    if m == 0:
        raise DomainError("m must be a nonzero integer")
    n = np.arange(N + 1, dtype=float)
    return np.cumsum(m * m / ((2 * n - 2 * m + 1) ** 2 * (2 * n + 2 * m + 1) ** 2))


def power_membership(c: MembershipCase) -> bool:
    """Whether ``(z - z0)**gamma`` is square integrable against the measure.

    Decided analytically: an interior pole needs ``-1/2 < gamma < 1/4``; the
    left endpoint ``z0 = 1/4``, where the density itself vanishes like
    ``sqrt(z - 1/4)``, allows ``-3/4 < gamma < 1/4``.  The upper bound comes from
    the ``z**(2 gamma - 3/2)`` tail at infinity.
    """
    if c.case == "shifted_pole":
        if c.z0 is None or not c.z0 > 0.25:
            raise DomainError(f"shifted_pole needs z0 > 1/4, got {c.z0!r}")
        return -0.5 < c.gamma < 0.25
    if c.case == "left_endpoint":
        return -0.75 < c.gamma < 0.25
    raise DomainError(f"unknown membership case {c.case!r}; expected one of {MEMBERSHIP_CASES}")

