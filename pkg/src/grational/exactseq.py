"""Exact arithmetic for the G-polynomials.

The G-polynomials satisfy ``G_0 = G_1 = 1`` and ``G_n = G_{n-1} - z G_{n-2}``.
Coefficients are stored in *ascending* powers of ``z`` throughout this
package, so ``G_4 = 1 - 3z + z**2`` is held as ``(1, -3, 1)``.  This is the
reverse of the usual descending order of the Chebyshev-like polynomials
``S_n(x) = U_n(x/2)`` whose coefficients coincide with those of ``G_n``.

Exact scalars are :class:`fractions.Fraction` (``int`` is accepted as an exact
rational).  Floats are evaluated in binary64.  The two kinds are never mixed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Sequence, Union

from .exceptions import DomainError

Scalar = Union[Fraction, int, float]

METHODS = ("recurrence", "closed_form", "char_roots", "trig")
SPECIAL_POINTS = ("zero", "quarter", "minus_one")

QUARTER = Fraction(1, 4)


def _is_exact(z) -> bool:
    if isinstance(z, bool):
        raise TypeError("bool is not a valid scalar")
    if isinstance(z, Rational):
        return True
    if isinstance(z, float):
        return False
    raise TypeError(f"unsupported scalar type {type(z).__name__}; use Fraction, int or float")


def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")


@dataclass(frozen=True)
class GPolyCoeffs:
    """Integer coefficients of ``G_n`` in ascending powers of ``z``."""

    n: int
    coeffs: tuple

    def __call__(self, z):
        # Horner in ascending storage
        acc = Fraction(0) if _is_exact(z) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class CharRoots:
    """Roots of ``s**2 - s + z = 0`` with ``s1 = (1 - sqrt(1-4z))/2``."""

    z: Scalar
    s1: complex
    s2: complex


class ExactPolynomial:
    """Polynomial with :class:`~fractions.Fraction` coefficients, ascending powers.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial([k * c for k, c in enumerate(self._coeffs)][1:])

    def __call__(self, z):
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return ExactPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return ExactPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ExactPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, Rational):
            return self._coeffs == ExactPolynomial([other])._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"ExactPolynomial({[str(c) for c in self._coeffs]})"


def _as_poly(p) -> ExactPolynomial:
    if isinstance(p, ExactPolynomial):
        return p
    return ExactPolynomial([p])


def g_poly_coeffs(n: int) -> GPolyCoeffs:
    """Coefficients ``(-1)**k * C(n-k, k)`` of ``G_n``, ``k = 0 .. n//2``.

    >>> g_poly_coeffs(4).coeffs
    (1, -3, 1)
    """
    _check_n(n)
    return GPolyCoeffs(n, tuple((-1) ** k * comb(n - k, k) for k in range(n // 2 + 1)))


def g_poly_as_exact(n: int) -> ExactPolynomial:
    return ExactPolynomial(g_poly_coeffs(n).coeffs)


def char_roots(z) -> CharRoots:
    """Characteristic roots of the G-recurrence at ``z``.

    Returned as Python ``complex`` values; for ``z <= 1/4`` they are real
    (imaginary part zero).
    """
    disc = 1 - 4 * complex(z)
    r = cmath.sqrt(disc)
    return CharRoots(z, (1 - r) / 2, (1 + r) / 2)


def _eval_recurrence(n, z):
    prev, cur = (Fraction(1), Fraction(1)) if _is_exact(z) else (1.0, 1.0)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur - z * prev
    return cur


def _eval_closed_form(n, z):
    return g_poly_coeffs(n)(z)


def _eval_char_roots_exact(n, z):
    # Work in Q(sqrt(D)), D = 1 - 4z: s2 = 1/2 + 1/2 sqrt(D), s1 its conjugate.
    # s2**(n+1) = a + b sqrt(D) gives (s2**(n+1) - s1**(n+1)) / (s2 - s1) = 2b.
    disc = 1 - 4 * z
    half = Fraction(1, 2)
    a, b = Fraction(1), Fraction(0)
    base_a, base_b = half, half
    e = n + 1
    while e:
        if e & 1:
            a, b = a * base_a + b * base_b * disc, a * base_b + b * base_a
        base_a, base_b = base_a * base_a + base_b * base_b * disc, 2 * base_a * base_b
        e >>= 1
    return 2 * b


def _eval_trig(n, z):
    x = 1.0 / (2.0 * math.sqrt(z))
    return 2.0 * z ** ((n + 1) / 2) / math.sqrt(4.0 * z - 1.0) * math.sin((n + 1) * math.acos(x))


def _eval_char_roots_float(n, z):
    if z > 0.25:
        return _eval_trig(n, z)
    r = math.sqrt(1.0 - 4.0 * z)
    s1, s2 = (1.0 - r) / 2.0, (1.0 + r) / 2.0
    return (s2 ** (n + 1) - s1 ** (n + 1)) / (s2 - s1)


def g_poly_eval(n: int, z: Scalar, method: str = "recurrence"):
    """Evaluate ``G_n(z)`` by one of four equivalent formulas.

    Parameters
    ----------
    n : int
        Index, ``n >= 0``.
    z : Fraction, int or float
        Evaluation point.  Exact input yields a ``Fraction``; float input a
        ``float``.
    method : {"recurrence", "closed_form", "char_roots", "trig"}
        ``char_roots`` is undefined at ``z = 1/4`` (double root).  ``trig`` is
        the real branch only and needs a float ``z > 1/4``.

    Raises
    ------
    DomainError
        If the method's preconditions are violated.
    """
    _check_n(n)
    exact = _is_exact(z)
    if method == "recurrence":
        return _eval_recurrence(n, z)
    if method == "closed_form":
        return _eval_closed_form(n, Fraction(z) if exact else z)
    if method == "char_roots":
        if z == QUARTER:
            raise DomainError("char_roots is undefined at z = 1/4 (double root)")
        if exact:
            return _eval_char_roots_exact(n, Fraction(z))
        return _eval_char_roots_float(n, z)
    if method == "trig":
        if exact:
            raise DomainError("trig evaluation requires float input")
        if not z > 0.25:
            raise DomainError(f"trig evaluation requires z > 1/4, got {z!r}")
        return _eval_trig(n, z)
    raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")


def fibonacci(n: int) -> int:
    """Fibonacci number with ``F_0 = F_1 = 1``."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def g_poly_special(n: int, point: str) -> Fraction:
    """Closed-form value of ``G_n`` at ``0``, ``1/4`` or ``-1``."""
    _check_n(n)
    if point == "zero":
        return Fraction(1)
    if point == "quarter":
        return Fraction(n + 1, 2**n)
    if point == "minus_one":
        return Fraction(fibonacci(n))
    raise DomainError(f"unknown special point {point!r}; expected one of {SPECIAL_POINTS}")


def g_ode_residual(n: int) -> ExactPolynomial:
    """Residual of ``(4z^2 - z) v'' + (n - (4n-6) z) v' + n(n-1) v`` at ``v = G_n``.

    The result is identically zero for every ``n``; it is returned so callers
    can verify that.
    """
    _check_n(n)
    v = g_poly_as_exact(n)
    d1 = v.derivative()
    d2 = d1.derivative()
    return (
        ExactPolynomial([0, -1, 4]) * d2
        + ExactPolynomial([n, -(4 * n - 6)]) * d1
        + n * (n - 1) * v
    )


def chebyshev_u_eval(n: int, x: float) -> float:
    """Chebyshev polynomial of the second kind ``U_n(x)`` for ``|x| <= 1``."""
    _check_n(n)
    if abs(x) > 1:
        raise DomainError(f"chebyshev_u_eval requires |x| <= 1, got {x!r}")
    prev, cur = 1.0, 2.0 * x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur
