"""Invariant suites driven by ``grational check``.

Every check yields a :class:`CheckResult` with the measured deviation and the
tolerance it was held to.  Exact checks report a deviation of 0 (holds) or 1
(fails) against tolerance 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import basisops, exactseq, gseq, hilbert, measure

SUITES = ("identities", "orthonormality", "sturm_liouville", "genfun", "parseval")

REFERENCE_COEFFS = {
    0: [1],
    1: [1],
    2: [1, -1],
    3: [1, -2],
    4: [1, -3, 1],
    5: [1, -4, 3],
    6: [1, -5, 6, -1],
    7: [1, -6, 10, -4],
    8: [1, -7, 15, -10, 1],
    9: [1, -8, 21, -20, 5],
}

REFERENCE_A5 = [[1], [-1, 1], [1, -3, 1], [-1, 6, -5, 1], [1, -10, 15, -7, 1]]
REFERENCE_B5 = [[1], [1, 1], [2, 3, 1], [5, 9, 5, 1], [14, 28, 20, 7, 1]]


@dataclass(frozen=True)
class CheckResult:
    label: str
    deviation: float
    tolerance: float
    passed: bool


def _exact(label, ok):
    return CheckResult(label, 0.0 if ok else 1.0, 0.0, bool(ok))


def _numeric(label, dev, tol):
    dev = float(dev)
    return CheckResult(label, dev, tol, bool(dev < tol))


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def identities_suite():
    out = []
    out.append(_exact("coeffs_table_n0..9", all(
        list(exactseq.g_poly_coeffs(n).coeffs) == c for n, c in REFERENCE_COEFFS.items())))
    out.append(_exact("G_n(1/4)=(n+1)/2^n n<=64", all(
        exactseq.g_poly_eval(n, Fraction(1, 4)) == Fraction(n + 1, 2**n) for n in range(65))))
    out.append(_exact("G_n(0)=1 n<=64", all(exactseq.g_poly_eval(n, Fraction(0)) == 1 for n in range(65))))
    out.append(_exact("G_n(-1)=F_n n<=30", all(
        exactseq.g_poly_eval(n, Fraction(-1)) == exactseq.fibonacci(n) for n in range(31))))
    out.append(_exact("ode_residual_zero n<=32", all(exactseq.g_ode_residual(n).is_zero() for n in range(33))))
    out.append(_exact("A_nB_n=I n<=16", all(_is_identity(*basisops.transition_matrices(n)) for n in range(1, 17))))
    a5, b5 = basisops.transition_matrices(5)
    out.append(_exact("A_5,B_5 table", a5.rows() == REFERENCE_A5 and b5.rows() == REFERENCE_B5))
    out.append(_exact("z^-n expansion exact n<=12", all(
        Fraction(1) / Fraction(z) ** n
        == sum(c * gseq.g_even_exact(2 * l, Fraction(z)) for l, c in enumerate(basisops.power_to_g(n)))
        for n in range(1, 13) for z in (2, 3, 4, 5))))
    out.append(_exact("catalan column n<=16", [row[0] for row in basisops.transition_matrices(16)[1].entries]
                      == [catalan(k) for k in range(16)]))
    out.append(_exact("pascal identity 3<=m<=n<=40", all(
        basisops.pascal_identity_check(n, m) for n in range(3, 41) for m in range(3, n + 1))))
    return out


def _is_identity(a, b):
    prod = a @ b
    return all(prod[i][j] == (1 if i == j else 0) for i in range(a.order) for j in range(a.order))


def orthonormality_suite(N=64, tol=1e-10, size=21):
    rule = measure.build_quadrature(N)
    vals = [hilbert.g_basis(2 * k)(rule.nodes) for k in range(size)]
    out = [_numeric("total_mass", abs(float(np.sum(rule.weights)) - 1.0), 1e-13)]
    for m in range(size):
        for n in range(size):
            ip = float(np.dot(rule.weights, vals[m] * vals[n]))
            out.append(_numeric(f"ortho[{m},{n}]", abs(ip - (m == n)), tol))
    return out


def sturm_liouville_suite(n_max=12, num=50):
    out = []
    for n in range(n_max + 1):
        worst = 0.0
        for z in np.geomspace(0.3, 50.0, num):
            g = gseq.g_fun_eval(n, z)
            scale = 1.0 + n * (n + 2) * abs(g)
            worst = max(worst, abs(gseq.sl_residual(n, z)) / scale)
        out.append(_numeric(f"sl_residual n={n}", worst, 1e-8))
    return out


def genfun_suite(terms=80):
    out = []
    zs = np.linspace(0.25, 10.0, 5)
    ts = np.linspace(-0.5, 0.5, 5)
    for kind in gseq.GenFunKind:
        worst = max(
            abs(gseq.generating_function_partial(kind, z, t, terms) - gseq.generating_function(kind, z, t))
            for z in zs for t in ts
        )
        out.append(_numeric(f"genfun {kind.value}", worst, 1e-8))
    out.append(_numeric("exponential z=1/4 t=1 = 2e",
                        abs(gseq.generating_function("exponential", 0.25, 1.0) - 2 * math.e), 1e-12))
    return out


def parseval_suite(m=1, terms=2000):
    target = math.pi**2 / 64
    sums = hilbert.parseval_partial_sums(m, terms - 1)
    last = hilbert.parseval_partial(m, terms - 1)
    return [
        _numeric(f"parseval m={m} terms={terms}", abs(last - target), 1e-3),
        _exact(f"parseval m={m} monotone", bool(np.all(np.diff(sums) >= 0))),
        _exact(f"parseval m={m} bounded", bool(np.all(sums <= target + 1e-15)) and last <= target + 1e-15),
    ]


def run_suite(name, N=64, tol=1e-10, m=1, terms=2000):
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, N=N, tol=tol, m=m, terms=terms)]
    if name == "identities":
        return identities_suite()
    if name == "orthonormality":
        return orthonormality_suite(N=N, tol=tol)
    if name == "sturm_liouville":
        return sturm_liouville_suite()
    if name == "genfun":
        return genfun_suite()
    if name == "parseval":
        return parseval_suite(m=m, terms=terms)
    raise ValueError(f"unknown suite {name!r}")
