"""Change of basis between ``{z**-n}`` and ``{g_2n}``, and exact interpolation.

Transition matrices follow 1-based ``(i, j)`` indexing in their formulas;
the returned objects are ordinary 0-based nested tuples, so entry
``a_{ij}`` lives at ``A.entries[i-1][j-1]``.  Row ``i`` of ``A`` expresses
``g_{2(i-1)}`` in powers ``z**-(j-1)``; row ``i`` of ``B`` expresses
``z**-(i-1)`` in the ``g_{2(j-1)}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .exceptions import DomainError, SingularMatrixError
from .gseq import g_even_exact, g_fun_eval
from .measure import QuadratureRule


def _binom(n, k):
    return comb(n, k) if 0 <= k <= n else 0


@dataclass(frozen=True)
class TransitionMatrix:
    """Lower-triangular integer matrix with unit diagonal."""

    order: int
    entries: tuple

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "TransitionMatrix"):
        n = self.order
        return tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    def rows(self):
        """Rows truncated after the diagonal."""
        return [list(row[: i + 1]) for i, row in enumerate(self.entries)]

    def is_lower_unitriangular(self) -> bool:
        e = self.entries
        return all(e[i][i] == 1 for i in range(self.order)) and all(
            e[i][j] == 0 for i in range(self.order) for j in range(i + 1, self.order)
        )


def power_to_g(n: int) -> list:
    """Integer coefficients of ``z**-n`` in ``g_0, g_2, ..., g_2n``.

    The ``g_2l`` coefficient is ``C(2n, n-l) - C(2n, n-l-1)``.

    >>> power_to_g(3)
    [5, 9, 5, 1]
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    return [_binom(2 * n, n - l) - _binom(2 * n, n - l - 1) for l in range(n + 1)]


def g_to_power(n: int) -> list:
    """Integer coefficients of ``g_2n`` in ``1, z**-1, ..., z**-n``."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return [(-1) ** (n - j) * _binom(n + j, n - j) for j in range(n + 1)]


def transition_matrices(n: int):
    """Exact ``(A_n, B_n)`` with ``A_n B_n = I``.

    ``a_ij = (-1)**(i-j) C(i+j-2, i-j)`` and
    ``b_ij = C(2i-2, i-j) - C(2i-2, i-j-1)`` for ``j <= i``, zero above the
    diagonal.
    """
    if n < 1:
        raise DomainError("matrix order must be >= 1")
    a = tuple(
        tuple((-1) ** (i - j) * _binom(i + j - 2, i - j) if j <= i else 0 for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    b = tuple(
        tuple(_binom(2 * i - 2, i - j) - _binom(2 * i - 2, i - j - 1) if j <= i else 0 for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return TransitionMatrix(n, a), TransitionMatrix(n, b)


def pascal_identity_check(n: int, m: int) -> bool:
    """Exact check of ``C(n,m) + C(n,m-1) - C(n,m-2) - C(n,m-3) = C(n+2,m) - C(n+2,m-1)``."""
    if m < 3 or n < m:
        raise DomainError(f"need n >= m >= 3, got n={n}, m={m}")
    lhs = comb(n, m) + comb(n, m - 1) - comb(n, m - 2) - comb(n, m - 3)
    rhs = comb(n + 2, m) - comb(n + 2, m - 1)
    return lhs == rhs


def gram_schmidt_grid(num: int = 100) -> np.ndarray:
    """Default comparison grid: ``num`` log-spaced points on ``[1/4, 50]``."""
    return np.geomspace(0.25, 50.0, num)


def gram_schmidt_verify(n: int, rule: QuadratureRule, grid=None) -> list:
    """Orthonormalize ``1, z**-1, ..., z**-n`` numerically and compare with ``g_2k``.

    Modified Gram-Schmidt runs on the node values with the rule's weights.
    Each resulting ``v_k`` is carried as a coefficient vector over the
    monomials so it can be evaluated off the nodes.  Returns the maximum
    absolute deviation ``|v_k - g_2k|`` over ``grid`` for each ``k``.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if grid is None:
        grid = gram_schmidt_grid()
    grid = np.asarray(grid, dtype=float)
    w = rule.weights
    inv = 1.0 / rule.nodes
    basis_at_nodes = np.array([inv**k for k in range(n + 1)])
    coeffs = np.eye(n + 1)
    vecs = basis_at_nodes.copy()
    for k in range(n + 1):
        for j in range(k):
            proj = np.dot(w, vecs[k] * vecs[j])
            vecs[k] -= proj * vecs[j]
            coeffs[k] -= proj * coeffs[j]
        norm = np.sqrt(np.dot(w, vecs[k] * vecs[k]))
        vecs[k] /= norm
        coeffs[k] /= norm
    ginv = 1.0 / grid
    powers = np.array([ginv**k for k in range(n + 1)])
    deviations = []
    for k in range(n + 1):
        v = coeffs[k] @ powers
        deviations.append(float(np.max(np.abs(v - g_fun_eval(2 * k, grid)))))
    return deviations


@dataclass(frozen=True)
class InterpolationProblem:
    """Distinct nonzero rational nodes with matching values.

    Floats are converted through their decimal representation, so ``1.5``
    becomes ``3/2`` and ``0.1`` becomes ``1/10``.
    """

    nodes: tuple
    values: tuple

    def __post_init__(self):
        nodes = tuple(_to_fraction(x) for x in self.nodes)
        values = tuple(_to_fraction(y) for y in self.values)
        if len(nodes) != len(values):
            raise DomainError("nodes and values must have equal length")
        if not nodes:
            raise DomainError("at least one node is required")
        if any(x == 0 for x in nodes):
            raise DomainError("interpolation nodes must be nonzero")
        if len(set(nodes)) != len(nodes):
            raise DomainError("interpolation nodes must be pairwise distinct")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)


def _to_fraction(v) -> Fraction:
    if isinstance(v, float):
        return Fraction(repr(v))
    return Fraction(v)


def collocation_matrix(nodes: Sequence) -> list:
    """Exact matrix ``V[j][l] = g_2l(node_j)``."""
    size = len(nodes)
    return [[g_even_exact(2 * l, x) for l in range(size)] for x in nodes]


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Gauss-Jordan elimination over the rationals.

    Raises
    ------
    SingularMatrixError
        When no nonzero pivot exists in some column; ``pivot`` is that column.
    """
    size = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError(col)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[-1] for row in aug]


def interpolate(p: InterpolationProblem) -> list:
    """Exact coefficients ``c`` with ``sum_l c_l g_2l(node_j) = value_j``."""
    return solve_exact(collocation_matrix(p.nodes), p.values)


def interpolation_residual(p: InterpolationProblem, coeffs: Sequence) -> list:
    """Exact residuals ``sum_l c_l g_2l(node_j) - value_j``."""
    return [
        sum((Fraction(c) * g_even_exact(2 * l, x) for l, c in enumerate(coeffs)), Fraction(0)) - y
        for x, y in zip(p.nodes, p.values)
    ]
