import random
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from grational.basisops import (
    InterpolationProblem,
    collocation_matrix,
    g_to_power,
    gram_schmidt_verify,
    interpolate,
    interpolation_residual,
    pascal_identity_check,
    power_to_g,
    solve_exact,
    transition_matrices,
)
from grational.exceptions import DomainError, SingularMatrixError
from grational.gseq import g_even_exact
from grational.measure import build_quadrature


def sympy_solve(nodes, values):
    """Oracle: exact solve with sympy's own rational linear algebra."""
    z = sympy.Symbol("z")
    basis = [sympy.chebyshevu(2 * l, 1 / (2 * sympy.sqrt(z))) for l in range(len(nodes))]
    mat = sympy.Matrix(
        [[sympy.nsimplify(sympy.expand(b.subs(z, sympy.Rational(x.numerator, x.denominator)))) for b in basis]
         for x in nodes]
    )
    rhs = sympy.Matrix([sympy.Rational(v.numerator, v.denominator) for v in values])
    return [Fraction(int(c.p), int(c.q)) for c in mat.LUsolve(rhs)]


@pytest.mark.parametrize("n, expected", [(0, [1]), (1, [1, 1]), (3, [5, 9, 5, 1])])
def test_power_to_g_examples(n, expected):
    assert power_to_g(n) == expected


def test_power_expansion_exact():
    for n in range(1, 13):
        for z in (2, 3, 4, 5, Fraction(-7, 3), Fraction(1, 9)):
            z = Fraction(z)
            expansion = sum(c * g_even_exact(2 * l, z) for l, c in enumerate(power_to_g(n)))
            assert expansion == 1 / z**n


def test_g_to_power_matches_definition():
    for n in range(15):
        for z in (Fraction(3), Fraction(5, 2)):
            assert sum(c / z**j for j, c in enumerate(g_to_power(n))) == g_even_exact(2 * n, z)


def test_catalan_numbers():
    catalan = [1]
    for n in range(16):
        catalan.append(catalan[-1] * 2 * (2 * n + 1) // (n + 2))
    for n in range(1, 17):
        assert power_to_g(n)[0] == catalan[n]
    _, b = transition_matrices(17)
    assert [row[0] for row in b.entries] == catalan[:17]


def test_transition_examples():
    a, b = transition_matrices(5)
    assert a.rows() == [[1], [-1, 1], [1, -3, 1], [-1, 6, -5, 1], [1, -10, 15, -7, 1]]
    assert b.rows() == [[1], [1, 1], [2, 3, 1], [5, 9, 5, 1], [14, 28, 20, 7, 1]]
    a1, b1 = transition_matrices(1)
    assert a1.entries == b1.entries == ((1,),)
    with pytest.raises(DomainError):
        transition_matrices(0)


def test_transition_product_identity():
    for n in range(1, 17):
        a, b = transition_matrices(n)
        assert a.is_lower_unitriangular() and b.is_lower_unitriangular()
        prod = a @ b
        assert all(prod[i][j] == (i == j) for i in range(n) for j in range(n))
        assert b @ a == prod


def test_b_rows_are_power_expansions():
    for n in range(11):
        _, b = transition_matrices(n + 1)
        assert list(b.entries[n][: n + 1]) == power_to_g(n)
        a, _ = transition_matrices(n + 1)
        assert list(a.entries[n][: n + 1]) == g_to_power(n)


def test_zero_based_access_documented():
    a, _ = transition_matrices(4)
    # a_{32} (1-based) = -C(3, 1)
    assert a[2, 1] == -3


@pytest.mark.parametrize("n, m", [(3, 3), (4, 3)])
def test_pascal_examples(n, m):
    assert pascal_identity_check(n, m)


def test_pascal_example_values():
    assert comb(3, 3) + comb(3, 2) - comb(3, 1) - comb(3, 0) == 0 == comb(5, 3) - comb(5, 2)
    assert comb(4, 3) + comb(4, 2) - comb(4, 1) - comb(4, 0) == 5 == comb(6, 3) - comb(6, 2)


def test_pascal_exhaustive():
    assert all(pascal_identity_check(n, m) for n in range(3, 41) for m in range(3, n + 1))


def test_pascal_preconditions():
    with pytest.raises(DomainError):
        pascal_identity_check(5, 2)
    with pytest.raises(DomainError):
        pascal_identity_check(3, 4)


def test_gram_schmidt():
    devs = gram_schmidt_verify(8, build_quadrature(64))
    assert devs[0] < 1e-14
    assert devs[1] < 1e-10
    assert devs[3] < 1e-8
    assert max(devs) < 1e-8


def test_gram_schmidt_small_rule_still_exact():
    # N >= 2n + 2 suffices
    devs = gram_schmidt_verify(8, build_quadrature(18))
    assert max(devs) < 1e-8


def test_interpolate_constant_data():
    p = InterpolationProblem((1, 2, 3, 4), (1, 1, 1, 1))
    assert interpolate(p) == [1, 0, 0, 0]
    p = InterpolationProblem((Fraction(1, 3), 5, 7, 2), (1, 1, 1, 1))
    assert interpolate(p) == [1, 0, 0, 0]


def test_interpolate_reproduces_basis_function():
    nodes = (1, 2, 3, 4)
    values = tuple(g_even_exact(4, x) for x in nodes)
    assert interpolate(InterpolationProblem(nodes, values)) == [0, 0, 1, 0]


def test_collocation_matrix_signs():
    # g_2(z) = 1/z - 1, so the second column is non-positive for z >= 1
    mat = collocation_matrix([Fraction(x) for x in (1, 2, 3, 4)])
    assert [row[1] for row in mat] == [0, Fraction(-1, 2), Fraction(-2, 3), Fraction(-3, 4)]
    assert [row[3] for row in mat] == [1, Fraction(7, 8), Fraction(13, 27), Fraction(13, 64)]


def test_interpolate_worked_example():
    p = InterpolationProblem((1, 2, 3, 4), (2, 1, 1.5, 1))
    coeffs = interpolate(p)
    assert coeffs == sympy_solve(p.nodes, p.values)
    assert coeffs == [Fraction(811, 6), Fraction(1097, 4), Fraction(1147, 6), Fraction(58)]
    assert all(r == 0 for r in interpolation_residual(p, coeffs))


def test_interpolate_random_problems():
    rng = random.Random(99)
    for _ in range(20):
        size = rng.randint(1, 6)
        nodes = set()
        while len(nodes) < size:
            x = Fraction(rng.randint(1, 40), rng.randint(1, 8))
            nodes.add(x)
        nodes = tuple(nodes)
        values = tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in nodes)
        p = InterpolationProblem(nodes, values)
        coeffs = interpolate(p)
        assert all(r == 0 for r in interpolation_residual(p, coeffs))
        if size <= 4:
            assert coeffs == sympy_solve(nodes, values)


def test_interpolation_problem_validation():
    with pytest.raises(DomainError):
        InterpolationProblem((1, 1), (2, 3))
    with pytest.raises(DomainError):
        InterpolationProblem((0, 1), (2, 3))
    with pytest.raises(DomainError):
        InterpolationProblem((1, 2), (2,))
    assert InterpolationProblem((0.1,), (1.5,)).nodes == (Fraction(1, 10),)


def test_singular_system_reports_pivot():
    with pytest.raises(SingularMatrixError) as info:
        solve_exact([[1, 2], [2, 4]], [1, 2])
    assert info.value.pivot == 1
    with pytest.raises(SingularMatrixError) as info:
        solve_exact([[0, 1], [0, 3]], [1, 1])
    assert info.value.pivot == 0


@settings(max_examples=40, deadline=None)
@given(
    nodes=st.lists(st.fractions(min_value=Fraction(1, 4), max_value=50, max_denominator=20), min_size=1, max_size=5,
                   unique=True),
    data=st.data(),
)
def test_interpolant_reproduces_data(nodes, data):
    values = data.draw(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=10),
                                min_size=len(nodes), max_size=len(nodes)))
    p = InterpolationProblem(tuple(nodes), tuple(values))
    try:
        coeffs = interpolate(p)
    except SingularMatrixError:
        return
    assert interpolation_residual(p, coeffs) == [0] * len(nodes)
