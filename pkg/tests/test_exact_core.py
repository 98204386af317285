"""Scalars, polynomials, parsing, and exact linear algebra."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segrecr.linalg import ExactMatrix, matrix_kernel
from segrecr.parsing import ParseError, UnknownVariableError, parse_polynomial
from segrecr.polynomials import (
    Polynomial,
    polynomial_square_root,
    square_root_up_to_scalar,
    to_primitive_integer,
)
from segrecr.scalars import Fp, ScalarDomainError

V2 = ["x0", "x1"]
V6 = [f"x{i}" for i in range(6)]


# -- scalars ----------------------------------------------------------------


def test_prime_field_requires_prime_at_least_seven():
    with pytest.raises(ScalarDomainError):
        Fp(1, 5)
    with pytest.raises(ScalarDomainError):
        Fp(1, 9)
    assert Fp(3, 7) + Fp(5, 7) == Fp(1, 7)


def test_modulus_mixing_is_an_error():
    with pytest.raises(ScalarDomainError):
        Fp(1, 7) + Fp(1, 11)


def test_field_inverse_and_division():
    a = Fp(3, 11)
    assert (a * a.inverse()).value == 1
    assert (Fp(1, 11) / a) * a == Fp(1, 11)


def test_fp_sqrt():
    squares = {v * v % 11 for v in range(1, 11)}
    for v in range(1, 11):
        root = Fp(v, 11).sqrt()
        if v in squares:
            assert root is not None and (root * root).value == v
        else:
            assert root is None


# -- parsing ----------------------------------------------------------------


def test_parse_simple_sum():
    p = parse_polynomial("x0^3 + x1^3", V2)
    assert len(p.terms) == 2 and p.degree() == 3


def test_parse_binomial_identity():
    p = parse_polynomial("(x0+x1)^2 - x0^2 - 2*x0*x1", V2)
    assert p == parse_polynomial("x1^2", V2)


def test_parse_unknown_variable_reports_position():
    with pytest.raises(UnknownVariableError) as err:
        parse_polynomial("x0 + y0", V2)
    assert err.value.position == 5


def test_parse_rational_literals_and_unary_minus():
    p = parse_polynomial("-1/2*x0 + 3/4", V2)
    assert p.coefficient((1, 0)) == Fraction(-1, 2)
    assert p.coefficient((0, 0)) == Fraction(3, 4)


def test_parse_rejects_implicit_multiplication():
    with pytest.raises(ParseError):
        parse_polynomial("2 x0", V2)
    with pytest.raises(ParseError):
        parse_polynomial("x0 (x1)", V2)


def test_parse_syntax_error_has_position():
    with pytest.raises(ParseError):
        parse_polynomial("x0 + ", V2)
    with pytest.raises(ParseError):
        parse_polynomial("x0 ^ x1", V2)


# -- polynomial arithmetic -----------------------------------------------------


def _random_poly(rng, nvars=3, max_terms=5, max_deg=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        terms[exp] = Fraction(rng.randint(-9, 9))
    return Polynomial(nvars, terms)


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_ring_axioms_on_random_inputs(seed):
    rng = random.Random(seed)
    a, b, c = (_random_poly(rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == Polynomial.zero(3)


def test_evaluate_cancellation():
    p3 = parse_polynomial("+".join(f"x{i}^3" for i in range(6)), V6)
    p1 = parse_polynomial("+".join(f"x{i}" for i in range(6)), V6)
    point = [Fraction(v) for v in (1, 1, 1, -1, -1, -1)]
    assert p3.evaluate(point) == 0
    assert p1.evaluate(point) == 0


def test_evaluate_igusa_value_is_twelve():
    # (sum x^2)^2 - 4 sum x^4 at the node representative
    p2 = parse_polynomial("+".join(f"x{i}^2" for i in range(6)), V6)
    p4 = parse_polynomial("+".join(f"x{i}^4" for i in range(6)), V6)
    q = p2 * p2 - 4 * p4
    assert q.evaluate([Fraction(v) for v in (1, 1, 1, -1, -1, -1)]) == 12


def test_evaluate_modulus_mismatch():
    p = parse_polynomial("x0 + x1", V2).reduce_mod(7)
    with pytest.raises(ScalarDomainError):
        p.evaluate([Fp(1, 7), Fp(1, 11)])


def test_gradient_power_rule_and_euler_identity():
    p3 = parse_polynomial("+".join(f"x{i}^3" for i in range(6)), V6)
    grad = p3.gradient()
    assert grad[0] == parse_polynomial("3*x0^2", V6)
    assert Polynomial.constant(6, 5).gradient() == [Polynomial.zero(6)] * 6
    rng = random.Random(5)
    p2 = parse_polynomial("+".join(f"x{i}^2" for i in range(6)), V6)
    igusa = p2 * p2 - 4 * parse_polynomial("+".join(f"x{i}^4" for i in range(6)), V6)
    point = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(6)]
    euler = sum(point[i] * g.evaluate(point) for i, g in enumerate(igusa.gradient()))
    assert euler == 4 * igusa.evaluate(point)


def test_homogeneous_scaling_property():
    rng = random.Random(11)
    p = parse_polynomial("x0^3 + 2*x0*x1*x2 - x2^3", ["x0", "x1", "x2"])
    for _ in range(10):
        v = [Fraction(rng.randint(-5, 5)) for _ in range(3)]
        t = Fraction(rng.randint(1, 7), rng.randint(1, 4))
        assert p.evaluate([t * c for c in v]) == t ** 3 * p.evaluate(v)


def test_substitute_linear_identity_and_collapse():
    p = parse_polynomial("x0^2 + x1*x0", V2)
    identity = [[1, 0], [0, 1]]
    assert p.substitute_linear(identity) == p
    total = parse_polynomial("+".join(f"x{i}" for i in range(6)), V6)
    collapse = [[1 if j == i else 0 for j in range(5)] for i in range(5)] + [[-1] * 5]
    assert total.substitute_linear(collapse).is_zero()


def test_substitute_linear_gives_restricted_cubic():
    cubic = parse_polynomial("+".join(f"x{i}^3" for i in range(6)), V6)
    collapse = [[1 if j == i else 0 for j in range(5)] for i in range(5)] + [[-1] * 5]
    restricted = cubic.substitute_linear(collapse)
    assert restricted.degree() == 3 and restricted.nvars == 5
    direct = parse_polynomial(
        "x0^3+x1^3+x2^3+x3^3+x4^3 - (x0+x1+x2+x3+x4)^3", [f"x{i}" for i in range(5)]
    )
    assert restricted == direct


def test_substitute_commutes_with_evaluate():
    rng = random.Random(3)
    p = _random_poly(rng, nvars=3)
    matrix = [[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(3)]
    q = p.substitute_linear(matrix)
    for _ in range(5):
        v = [Fraction(rng.randint(-4, 4)) for _ in range(2)]
        image = [sum(matrix[i][j] * v[j] for j in range(2)) for i in range(3)]
        assert q.evaluate(v) == p.evaluate(image)


def test_substitute_linear_dimension_mismatch():
    p = parse_polynomial("x0 + x1", V2)
    with pytest.raises(ValueError):
        p.substitute_linear([[1, 0]])


# -- square roots ----------------------------------------------------------------


def test_square_root_of_perfect_square():
    p = parse_polynomial("x0^2 + 2*x0*x1 + x1^2", V2)
    root = polynomial_square_root(p)
    assert root is not None and root * root == p


def test_square_root_rejects_sum_of_squares():
    assert polynomial_square_root(parse_polynomial("x0^2 + x1^2", V2)) is None


@given(st.integers(0, 10**6))
@settings(max_examples=100, deadline=None)
def test_square_root_roundtrip_random_quadrics(seed):
    rng = random.Random(seed)
    nvars = rng.choice([2, 3, 4])
    terms = {}
    for i in range(nvars):
        for j in range(i, nvars):
            exp = [0] * nvars
            exp[i] += 1
            exp[j] += 1
            if rng.random() < 0.7:
                terms[tuple(exp)] = Fraction(rng.randint(-6, 6))
    q = Polynomial(nvars, terms)
    if q.is_zero():
        return
    root = polynomial_square_root(q * q)
    assert root is not None
    assert root == q or root == -q


def test_square_root_up_to_scalar_handles_negatives():
    q = parse_polynomial("x0^2 - 3*x0*x1 + x1^2", V2)
    found = square_root_up_to_scalar(q * q * Fraction(-5))
    assert found is not None
    root, lam = found
    assert root * root * lam == q * q * -5


def test_square_root_needs_shear_when_no_pure_power():
    q = parse_polynomial("x0*x1", V2)
    root = polynomial_square_root(q * q)
    assert root is not None and root * root == q * q


def test_to_primitive_integer():
    p = parse_polynomial("1/2*x0^2 + 1/3*x1^2", V2)
    prim = to_primitive_integer(p)
    assert prim.coefficient((2, 0)) == 3 and prim.coefficient((0, 2)) == 2


# -- exact matrices -----------------------------------------------------------------


def test_rref_and_rank():
    m = ExactMatrix([[2, 4, 6], [1, 2, 3], [0, 1, 1]])
    reduced, pivots = m.rref()
    assert pivots == [0, 1]
    assert m.rank() == 2


def test_kernel_identity_and_zero():
    assert matrix_kernel(ExactMatrix.identity(4)).nrows == 0
    k = matrix_kernel(ExactMatrix.zero(2, 3))
    assert k.nrows == 3 and k.rank() == 3


def test_rank_nullity_random():
    rng = random.Random(17)
    for _ in range(20):
        rows = [[Fraction(rng.randint(-4, 4)) for _ in range(5)] for _ in range(3)]
        m = ExactMatrix(rows)
        assert m.rank() + m.right_kernel().nrows == 5
        for kv in m.right_kernel().rows:
            assert all(v == 0 for v in m.apply(kv))


def test_kernel_of_plane_equations(data):
    plane_rows = [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1]]
    kernel = matrix_kernel(ExactMatrix(plane_rows))
    assert kernel.nrows == 3


def test_det_and_solve():
    m = ExactMatrix([[2, 1], [1, 1]])
    assert m.det() == 1
    assert m.solve_right([3, 2]) == [1, 1]
