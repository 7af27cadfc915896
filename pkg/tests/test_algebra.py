from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qpoisson.algebra import (
    ONE, Q, ZERO, InvalidMatrixError, LaurentPoly, QFraction, binary_below, block_matrix,
    is_generically_zero, multi_indices, qpow, semiclassical_limit, validate_skew, vsub,
)

from conftest import skew_matrices


# ---------------------------------------------------------------------------
# validate_skew


def test_validate_two_generator_matrix():
    A = validate_skew([[0, 1], [-1, 0]])
    assert A.n == 2 and A.a == ((0, 1), (-1, 0))


def test_validate_zero_matrix():
    assert validate_skew([[0, 0], [0, 0]]).n == 2


def test_symmetric_matrix_rejected_with_entry_named():
    with pytest.raises(InvalidMatrixError, match=r"a\[1\]\[2\]"):
        validate_skew([[0, 1], [1, 0]])


@pytest.mark.parametrize("raw, fragment", [
    ([[0, 1, 2], [-1, 0]], "not square"),
    ([[1, 0], [0, 0]], "diagonal"),
    ([[0, 1.5], [-1.5, 0]], "not an integer"),
    ([[0, True], [-1, 0]], "not an integer"),
    ([], "at least one row"),
    (7, "list of rows"),
])
def test_malformed_matrices(raw, fragment):
    with pytest.raises(InvalidMatrixError, match=fragment):
        validate_skew(raw)


def test_block_matrix_is_skew():
    A = block_matrix([[0, 2], [-2, 0]])
    assert A.n == 4
    assert A.a[0] == (0, 2, 0, -2)


# ---------------------------------------------------------------------------
# index helpers


def test_multi_indices_counts():
    # number of monomials of degree <= 3 in 3 variables
    assert len(multi_indices(3, 3)) == 20
    assert multi_indices(2, 1) == [(0, 0), (1, 0), (0, 1)]


def test_binary_below():
    assert binary_below((2, 0, 1)) == [(1, 0, 1), (1, 0, 0), (0, 0, 1), (0, 0, 0)]
    assert binary_below((1, 1), 1) == [(1, 0), (0, 1)]


def test_vsub_leaves_orthant():
    assert vsub((1, 0), (0, 1)) is None
    assert vsub((2, 1), (1, 1)) == (1, 0)


# ---------------------------------------------------------------------------
# semiclassical limit and generic vanishing


@pytest.mark.parametrize("p, expected", [
    (ONE - Q ** 3, 3),
    (Q - ONE, -1),
    (Q ** -1 - Q, 2),
])
def test_semiclassical_limit_examples(p, expected):
    assert semiclassical_limit(p) == expected


@pytest.mark.parametrize("m", range(-10, 11))
def test_semiclassical_limit_of_one_minus_qm(m):
    assert semiclassical_limit(ONE - qpow(m)) == m


def test_semiclassical_limit_rejects_nonvanishing():
    with pytest.raises(ValueError):
        semiclassical_limit(ONE + Q)


def test_generic_vanishing():
    assert is_generically_zero(ZERO)
    assert is_generically_zero(ONE - qpow(0))
    assert not is_generically_zero(ONE - Q ** 2)


# ---------------------------------------------------------------------------
# Laurent polynomial ring axioms

laurent = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(laurent, laurent)
def test_exact_division_inverts_multiplication(a, b):
    if b:
        assert (a * b).exact_div(b) == a


@given(laurent, laurent, laurent)
def test_gcd_divides_both(a, b, c):
    if a and b and c:
        g = (a * c).gcd(b * c)
        (a * c).exact_div(g)
        (b * c).exact_div(g)
        # c divides the gcd up to a unit
        g.exact_div(c.normalized())


def test_exact_div_raises_when_not_divisible():
    with pytest.raises(ArithmeticError):
        (ONE + Q).exact_div(ONE - Q)


def test_unit_power():
    assert (2 * Q) ** -1 == LaurentPoly({-1: Fraction(1, 2)})
    with pytest.raises(ValueError):
        (ONE + Q) ** -1


# ---------------------------------------------------------------------------
# field of fractions


def test_qfraction_lowest_terms():
    f = QFraction(ONE - Q, 2 * (Q * Q - ONE))
    assert f == QFraction(-1, 2 * (ONE + Q))
    assert str(f) == "(-1)/(2*q + 2)"


def test_qfraction_constant_denominator_prints_rational():
    assert str(QFraction(Fraction(1, 2))) == "1/2"


qfractions = st.tuples(laurent, laurent).filter(lambda t: bool(t[1])).map(lambda t: QFraction(*t))


@settings(max_examples=60)
@given(qfractions, qfractions, qfractions)
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    if y:
        assert (x / y) * y == x
        assert y * y.inverse() == QFraction(1)


@given(laurent, laurent, st.integers(-3, 3), st.integers(1, 4))
def test_representation_is_canonical(a, b, shift, scale):
    if a and b:
        u = LaurentPoly({shift: scale})
        f, g = QFraction(a, b), QFraction(a * u, b * u)
        assert f == g and hash(f) == hash(g)
        assert f.num == g.num and f.den == g.den


@given(skew_matrices())
def test_generated_matrices_validate(A):
    assert validate_skew(A.to_lists()) == A
