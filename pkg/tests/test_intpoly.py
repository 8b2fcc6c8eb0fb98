"""Integer polynomial arithmetic tests.

This module tests:
- Normalization, addition, multiplication and long division by monic divisors
- Even/odd splitting and composition with x^k
- The coeff^power text format
- MonicReducer agreement with long division
"""

import random

import pytest

from nutforge.core.errors import ValidationError
from nutforge.core.intpoly import (
    IntPolynomial,
    MonicReducer,
    SparseTerm,
    add,
    compose_power,
    divrem_monic,
    format_poly,
    mul,
    parse_poly,
    shift,
    split_even_odd,
    value_at,
)


def P(*coeffs):
    return IntPolynomial(tuple(coeffs))


X_MINUS_1 = P(-1, 1)
X_PLUS_1 = P(1, 1)


@pytest.mark.unit
class TestNormalization:
    def test_trailing_zeros_are_trimmed(self):
        """Highest-index zeros never survive construction."""
        p = P(1, 2, 0, 0)
        assert p.coeffs == (1, 2)
        assert p.degree == 1

    def test_zero_polynomial(self):
        """The empty coefficient tuple is zero with degree -1."""
        zero = P(0, 0)
        assert zero.is_zero
        assert zero.degree == -1
        assert not zero

    def test_rejects_non_integer_coefficients(self):
        """Floats are refused outright."""
        with pytest.raises(ValidationError):
            P(1, 0.5)

    def test_from_terms_sums_collisions(self):
        """Pairs at the same power are added."""
        p = IntPolynomial.from_terms([(2, 1), (0, 3), (2, -1), (1, 4)])
        assert p == P(3, 4)

    def test_sparse_view(self):
        """terms() lists nonzero terms with strictly increasing powers."""
        p = P(-2, 0, 2, -2)
        assert p.terms() == (SparseTerm(0, -2), SparseTerm(2, 2), SparseTerm(3, -2))
        assert p.term_count == 3
        assert p.powers() == (0, 2, 3)


@pytest.mark.unit
class TestArithmetic:
    def test_add_cancels(self):
        """(x-1) + (x+1) = 2x and p + (-p) = 0."""
        assert add(X_MINUS_1, X_PLUS_1) == P(0, 2)
        assert add(P(1, 0, 1), P(-1, 0, -1)).is_zero
        assert add(IntPolynomial.zero(), P(5, 1)) == P(5, 1)

    def test_mul_examples(self):
        """Small products expand exactly."""
        assert mul(X_MINUS_1, X_PLUS_1) == P(-1, 0, 1)
        assert mul(P(1, 0, 1), P(1, 0, 0, 0, 1)) == P(1, 0, 1, 0, 1, 0, 1)
        assert mul(mul(X_MINUS_1, X_PLUS_1), P(1, 0, 1)) == P(-1, 0, 0, 0, 1)

    def test_mul_with_zero(self):
        assert mul(P(1, 2), IntPolynomial.zero()).is_zero

    def test_operators(self):
        """Operator forms delegate to the module functions."""
        p = P(1, 2)
        assert p + p == 2 * p == p * 2 == P(2, 4)
        assert p - p == IntPolynomial.zero()
        assert -p == P(-1, -2)
        assert p * p == P(1, 4, 4)

    def test_shift_and_value_at(self):
        assert shift(P(1, 1), 3) == P(0, 0, 0, 1, 1)
        assert value_at(P(-1, -2, 1), 1) == -2
        assert value_at(P(-1, -2, 1), -1) == 2

    def test_mul_commutative_associative_random(self):
        """Random big-coefficient polynomials: mul commutes and associates."""
        rng = random.Random(20240601)

        def rand_poly():
            return P(*(rng.randint(-(2**128), 2**128) for _ in range(rng.randint(1, 65))))

        for _ in range(20):
            a, b, c = rand_poly(), rand_poly(), rand_poly()
            assert mul(a, b) == mul(b, a)
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
            if not a.is_zero and not b.is_zero:
                assert mul(a, b).degree == a.degree + b.degree


@pytest.mark.unit
class TestDivision:
    def test_exact_division(self):
        q, r = divrem_monic(P(-1, 0, 1), X_MINUS_1)
        assert q == X_PLUS_1
        assert r.is_zero

    def test_z5_mod_phi3(self):
        """x^2 - 2x - 1 mod x^2 + x + 1 = -3x - 2."""
        _, r = divrem_monic(P(-1, -2, 1), P(1, 1, 1))
        assert r == P(-2, -3)

    def test_x5_mod_x4_plus_1(self):
        _, r = divrem_monic(IntPolynomial.monomial(5), P(1, 0, 0, 0, 1))
        assert r == P(0, -1)

    def test_dividend_of_lower_degree(self):
        q, r = divrem_monic(P(3, 1), P(1, 0, 1))
        assert q.is_zero
        assert r == P(3, 1)

    @pytest.mark.parametrize("divisor", [IntPolynomial.zero(), P(1, 2), P(1, 0, -1)])
    def test_rejects_non_monic_or_zero(self, divisor):
        """Zero and non-monic divisors are validation errors."""
        with pytest.raises(ValidationError):
            divrem_monic(P(1, 2, 3), divisor)

    def test_reconstitution_random(self):
        """q*m + r gives back the dividend, deg r < deg m."""
        rng = random.Random(7)
        for _ in range(50):
            a = P(*(rng.randint(-(10**12), 10**12) for _ in range(rng.randint(0, 40))))
            m = P(*(rng.randint(-50, 50) for _ in range(rng.randint(0, 10))), 1)
            q, r = divrem_monic(a, m)
            assert mul(q, m) + r == a
            assert r.degree < m.degree


@pytest.mark.unit
class TestSplitAndCompose:
    def test_split_even_odd(self):
        even, odd = split_even_odd(P(1, 1, 1, 1))
        assert even == P(1, 0, 1)
        assert odd == P(0, 1, 0, 1)
        assert split_even_odd(IntPolynomial.zero()) == (IntPolynomial.zero(), IntPolynomial.zero())

    def test_split_parts_are_disjoint(self):
        p = P(-2, 0, 2, -2, -1, 1, 0, 0, -1, 1, 2, -2, 0, 2)
        even, odd = split_even_odd(p)
        assert even + odd == p
        assert not set(even.powers()) & set(odd.powers())

    def test_compose_power(self):
        """p(x^k) examples, including Φ2(x^2) = Φ4."""
        assert compose_power(X_PLUS_1, 3) == P(1, 0, 0, 1)
        assert compose_power(X_PLUS_1, 2) == P(1, 0, 1)
        p = P(4, -1, 7)
        assert compose_power(p, 1) == p
        assert compose_power(p, 6) == compose_power(compose_power(p, 2), 3)

    def test_compose_power_rejects_k_below_one(self):
        with pytest.raises(ValidationError):
            compose_power(X_PLUS_1, 0)


@pytest.mark.unit
class TestTextFormat:
    def test_parse(self):
        assert parse_poly("-2^0 2^2 -2^3") == P(-2, 0, 2, -2)
        assert parse_poly("0").is_zero
        assert parse_poly("  ").is_zero

    def test_format(self):
        assert format_poly(P(-2, 0, 2, -2)) == "-2^0 2^2 -2^3"
        assert format_poly(IntPolynomial.zero()) == "0"
        assert str(P(0, 1)) == "1^1"

    @pytest.mark.parametrize("text", ["1^2 3^2", "x^2", "1^-1", "0^3", "2", "1^a"])
    def test_parse_rejects(self, text):
        """Duplicate or negative powers, zero coefficients and junk are refused."""
        with pytest.raises(ValidationError):
            parse_poly(text)


@pytest.mark.unit
def test_monic_reducer_agrees_with_long_division():
    """Cached x^e rows reproduce divrem_monic on sparse inputs."""
    modulus = P(1, -1, 0, 1, 0, -1, 1)  # x^6 - x^5 + x^3 - x + 1
    reducer = MonicReducer(modulus, span=40)
    rng = random.Random(3)
    for _ in range(30):
        terms = [(rng.randrange(40), rng.randint(-5, 5)) for _ in range(8)]
        expected = divrem_monic(IntPolynomial.from_terms(terms), modulus)[1]
        assert reducer.remainder(terms) == expected


@pytest.mark.unit
def test_monic_reducer_rejects_power_outside_span():
    reducer = MonicReducer(P(1, 1, 1), span=3)
    with pytest.raises(ValidationError):
        reducer.remainder([(3, 1)])
