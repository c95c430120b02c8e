import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salemlat.intpoly import (
    DegreeBoundError,
    EndpointRootError,
    IntPolynomial,
    NotReciprocalError,
    OddDegreeError,
    count_real_roots,
    count_roots_outside_unit_circle,
    cyclotomic_order,
    cyclotomic_polynomial,
    euler_phi,
    is_cyclotomic_product,
    is_irreducible_over_integers,
    is_reciprocal,
    monic_irreducible_factors,
    poly_from_string,
    squarefree_decomposition,
    strip_cyclotomic_factors,
    sturm_count,
    trace_polynomial,
)
from salemlat.rational import RationalInterval

from oracles import divides_x_power_minus_one, sympy_factor_multiset

P = IntPolynomial.from_coeffs


def interval(a, b):
    return RationalInterval(Fraction(a), Fraction(b))


class TestArithmetic:
    def test_mul_and_exact_div_roundtrip(self):
        a = P([1, 2, 3])
        b = P([-4, 0, 1, 5])
        assert (a * b).exact_div(b) == a

    def test_parse(self):
        assert poly_from_string("1,-1,-1,-1,1").coeffs == (1, -1, -1, -1, 1)

    def test_derivative(self):
        assert P([5, 0, 3]).derivative() == P([0, 6])


class TestReciprocal:
    def test_salem_quartic_is_reciprocal(self):
        assert is_reciprocal(poly_from_string("1,-1,-1,-1,1"))

    def test_non_palindrome(self):
        assert not is_reciprocal(P([2, -3, 1]))

    def test_constant_degenerate_palindrome(self):
        assert is_reciprocal(P([1]))


class TestSturm:
    def test_sqrt2_in_0_2(self):
        assert sturm_count(P([-2, 0, 1]), interval(0, 2)) == 1

    def test_no_real_roots(self):
        assert sturm_count(P([1, 0, 1]), interval(-10, 10)) == 0

    def test_quadratic_root_location(self):
        # y^2 - y - 3 has roots (1 +- sqrt(13)) / 2, only (1 + sqrt 13)/2 in (2, 10)
        assert sturm_count(P([-3, -1, 1]), interval(2, 10)) == 1
        assert sturm_count(P([-3, -1, 1]), interval(-10, 2)) == 1

    def test_endpoint_root_error(self):
        with pytest.raises(EndpointRootError):
            sturm_count(P([-4, 0, 1]), interval(2, 5))

    def test_count_all_real(self):
        assert count_real_roots(P([-3, -1, 1])) == 2
        assert count_real_roots(P([1, 0, 1])) == 0


class TestIrreducibility:
    def test_quadratic_cyclotomic(self):
        assert is_irreducible_over_integers(P([1, 1, 1]))

    def test_x4_minus_1(self):
        assert not is_irreducible_over_integers(P([-1, 0, 0, 0, 1]))

    def test_quartic_reciprocal(self):
        assert is_irreducible_over_integers(P([1, -1, -2, -1, 1]))

    def test_degree_bound(self):
        with pytest.raises(DegreeBoundError):
            is_irreducible_over_integers(P([1] + [0] * 24 + [1]))

    def test_against_sympy_on_random_products(self, suite_seed):
        rng = random.Random(suite_seed)
        small = [P([1, 1]), P([-1, 1]), P([1, 1, 1]), P([1, -1, 1]),
                 P([1, -6, 1]), P([1, -1, -1, -1, 1]), P([2, 3, 1, 1]),
                 P([1, 0, 0, 1, 1]), P([-1, -1, 0, 0, 1])]
        for _ in range(40):
            parts = [rng.choice(small) for _ in range(rng.randint(1, 3))]
            prod = P([1])
            for part in parts:
                prod = prod * part
            expected = sympy_factor_multiset(prod)
            got = sorted(
                (f.coeffs, m) for f, m in monic_irreducible_factors(prod))
            assert got == expected
            assert is_irreducible_over_integers(prod) == (len(expected) == 1
                                                          and expected[0][1] == 1)


class TestCyclotomic:
    def test_third_roots(self):
        assert is_cyclotomic_product(P([1, 1, 1]))

    def test_x_minus_one(self):
        assert is_cyclotomic_product(P([-1, 1]))

    def test_golden_ratio_square(self):
        assert not is_cyclotomic_product(P([1, -3, 1]))

    def test_orders(self):
        assert cyclotomic_order(P([1, 1, 1])) == 3
        assert cyclotomic_order(P([1, 1])) == 2
        assert cyclotomic_order(poly_from_string("1,-1,-1,-1,1")) is None

    def test_divisibility_cross_check(self):
        # graeffe route agrees with the p | x^k - 1 route
        samples = [P([1, 1, 1]), P([-1, 1]), P([1, 0, 1]), P([1, -3, 1]),
                   P([1, -1, 1]) * P([1, 1]), P([1, -6, 1]),
                   cyclotomic_polynomial(12) * cyclotomic_polynomial(5),
                   poly_from_string("1,-1,-1,-1,1")]
        for p in samples:
            orders = [n for n, _ in strip_cyclotomic_factors(p)[1]]
            from math import lcm

            bound = lcm(*orders) if orders else 1
            assert is_cyclotomic_product(p) == divides_x_power_minus_one(
                p, bound if strip_cyclotomic_factors(p)[0].degree == 0 else bound + 4)

    def test_phi(self):
        assert euler_phi(1) == 1
        assert euler_phi(12) == 4
        assert euler_phi(66) == 20

    def test_phi_multiplicative(self):
        for a, b in [(3, 4), (5, 8), (7, 9), (11, 4)]:
            assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)

    def test_cyclotomic_degree_is_phi(self):
        for n in range(1, 40):
            assert cyclotomic_polynomial(n).degree == euler_phi(n)


class TestTracePolynomial:
    def test_x2_plus_1(self):
        assert trace_polynomial(P([1, 0, 1])) == P([0, 1])

    def test_x4_plus_1(self):
        assert trace_polynomial(P([1, 0, 0, 0, 1])) == P([-2, 0, 1])

    def test_salem_quartic(self):
        assert trace_polynomial(poly_from_string("1,-1,-1,-1,1")) == P([-3, -1, 1])

    def test_not_reciprocal(self):
        with pytest.raises(NotReciprocalError):
            trace_polynomial(P([2, -3, 1]))

    def test_odd_degree(self):
        with pytest.raises(OddDegreeError):
            trace_polynomial(P([1, 0, 0, 1]))

    @given(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=5))
    @settings(max_examples=200, deadline=None)
    def test_reconstruction_identity(self, half):
        # build a monic reciprocal p of even degree and verify
        # p(x) = x^n q(x + 1/x) as the exact identity
        # p = x^n q(x + 1/x)  <=>  p == sum q_k x^(n-k) (x^2+1)^k
        body = [1] + half + list(reversed(half[:-1])) + [1]
        p = P(body)
        if p.degree % 2 or not is_reciprocal(p) or not p.is_monic:
            return
        q = trace_polynomial(p)
        n = p.degree // 2
        acc = IntPolynomial.zero()
        x2p1 = P([1, 0, 1])
        for k, c in enumerate(q.coeffs):
            term = P([c])
            for _ in range(k):
                term = term * x2p1
            shift = [0] * (n - k) + list(term.coeffs)
            acc = acc + P(shift)
        assert acc == p


class TestSquarefreeAndCounting:
    def test_squarefree_decomposition(self):
        f = P([1, 1])  # x + 1
        g = P([1, -6, 1])
        prod = f * f * g
        parts = dict()
        for q, k in squarefree_decomposition(prod):
            parts[k] = q
        assert parts[2] == f
        assert parts[1] == g

    def test_count_outside_unit_circle(self):
        assert count_roots_outside_unit_circle(P([1, -6, 1])) == 1
        assert count_roots_outside_unit_circle(poly_from_string("1,-1,-1,-1,1")) == 1
        assert count_roots_outside_unit_circle(P([1, 1, 1])) == 0
        pell_sq = P([1, -6, 1]) * P([1, -6, 1])
        assert count_roots_outside_unit_circle(pell_sq) == 2
        unipotent = P([-1, 1]) * P([-1, 1])
        assert count_roots_outside_unit_circle(unipotent) == 0
