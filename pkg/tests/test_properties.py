"""Smoke runs of the randomized suites; the full 1000-case runs are part
of the acceptance module."""

import property_suites as ps


def test_eigenvalue_bound_smoke(suite_seed):
    assert ps.suite_eigenvalue_bound(suite_seed, count=120) == []


def test_dichotomy_smoke(suite_seed):
    assert ps.suite_salem_dichotomy(suite_seed, count=120) == []


def test_salem_determinant_smoke(suite_seed):
    violations, salem_count = ps.suite_salem_determinant(suite_seed, count=150)
    assert violations == []
    assert salem_count > 0


def test_express_roundtrip_smoke(suite_seed):
    assert ps.suite_express_roundtrip(suite_seed, count=60) == []


def test_entropy_power_rule_smoke(suite_seed):
    assert ps.suite_entropy_power_rule(suite_seed, count=15) == []


def test_determinant_and_constant_term(suite_seed):
    from salemlat.isometry import char_poly

    for g in ps._corpus(ps.HYPERBOLIC_LATTICES, 80, suite_seed + 3):
        det = g.determinant()
        assert det * det == 1
        phi = char_poly(g)
        assert phi.constant == (-1) ** g.rank * det


def test_infinite_order_radius_dichotomy(suite_seed):
    # infinite order splits: a non-cyclotomic spectral part forces radius
    # beyond 1, while a quasi-unipotent isometry keeps radius exactly 1
    from fractions import Fraction

    from salemlat.intpoly import strip_cyclotomic_factors
    from salemlat.isometry import char_poly, entropy, order

    seen_expanding = 0
    for g in ps._corpus(ps.HYPERBOLIC_LATTICES, 150, suite_seed + 4):
        if order(g) is not None:
            continue
        remainder, _ = strip_cyclotomic_factors(char_poly(g))
        iv = entropy(g, Fraction(1, 10**4))
        if remainder.degree == 0:
            assert iv.lo == 0 and iv.hi == 0
        else:
            assert iv.lo > 0
            seen_expanding += 1
    assert seen_expanding > 0
