import random

import pytest

from salemlat import linalg

from oracles import sympy_charpoly, sympy_invariant_factors


def random_matrix(rng, m, n, lo=-30, hi=30):
    return tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(m))


class TestSmithNormalForm:
    def test_identity(self):
        ident = linalg.identity(3)
        _, d, _ = linalg.smith_normal_form(ident)
        assert d == ident

    def test_a2_gram(self):
        _, d, _ = linalg.smith_normal_form(((2, 1), (1, 2)))
        assert (d[0][0], d[1][1]) == (1, 3)

    def test_already_diagonal(self):
        _, d, _ = linalg.smith_normal_form(((2, 0), (0, 2)))
        assert (d[0][0], d[1][1]) == (2, 2)

    def test_postconditions_on_randoms(self, suite_seed):
        rng = random.Random(suite_seed)
        for _ in range(150):
            m = rng.randint(1, 6)
            n = rng.randint(1, 6)
            a = random_matrix(rng, m, n)
            u, d, v = linalg.smith_normal_form(a)
            assert linalg.mat_mul(linalg.mat_mul(u, a), v) == d
            assert linalg.det_bareiss(u) in (1, -1)
            assert linalg.det_bareiss(v) in (1, -1)
            diag = [d[i][i] for i in range(min(m, n))]
            nz = [x for x in diag if x]
            assert all(x > 0 for x in nz)
            for x, y in zip(nz, nz[1:]):
                assert y % x == 0
            for i in range(m):
                for j in range(n):
                    if i != j:
                        assert d[i][j] == 0
            assert diag == sympy_invariant_factors(a)


class TestHermite:
    def test_span_equality_detection(self, suite_seed):
        rng = random.Random(suite_seed + 1)
        for _ in range(60):
            n = rng.randint(2, 5)
            r = rng.randint(1, n)
            a = random_matrix(rng, r, n, -9, 9)
            if linalg.rational_rank(a) != r:
                continue
            # unimodular recombination spans the same sublattice
            u = linalg.identity(r)
            for _ in range(6):
                i, j = rng.randrange(r), rng.randrange(r)
                if i != j:
                    u = tuple(
                        tuple(u[a_][b_] + (rng.randint(-2, 2) if a_ == i else 0)
                              * u[j][b_] for b_ in range(r)) for a_ in range(r))
            b = linalg.mat_mul(u, a)
            if linalg.det_bareiss(u) in (1, -1):
                assert (linalg.hermite_normal_form(a)
                        == linalg.hermite_normal_form(b))


class TestCharPoly:
    def test_pell(self):
        assert linalg.charpoly_coeffs(((3, 4), (2, 3))) == [1, -6, 1]

    def test_identity_rank2(self):
        assert linalg.charpoly_coeffs(((1, 0), (0, 1))) == [1, -2, 1]

    def test_against_sympy(self, suite_seed):
        rng = random.Random(suite_seed + 2)
        for _ in range(40):
            n = rng.randint(1, 6)
            a = random_matrix(rng, n, n, -8, 8)
            assert linalg.charpoly_coeffs(a) == sympy_charpoly(a)

    def test_det_consistency(self, suite_seed):
        rng = random.Random(suite_seed + 3)
        for _ in range(40):
            n = rng.randint(1, 6)
            a = random_matrix(rng, n, n, -8, 8)
            coeffs = linalg.charpoly_coeffs(a)
            det = linalg.det_bareiss(a)
            assert coeffs[0] == (-1) ** n * det


class TestKernelAndInverse:
    def test_kernel_annihilates(self, suite_seed):
        rng = random.Random(suite_seed + 4)
        for _ in range(60):
            m = rng.randint(1, 5)
            n = rng.randint(1, 5)
            a = random_matrix(rng, m, n, -6, 6)
            for row in linalg.integer_kernel(a):
                assert all(
                    sum(a[i][j] * row[j] for j in range(n)) == 0
                    for i in range(m))

    def test_unimodular_inverse(self):
        a = ((1, 2), (0, 1))
        assert linalg.mat_mul(a, linalg.unimodular_inverse(a)) == linalg.identity(2)

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            linalg.unimodular_inverse(((2, 0), (0, 1)))

    def test_fraction_solve_inconsistent(self):
        assert linalg.fraction_solve(((1, 0), (1, 0)), (1, 2)) is None

    def test_adjugate(self):
        a = ((2, 1), (1, 2))
        adj = linalg.adjugate(a)
        assert adj == ((2, -1), (-1, 2))
