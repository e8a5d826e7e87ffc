import itertools

import numpy as np
import pytest

from qclean.gf2 import BinaryVector
from qclean.subspaces import (
    BilinearForm,
    Subspace,
    h_sigma,
    lagrangian_of,
    q_sigma_duality_check,
    quotient_dim,
    rho,
    span,
    verify_factor_annihilator,
    verify_orthospace_identity,
)


def random_subspace(rng, ambient, dim):
    return span(
        [BinaryVector.from_bits(rng.integers(0, 2, size=ambient)) for _ in range(dim)],
        ambient,
    )


def random_isotropic(rng, d, form, steps):
    sigma = Subspace.zero(d)
    for _ in range(steps):
        cand = random_subspace(rng, d, 1)
        trial = sigma + (sigma.annihilator(form) & cand)
        if trial.is_isotropic(form):
            sigma = trial
    return sigma


class TestSubspaceLattice:
    def test_canonical_equality(self):
        a = span([[1, 1, 0], [0, 1, 1]], 3)
        b = span([[1, 0, 1], [0, 1, 1]], 3)  # same span, different generators
        assert a == b and hash(a) == hash(b)

    def test_sum_and_intersection_dims(self):
        rng = np.random.default_rng(17)
        for _ in range(40):
            a = random_subspace(rng, 8, int(rng.integers(0, 6)))
            b = random_subspace(rng, 8, int(rng.integers(0, 6)))
            # inclusion-exclusion for dimensions
            assert (a + b).dim + (a & b).dim == a.dim + b.dim
            assert (a & b) <= a and (a & b) <= b
            assert a <= (a + b)

    def test_intersection_matches_element_count(self):
        rng = np.random.default_rng(23)
        for _ in range(15):
            a = random_subspace(rng, 6, 3)
            b = random_subspace(rng, 6, 3)
            elems_a = set(a.vectors())
            common = sum(1 for v in b.vectors() if v in elems_a)
            assert 1 << (a & b).dim == common

    def test_contains_and_reduce(self):
        a = span([[1, 1, 0, 0], [0, 0, 1, 1]], 4)
        assert a.contains(BinaryVector.from_bits([1, 1, 1, 1]))
        assert not a.contains(BinaryVector.from_bits([1, 0, 0, 0]))
        r = a.reduce(BinaryVector.from_bits([1, 1, 1, 0]))
        assert a.contains(BinaryVector.from_bits([1, 1, 1, 0]) ^ r)

    def test_quotient_dim_and_rho(self):
        big = span([[1, 0, 0], [0, 1, 0]], 3)
        small = span([[1, 1, 0]], 3)
        assert quotient_dim(big, small) == 1
        with pytest.raises(ValueError):
            quotient_dim(small, Subspace.full(3))
        assert rho(big, small) == 1


class TestAnnihilators:
    @pytest.mark.parametrize("kind", ["euclidean", "symplectic"])
    def test_double_annihilator(self, kind):
        rng = np.random.default_rng(29)
        d = 8
        form = BilinearForm(kind, d)
        for _ in range(20):
            a = random_subspace(rng, d, int(rng.integers(0, d + 1)))
            ann = a.annihilator(form)
            assert a.dim + ann.dim == d
            assert ann.annihilator(form) == a

    def test_annihilator_reverses_and_de_morgan(self):
        rng = np.random.default_rng(31)
        form = BilinearForm.euclidean_dot(7)
        for _ in range(20):
            a = random_subspace(rng, 7, 3)
            b = random_subspace(rng, 7, 3)
            assert (a + b).annihilator(form) == a.annihilator(form) & b.annihilator(form)

    def test_symplectic_pair_values(self):
        form = BilinearForm.symplectic(4)
        x1 = BinaryVector.from_bits([1, 0, 0, 0])
        z1 = BinaryVector.from_bits([0, 0, 1, 0])
        z2 = BinaryVector.from_bits([0, 0, 0, 1])
        assert form.pair(x1, z1) == 1
        assert form.pair(x1, z2) == 0
        assert form.pair(x1, x1) == 0


class TestHSigma:
    def test_h_sigma_sandwich(self):
        rng = np.random.default_rng(37)
        form = BilinearForm.symplectic(8)
        for _ in range(30):
            sigma = random_isotropic(rng, 8, form, 4)
            beta = random_subspace(rng, 8, int(rng.integers(0, 9)))
            h = h_sigma(sigma, beta, form)
            assert sigma <= h and h <= sigma.annihilator(form)

    def test_h_sigma_extremes(self):
        form = BilinearForm.symplectic(6)
        sigma = span([[1, 0, 0, 0, 0, 0]], 6)
        assert h_sigma(sigma, Subspace.zero(6), form) == sigma
        assert h_sigma(sigma, Subspace.full(6), form) == sigma.annihilator(form)

    def test_q_sigma_duality(self):
        rng = np.random.default_rng(41)
        for m in (2, 3, 4):
            form = BilinearForm.symplectic(2 * m)
            for _ in range(20):
                sigma = random_isotropic(rng, 2 * m, form, m)
                beta = random_subspace(rng, 2 * m, int(rng.integers(0, 2 * m + 1)))
                assert q_sigma_duality_check(sigma, beta, form)

    def test_non_isotropic_rejected(self):
        form = BilinearForm.symplectic(4)
        sigma = span([[1, 0, 0, 0], [0, 0, 1, 0]], 4)
        with pytest.raises(ValueError):
            h_sigma(sigma, Subspace.zero(4), form)


class TestLagrangian:
    def test_lagrangian_is_lagrangian(self):
        rng = np.random.default_rng(43)
        for n in (2, 4, 6):
            form = BilinearForm.symplectic(2 * n)
            for _ in range(10):
                zeta = random_subspace(rng, n, int(rng.integers(0, n + 1)))
                lag = lagrangian_of(zeta)
                assert lag.dim == n
                assert lag.annihilator(form) == lag


class TestExerciseIdentities:
    def test_orthospace_identity(self):
        rng = np.random.default_rng(47)
        for _ in range(30):
            n = int(rng.integers(2, 8))
            form = BilinearForm.euclidean_dot(n)
            eta = random_subspace(rng, n, int(rng.integers(0, n + 1)))
            xi = eta.annihilator(form) & random_subspace(rng, n, int(rng.integers(0, n + 1)))
            alpha = random_subspace(rng, n, int(rng.integers(0, n + 1)))
            assert verify_orthospace_identity(xi, eta, alpha, form)

    def test_factor_annihilator(self):
        rng = np.random.default_rng(53)
        for _ in range(30):
            n = int(rng.integers(2, 8))
            form = BilinearForm.euclidean_dot(n)
            eta = random_subspace(rng, n, int(rng.integers(0, n + 1)))
            xi = eta.annihilator(form) & random_subspace(rng, n, int(rng.integers(0, n + 1)))
            alpha = random_subspace(rng, n, int(rng.integers(0, n + 1)))
            assert verify_factor_annihilator(xi, eta, alpha)
