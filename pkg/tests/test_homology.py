import numpy as np
import pytest

from qclean.codes import Region, css_ells, region_subspace
from qclean.errors import InvariantViolationError
from qclean.generators import example_42, random_css, toric
from qclean.gf2 import BinaryMatrix, BinaryVector
from qclean.homology import (
    ChainComplex2,
    betti1,
    duality_check,
    from_css,
    restricted_class_dim,
)
from qclean.subspaces import Subspace, span


class TestConstruction:
    def test_invariant_rejected(self):
        d1 = BinaryMatrix.from_dense([[1, 0]])
        d2 = BinaryMatrix.from_dense([[1], [0]])
        with pytest.raises(InvariantViolationError):
            ChainComplex2(d2, d1)

    def test_from_css_shapes(self):
        c = example_42(1)
        cx = from_css(c)
        assert (cx.n0, cx.n1, cx.n2) == (1, 2, 0)
        cx2 = from_css(toric(2))
        assert cx2.n1 == 8

    def test_zero_maps(self):
        cx = ChainComplex2(BinaryMatrix.zeros(4, 0), BinaryMatrix.zeros(0, 4))
        assert betti1(cx) == 4


class TestBetti:
    def test_betti_equals_k(self):
        for code in (example_42(1), example_42(3), toric(2), toric(3)):
            assert betti1(from_css(code)) == code.k
        for seed in range(10):
            code = random_css(10, 3, 3, seed=seed)
            assert betti1(from_css(code)) == code.k


class TestRestrictedClasses:
    def test_extremes(self):
        cx = from_css(toric(2))
        for side in ("homology", "cohomology"):
            assert restricted_class_dim(cx, Subspace.full(8), side) == 2
            assert restricted_class_dim(cx, Subspace.zero(8), side) == 0

    def test_explicit_toric_cycle(self):
        # horizontal edges h(0,0)=0 and h(0,1)=1 wrap the torus horizontally
        cx = from_css(toric(2))
        alpha = span([BinaryVector.from_support([0, 1], 8)], 8)
        assert restricted_class_dim(cx, alpha, "homology") == 1

    def test_cross_matches_css_ells(self):
        for seed in range(8):
            code = random_css(9, 3, 2, seed=seed)
            cx = from_css(code)
            rng = np.random.default_rng(seed)
            m = Region(9, [q + 1 for q in range(9) if rng.integers(0, 2)])
            alpha = region_subspace(m, "plain-n")
            e = css_ells(code, m)
            assert restricted_class_dim(cx, alpha, "homology") == e.ell_z
            assert restricted_class_dim(cx, alpha, "cohomology") == e.ell_x


class TestDuality:
    def test_full_alpha(self):
        cx = from_css(toric(2))
        assert duality_check(cx, Subspace.full(8))

    def test_random_complexes(self):
        rng = np.random.default_rng(7)
        for seed in range(40):
            n = int(rng.integers(4, 12))
            code = random_css(n, int(rng.integers(0, 3)), int(rng.integers(0, 3)), seed=seed)
            cx = from_css(code)
            dims = int(rng.integers(0, n + 1))
            alpha = span(
                [
                    BinaryVector.from_bits(rng.integers(0, 2, size=n))
                    for _ in range(dims)
                ],
                n,
            )
            assert duality_check(cx, alpha)
