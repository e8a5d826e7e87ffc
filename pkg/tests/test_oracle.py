import numpy as np
import pytest

from qclean.codes import (
    Region,
    css_ells,
    css_to_stabilizer,
    distance_brute,
    stab_ell,
    subsystem_gs,
)
from qclean.generators import example_42, random_css, random_stabilizer, random_subsystem, toric
from qclean.lattice import AbelianGroup, Bicharacter, all_subgroups, dagger
from qclean.oracle import (
    brute_distance,
    css_ells_brute,
    enum_subspace_dim,
    stab_ell_brute,
    subgroup_dagger_brute,
    subsystem_gs_brute,
)


def random_regions(rng, n, count):
    for _ in range(count):
        yield Region(n, [q + 1 for q in range(n) if rng.integers(0, 2)])


class TestEnumSubspaceDim:
    def test_trivial(self):
        assert enum_subspace_dim(lambda v: True, 4) == 4
        assert enum_subspace_dim(lambda v: v.is_zero(), 4) == 0

    def test_kernel_example(self):
        c = example_42(2)
        assert enum_subspace_dim(lambda v: c.hx.mv(v).is_zero(), 4) == 2

    def test_non_subspace_rejected(self):
        with pytest.raises(ValueError):
            enum_subspace_dim(lambda v: v.weight == 1, 3)


class TestDistanceOracle:
    def test_fixtures(self):
        rep = random_stabilizer(3, 0, seed=0)  # k = 3, distance 1
        assert brute_distance(rep) == 1 == distance_brute(rep)
        t2 = css_to_stabilizer(toric(2))
        assert brute_distance(t2) == 2

    def test_lagrangian_none(self):
        code = random_stabilizer(4, 4, seed=3)
        assert brute_distance(code) is None

    def test_agreement_random(self):
        for seed in range(6):
            code = random_stabilizer(4, int(seed % 4), seed=seed)
            assert brute_distance(code) == distance_brute(code)


class TestEllOracles:
    def test_stab_ell_agreement(self):
        rng = np.random.default_rng(1)
        for seed in range(5):
            code = random_stabilizer(5, 2, seed=seed)
            for m in random_regions(rng, 5, 4):
                assert stab_ell_brute(code, m) == stab_ell(code, m)

    def test_css_ells_agreement(self):
        rng = np.random.default_rng(2)
        for seed in range(4):
            code = random_css(6, 2, 2, seed=seed)
            for m in random_regions(rng, 6, 4):
                assert css_ells_brute(code, m) == tuple(css_ells(code, m))

    def test_subsystem_agreement(self):
        rng = np.random.default_rng(3)
        for seed in range(4):
            code = random_subsystem(4, 3, seed=seed)
            for m in random_regions(rng, 4, 4):
                assert subsystem_gs_brute(code, m) == subsystem_gs(code, m)


class TestDaggerOracle:
    def test_agreement_all_subgroups(self):
        for moduli in ((2, 2), (4, 2), (3, 3), (2, 6)):
            g = AbelianGroup(moduli)
            chi = Bicharacter.product(g, [1] * len(moduli))
            for h in all_subgroups(g):
                assert subgroup_dagger_brute(h, chi) == dagger(h, chi)
