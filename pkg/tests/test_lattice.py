from fractions import Fraction

import numpy as np
import pytest

from qclean.lattice import (
    AbelianGroup,
    Bicharacter,
    GradedLatticeInstance,
    Subgroup,
    abelian_cl,
    abelian_cl_alternative,
    abelian_isomorphism_classes,
    all_subgroups,
    complement_factors,
    dagger,
    factor_subgroup,
    generated_subgroup,
    subgroup_join,
    subgroup_meet,
    verify_graded_identity,
    verify_graded_identity_exhaustive,
)


class TestAbelianGroup:
    def test_encode_decode_roundtrip(self):
        g = AbelianGroup([4, 2, 3])
        for x in range(g.order):
            assert g.encode(g.decode(x)) == x

    def test_add_neg(self):
        g = AbelianGroup([4, 3])
        a = g.encode([3, 2])
        b = g.encode([2, 2])
        assert g.decode(g.add(a, b)) == (1, 1)
        assert g.add(a, g.neg(a)) == 0

    def test_order(self):
        assert AbelianGroup([2, 6]).order == 12


class TestSubgroups:
    def test_generated_and_closure(self):
        g = AbelianGroup([4, 4])
        h = generated_subgroup(g, [g.encode([2, 0]), g.encode([0, 2])])
        assert h.order == 4
        with pytest.raises(ValueError):
            Subgroup(g, [g.encode([1, 0])])  # not closed

    def test_meet_join(self):
        g = AbelianGroup([2, 2])
        a = generated_subgroup(g, [g.encode([1, 0])])
        b = generated_subgroup(g, [g.encode([0, 1])])
        assert subgroup_meet(a, b).order == 1
        assert subgroup_join(a, b).order == 4

    @pytest.mark.parametrize(
        "moduli,count",
        [([4], 3), ([2, 2], 5), ([6], 4), ([2, 6], 10), ([4, 4], 15), ([2, 2, 2], 16)],
    )
    def test_subgroup_counts(self, moduli, count):
        g = AbelianGroup(moduli)
        subs = all_subgroups(g)
        assert len(subs) == count
        assert len(set(subs)) == count

    def test_factor_subgroup(self):
        g = AbelianGroup([2, 3])
        bm = factor_subgroup(g, [1])
        assert bm.order == 2
        assert complement_factors(g, [1]) == [2]
        assert factor_subgroup(g, [1, 2]).order == 6


class TestBicharacter:
    def test_product_pairing_symmetric(self):
        g = AbelianGroup([4, 4])
        chi = Bicharacter.product(g, [1, 1])
        a, b = g.encode([1, 0]), g.encode([1, 0])
        assert chi.pair_exponent(a, b) == 1  # exp(2 pi i / 4) exponent in Z/4
        assert chi.pair_exponent(a, g.encode([0, 1])) == 0

    def test_antisymmetric_matrix_pairing(self):
        g = AbelianGroup([3, 3])
        chi = Bicharacter.from_matrix(g, [[0, 1], [-1, 0]])
        a, b = g.encode([1, 0]), g.encode([0, 1])
        assert chi.pair_exponent(a, b) == 1
        assert chi.pair_exponent(b, a) == 2  # inverse root: involutive overall
        assert chi.pair_exponent(a, a) == 0

    def test_degenerate_rejected(self):
        g = AbelianGroup([2, 2])
        with pytest.raises(ValueError):
            Bicharacter.from_matrix(g, [[1, 0], [0, 0]])

    def test_non_coprime_multiplier_rejected(self):
        g = AbelianGroup([4])
        with pytest.raises(ValueError):
            Bicharacter.product(g, [2])

    def test_dagger_properties(self):
        g = AbelianGroup([2, 6])
        chi = Bicharacter.product(g, [1, 1])
        for h in all_subgroups(g):
            hd = dagger(h, chi)
            assert hd.order * h.order == g.order  # nondegenerate pairing
            assert dagger(hd, chi) == h


class TestGradedIdentity:
    def test_subgroup_lattice_instance(self):
        g = AbelianGroup([4, 4])
        chi = Bicharacter.product(g, [1, 1])
        lat = GradedLatticeInstance.subgroup_lattice(g, chi)
        subs = all_subgroups(g)
        for h in subs:
            if not h <= dagger(h, chi):
                continue
            for alpha in subs:
                assert verify_graded_identity(lat, h, h, alpha)

    def test_exhaustive_small_groups(self):
        for moduli in ((2, 2), (8,), (3, 3), (2, 4)):
            g = AbelianGroup(moduli)
            chi = Bicharacter.product(g, [1] * len(moduli))
            assert verify_graded_identity_exhaustive(g, chi) > 0

    def test_isomorphism_classes(self):
        classes = list(abelian_isomorphism_classes(8))
        # orders 2..8: 1,1,2,1,1,1,3 classes
        assert len(classes) == 10
        assert (4,) in classes and (2, 2) in classes and (2, 2, 2) in classes


class TestAbelianCleaning:
    def test_cl_identity_z2z2(self):
        g = AbelianGroup([2, 2])
        chi = Bicharacter.product(g, [1, 1])
        h = Subgroup.trivial(g)
        res = abelian_cl(g, chi, h, [1])
        assert res.ell_m * res.ell_mc == res.quotient == Fraction(4)

    def test_cl_requires_h_below_dagger(self):
        g = AbelianGroup([2, 2])
        chi = Bicharacter.product(g, [1, 1])
        h = generated_subgroup(g, [g.encode([1, 0])])
        assert not h <= dagger(h, chi)
        with pytest.raises(ValueError):
            abelian_cl(g, chi, h, [1])

    def test_alternative_witnesses(self):
        g = AbelianGroup([2, 2])
        chi = Bicharacter.product(g, [1, 1])
        h = Subgroup.trivial(g)
        alt = abelian_cl_alternative(g, chi, h, [1])
        # B_M = <(1,0)> contains the nontrivial element (1,0) of H-dagger = G
        assert alt.outcome == "nontrivial-supported"
        assert g.decode(alt.witness) == (1, 0)

    def test_alternative_all_cleanable(self):
        g = AbelianGroup([4, 4])
        chi = Bicharacter.product(g, [1, 1])
        h = generated_subgroup(g, [g.encode([2, 0]), g.encode([0, 2])])
        alt = abelian_cl_alternative(g, chi, h, [1])
        assert alt.outcome == "all-cleanable"
        bmc = factor_subgroup(g, [2])
        for coset_min, witness in alt.witnesses.items():
            assert witness in bmc
            assert g.add(coset_min, g.neg(witness)) in h

    def test_exhaustive_small(self):
        for moduli in ((2, 2), (3, 3)):
            g = AbelianGroup(moduli)
            chi = Bicharacter.product(g, [1] * len(moduli))
            for h in all_subgroups(g):
                if not h <= dagger(h, chi):
                    continue
                for bits in range(1 << len(moduli)):
                    factors = [i + 1 for i in range(len(moduli)) if bits >> i & 1]
                    res = abelian_cl(g, chi, h, factors)
                    assert res.ell_m * res.ell_mc == res.quotient
