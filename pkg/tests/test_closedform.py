"""Closed-form layer: spectrum, order, case dispatch, and predicted chains."""

from __future__ import annotations

from math import comb, prod

import pytest

from critgroup.arith import valuation
from critgroup.closedform import (
    GrassmannHypothesis,
    classify_branch,
    critical_group_order,
    grassmann_conclusion,
    laplacian_identity_holds,
    order_valuation,
    predicted_critical_group,
    predicted_elementary_divisors,
    primes_dividing_order,
    spectral_data,
    trivial_profile,
    verify_laplacian_identity,
)
from critgroup.critical import invariant_factors_from_profiles
from critgroup.graphs import kneser_graph, laplacian_matrix, srg_parameters


class TestValuation:
    def test_examples(self):
        assert valuation(8, 2) == 3
        assert valuation(10, 3) == 0
        assert valuation(50, 5) == 2

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            valuation(0, 2)


class TestSpectralData:
    @pytest.mark.parametrize(
        "n,r,s,f,g",
        [(5, 5, 2, 4, 5), (6, 9, 5, 5, 9), (7, 14, 9, 6, 14)],
    )
    def test_values(self, n, r, s, f, g):
        sd = spectral_data(n)
        assert (sd.r, sd.s, sd.f, sd.g) == (r, s, f, g)
        assert sd.zero_multiplicity == 1

    def test_multiplicities_fill_the_graph(self):
        for n in range(5, 30):
            sd = spectral_data(n)
            assert sd.f + sd.g + 1 == comb(n, 2)
            assert sd.r == sd.g  # numerical coincidence for this family

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            spectral_data(4)


class TestOrder:
    def test_petersen(self):
        assert critical_group_order(5) == 2000

    def test_n6(self):
        assert critical_group_order(6) == 7688671875

    def test_matches_computed_group(self, laplacian_of):
        from critgroup.critical import critical_group

        assert critical_group_order(7) == critical_group(laplacian_of(7)).order

    def test_valuations_factor_the_order(self):
        for n in range(5, 20):
            order = critical_group_order(n)
            rebuilt = prod(p ** order_valuation(n, p) for p in primes_dividing_order(n))
            assert rebuilt == order


class TestLaplacianIdentity:
    @pytest.mark.parametrize("n", range(5, 9))
    def test_holds(self, n):
        assert verify_laplacian_identity(n)

    def test_fails_with_wrong_eigenvalue(self):
        sd = spectral_data(5)
        lap = laplacian_matrix(kneser_graph(5))
        mu = srg_parameters(5).mu
        assert laplacian_identity_holds(lap, sd.r, sd.s, mu)
        assert not laplacian_identity_holds(lap, sd.r, 3, mu)


# Branch coverage matrix: (n, p) -> expected branch label.
BRANCH_CASES = [
    (7, 7, "Case 1a"),
    (11, 5, "Case 1b"),
    (8, 5, "Case 1c"),
    (9, 5, "Case 1d"),
    (10, 3, "Case 2a"),
    (13, 3, "Case 2b"),
    (7, 3, "Case 2c"),
    (9, 3, "Case 2d"),
    (12, 3, "Case 2e"),
    (6, 3, "Case 2f"),
    (7, 2, "Case 3a"),
    (5, 2, "Case 3c"),
    (8, 2, "Case 3 d-i"),
    (12, 2, "Case 3 d-ii"),
]


class TestBranchDispatch:
    @pytest.mark.parametrize("n,p,label", BRANCH_CASES)
    def test_expected_branch(self, n, p, label):
        assert classify_branch(n, p).label == label

    def test_trivial_two_branch(self):
        assert classify_branch(6, 2).label == "Case 3b"
        assert order_valuation(6, 2) == 0

    def test_rejects_nondividing_prime(self):
        with pytest.raises(ValueError):
            classify_branch(7, 11)
        with pytest.raises(ValueError):
            predicted_elementary_divisors(7, 11)
        with pytest.raises(ValueError):
            predicted_elementary_divisors(6, 2)

    def test_exactly_one_case1_divisor(self):
        for n in range(5, 60):
            for p in primes_dividing_order(n):
                if p > 3:
                    assert sum(m % p == 0 for m in (n, n - 1, n - 3, n - 4)) == 1

    def test_unreachable_two_adic_configuration(self):
        # v2(n) = 2 forces v2(n - 4) >= 3, so the dead arm never fires.
        for n in range(5, 201):
            for p in primes_dividing_order(n):
                classify_branch(n, p)


class TestPredictedProfiles:
    @pytest.mark.parametrize(
        "n,p,expected",
        [
            (7, 7, {0: 15, 1: 5}),
            (10, 3, {0: 9, 1: 1, 3: 34}),
            (8, 2, {0: 7, 1: 14, 3: 6}),
        ],
    )
    def test_examples(self, n, p, expected):
        prof = predicted_elementary_divisors(n, p)
        assert prof.multiplicities == expected
        assert prof.kernel_rank == 1

    def test_checksums(self):
        for n in range(5, 40):
            sd = spectral_data(n)
            for p in primes_dividing_order(n):
                prof = predicted_elementary_divisors(n, p)
                assert prof.torsion_valuation == order_valuation(n, p)
                assert prof.total_multiplicity == sd.f + sd.g

    def test_trivial_profile(self):
        prof = trivial_profile(7, 11)
        sd = spectral_data(7)
        assert prof.multiplicities == {0: sd.f + sd.g}
        assert prof.kernel_rank == 1


class TestGrassmannConclusion:
    def test_single_bound(self):
        # One bound at level a with value f pins e_a = f - 1, e_0 = g + 1.
        sd = spectral_data(7)
        hyp = GrassmannHypothesis(
            prime=7,
            indices=(1,),
            bounds=(sd.f,),
            d=1 * (sd.f - 1),
            total_dim=sd.f + sd.g + 1,
        )
        prof = grassmann_conclusion(hyp)
        assert prof.multiplicities == {0: sd.g + 1, 1: sd.f - 1}

    def test_two_bounds(self):
        sd = spectral_data(7)
        hyp = GrassmannHypothesis(
            prime=3,
            indices=(1, 2),
            bounds=(sd.g + 1, sd.g),
            d=2 * sd.g - 1,
            total_dim=sd.f + sd.g + 1,
        )
        prof = grassmann_conclusion(hyp)
        assert prof.multiplicities == {0: sd.f, 1: 1, 2: sd.g - 1}

    def test_no_torsion(self):
        sd = spectral_data(7)
        hyp = GrassmannHypothesis(
            prime=11, indices=(), bounds=(), d=0, total_dim=sd.f + sd.g + 1
        )
        prof = grassmann_conclusion(hyp)
        assert prof.multiplicities == {0: sd.f + sd.g}

    def test_inconsistent_hypothesis_rejected(self):
        with pytest.raises(ValueError):
            grassmann_conclusion(
                GrassmannHypothesis(prime=5, indices=(1,), bounds=(4,), d=99, total_dim=10)
            )

    def test_bad_shapes_rejected(self):
        with pytest.raises(ValueError):
            grassmann_conclusion(
                GrassmannHypothesis(prime=5, indices=(2, 1), bounds=(4, 3), d=0, total_dim=10)
            )
        with pytest.raises(ValueError):
            grassmann_conclusion(
                GrassmannHypothesis(prime=5, indices=(1,), bounds=(3, 2), d=0, total_dim=10)
            )


class TestPredictedGroup:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (5, (2, 10, 10, 10)),
            (6, (5, 5, 5, 15, 45, 45, 45, 45)),
            (7, (3, 9, 9, 9, 9, 9, 9, 9, 18, 126, 126, 126, 126, 126)),
        ],
    )
    def test_examples(self, n, expected):
        group = predicted_critical_group(n)
        assert group.normalized() == expected

    def test_parity(self):
        assert predicted_critical_group(5).parity == "odd"
        assert predicted_critical_group(6).parity == "even"

    def test_order_consistency(self):
        for n in range(5, 41):
            group = predicted_critical_group(n)
            assert prod(group.normalized()) == critical_group_order(n)

    def test_divisibility_chain(self):
        for n in range(5, 41):
            chain = predicted_critical_group(n).normalized()
            for a, b in zip(chain, chain[1:]):
                assert b % a == 0

    def test_profiles_regroup_to_group(self):
        for n in range(5, 41):
            profiles = [predicted_elementary_divisors(n, p) for p in primes_dividing_order(n)]
            assert invariant_factors_from_profiles(profiles) == predicted_critical_group(n).normalized()

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            predicted_critical_group(4)
