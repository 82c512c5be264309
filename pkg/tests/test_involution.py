"""
Test centralizer involutions and weighted sums
"""
from collections import Counter

import pytest

from app.exceptions import BoundExceededError, UnknownNameError, WeightExpressionError
from app.models import InvolutionStats, Partition, SignFamily
from app.services.involution_service import (
    WeightExpression,
    generate_brute_force,
    generate_involutions,
    generate_signed,
    involution_count,
    permutation_stats,
    weighted_involution_sum,
    weighted_signed_sum,
)
from app.services.partition_service import generate_partitions


class TestEnumeration:
    @pytest.mark.parametrize("nu,count", [((1, 1), 2), ((2,), 2), ((1, 1, 1), 4), ((2, 2), 6), ((3,), 1)])
    def test_counts(self, nu, count):
        """Test the number of involutions commuting with w_nu"""
        assert involution_count(Partition(nu)) == count

    def test_matches_brute_force(self):
        """Test structured enumeration against the permutation search, as statistic multisets"""
        for n in range(8):
            for nu in generate_partitions(n):
                structured = Counter(w.stats for w in generate_involutions(nu))
                brute = Counter(permutation_stats(nu, w) for w in generate_brute_force(nu))
                assert structured == brute

    def test_stats_of_rotation(self):
        """Test that the half-turn of an even cycle counts as l2"""
        rotation = next(w for w in generate_involutions(Partition.of(4)) if w.shifts == (2,))
        assert rotation.stats == InvolutionStats(l2=1, l2_0mod4=1)

    def test_filters(self):
        """Test the fixed-point-free filter"""
        assert involution_count(Partition.of(1, 1), "ff") == 1
        assert involution_count(Partition.of(2), "no-even-fixed") == 0
        with pytest.raises(UnknownNameError):
            involution_count(Partition.of(1), "odd")

    def test_bound(self, involution_service, test_settings):
        """Test the brute-force bound"""
        with pytest.raises(BoundExceededError):
            involution_service.brute_force_involutions(Partition((1,) * (test_settings.brute_force_bound + 1)))


class TestWeights:
    def test_minus_two_l1(self):
        """Test sum of (-2)^l1"""
        assert weighted_involution_sum(Partition.of(1, 1), "none", "minus-two-l1") == 5

    def test_expression_equals_named_weight(self):
        """Test that named weights are aliases of expressions"""
        nu = Partition.of(2, 2, 1, 1)
        assert weighted_involution_sum(nu, "none", "(-1)^l2") == weighted_involution_sum(nu, "none", "sign-l2")

    @pytest.mark.parametrize("text", ["", "3^l1", "(-1)^foo", "(-1)^(l1+)", "2^l1/0"])
    def test_malformed(self, text):
        """Test malformed weight expressions"""
        with pytest.raises(WeightExpressionError):
            WeightExpression(text)

    def test_non_integral_half(self):
        """Test a halved statistic that is odd"""
        with pytest.raises(WeightExpressionError):
            weighted_involution_sum(Partition.of(1), "none", "(-1)^(l1/2)")


class TestSignedFamilies:
    def test_plus_family_size(self):
        """Test |Z^nu_{+-inv}| = sum of 2^l1"""
        for n in range(9):
            for nu in generate_partitions(n):
                assert weighted_signed_sum(nu, SignFamily.PLUS) == weighted_involution_sum(nu, "none", "two-l1")

    def test_star_family(self):
        """Test the star family: no odd fixed cycles, signature 0"""
        nu = Partition.of(2)
        signed = list(generate_signed(nu, SignFamily.STAR))
        assert len(signed) == 3
        assert all(s.signature == 0 for s in signed)
        assert weighted_signed_sum(nu, SignFamily.STAR, None, "sign-l2") == 1

    def test_signature_classes(self):
        """Test signature distribution against direct enumeration"""
        nu = Partition.of(2, 1, 1)
        by_signature = Counter(s.signature for s in generate_signed(nu, SignFamily.PLUS))
        for d, count in by_signature.items():
            assert weighted_signed_sum(nu, SignFamily.PLUS, d) == count
        assert weighted_signed_sum(nu, SignFamily.PLUS, 1) == 0

    def test_service_enumeration(self, involution_service):
        """Test the service's signed enumeration against the weighted count"""
        nu = Partition.of(2, 1, 1)
        for d in (-2, 0, 2, 4):
            signed = list(involution_service.enumerate_signed(nu, SignFamily.PLUS, d))
            assert len(signed) == weighted_signed_sum(nu, SignFamily.PLUS, d)
            assert all(s.signature == d for s in signed)
