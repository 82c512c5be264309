"""
Test partition enumeration and statistics
"""
import pytest

from app.exceptions import BoundExceededError
from app.models import Partition
from app.services.partition_service import (
    epsilon,
    generate_partitions,
    hook_dimension,
    n_stat,
    partition_count,
    partition_stats,
    transpose,
    z_nu,
)


class TestEnumeration:
    def test_reverse_lexicographic_order(self):
        """Test the order of partitions of 4"""
        assert [p.to_list() for p in generate_partitions(4)] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]

    def test_zero_has_one_partition(self):
        """Test that 0 has exactly the empty partition"""
        assert list(generate_partitions(0)) == [Partition()]

    @pytest.mark.parametrize("n,count", [(1, 1), (5, 7), (10, 42), (20, 627)])
    def test_counts_match_euler_recurrence(self, n, count):
        """Test enumeration against Euler's pentagonal recurrence"""
        assert partition_count(n) == count
        assert sum(1 for _ in generate_partitions(n)) == count

    def test_bound_enforced(self, partition_service, test_settings):
        """Test the configured enumeration bound"""
        with pytest.raises(BoundExceededError):
            partition_service.partitions_of(test_settings.partition_bound + 1)


class TestStatistics:
    def test_transpose(self):
        """Test transposition and that it is an involution up to size 12"""
        assert transpose(Partition.of(3, 1)) == Partition.of(2, 1, 1)
        for n in range(13):
            for mu in generate_partitions(n):
                assert transpose(transpose(mu)) == mu
                assert transpose(mu).size == n

    def test_transpose_parity(self):
        """Test mu has only even parts exactly when every multiplicity of mu' is even"""
        for n in range(13):
            for mu in generate_partitions(n):
                conj = transpose(mu)
                assert all(m % 2 == 0 for m in conj.multiplicities.values()) == mu.is_even

    def test_n_stat_of_transpose(self):
        """Test n(mu') = sum mu_i (mu_i - 1) / 2"""
        for n in range(13):
            for mu in generate_partitions(n):
                assert n_stat(transpose(mu)) == sum(p * (p - 1) // 2 for p in mu.parts)

    def test_n_stat(self):
        """Test n(mu) = sum (i-1) mu_i"""
        assert n_stat(Partition.of(2, 1)) == 1
        assert n_stat(Partition.of(1, 1, 1)) == 3
        assert n_stat(Partition()) == 0

    def test_z_and_epsilon(self):
        """Test centralizer order and sign"""
        assert z_nu(Partition.of(2, 2)) == 8
        assert z_nu(Partition.of(3, 1, 1)) == 6
        assert epsilon(Partition.of(2, 1)) == -1
        assert epsilon(Partition.of(2, 2)) == 1

    def test_class_sizes_sum_to_factorial(self):
        """Test sum over nu of n!/z_nu = n!"""
        from math import factorial
        for n in range(1, 9):
            assert sum(factorial(n) // z_nu(nu) for nu in generate_partitions(n)) == factorial(n)

    def test_partition_stats(self):
        """Test the statistics record"""
        stats = partition_stats(Partition.of(4, 2, 2, 1))
        assert stats.ell_even == 3
        assert stats.ell_odd == 1
        assert stats.ell_0mod4 == 1
        assert stats.ell_2mod4 == 2
        assert stats.epsilon == -1
        assert dict(stats.multiplicities) == {1: 1, 2: 2, 4: 1}

    def test_hook_dimension(self):
        """Test degrees from the hook length formula"""
        assert hook_dimension(Partition.of(2, 2)) == 2
        assert hook_dimension(Partition.of(3, 2)) == 5
        assert hook_dimension(Partition.of(3, 2, 1)) == 16
