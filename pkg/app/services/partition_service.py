"""
Partition enumeration and scalar statistics
"""
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Tuple

from app.config import Settings, settings
from app.exceptions import check_bound
from app.models import Partition, PartitionStats


def transpose(mu: Partition) -> Partition:
    if not mu.parts:
        return Partition()
    return Partition(tuple(sum(1 for p in mu.parts if p > i) for i in range(mu.parts[0])))


def n_stat(mu: Partition) -> int:
    """n(mu) = sum (i-1) mu_i"""
    return sum(i * p for i, p in enumerate(mu.parts))


def partition_stats(nu: Partition) -> PartitionStats:
    mults = nu.multiplicities
    ell_even = sum(1 for p in nu.parts if p % 2 == 0)
    return PartitionStats(
        multiplicities=tuple(sorted(mults.items())),
        is_even=nu.is_even,
        ell_even=ell_even,
        ell_odd=nu.length - ell_even,
        ell_0mod4=sum(1 for p in nu.parts if p % 4 == 0),
        ell_2mod4=sum(1 for p in nu.parts if p % 4 == 2),
        z=z_nu(nu),
        epsilon=-1 if ell_even % 2 else 1,
    )


def z_nu(nu: Partition) -> int:
    return prod(i ** m * factorial(m) for i, m in nu.multiplicities.items())


def epsilon(nu: Partition) -> int:
    """Sign of a permutation of cycle type nu"""
    return -1 if sum(1 for p in nu.parts if p % 2 == 0) % 2 else 1


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def generate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order, unbounded"""
    for parts in _partitions(n, n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal number recurrence"""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def hook_dimension(mu: Partition) -> int:
    """Degree of the irreducible character labelled mu, by the hook length formula"""
    conj = transpose(mu)
    hooks = prod(
        (row - j - 1) + (conj.parts[j] - i - 1) + 1
        for i, row in enumerate(mu.parts)
        for j in range(row)
    )
    return factorial(mu.size) // hooks


class PartitionService:
    def __init__(self, config: Settings = settings):
        self.config = config

    def partitions_of(self, n: int) -> Iterator[Partition]:
        """Enumerate partitions of n within the configured bound"""
        check_bound("n", n, self.config.partition_bound)
        return generate_partitions(n)

    def transpose(self, mu: Partition) -> Partition:
        """Transpose partition"""
        return transpose(mu)

    def n_stat(self, mu: Partition) -> int:
        """n(mu)"""
        return n_stat(mu)

    def stats(self, nu: Partition) -> PartitionStats:
        """Scalar statistics of nu"""
        return partition_stats(nu)
