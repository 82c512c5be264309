"""
Test signed tableaux
"""
from itertools import combinations, groupby, permutations, product

import pytest

from app.exceptions import BoundExceededError, UnknownNameError
from app.models import Partition
from app.services.partition_service import generate_partitions
from app.services.tableau_service import (
    fixed_counts,
    generate_tableaux,
    m_statistic,
    phi,
    psi,
    signature_distribution,
    star_sign_closed_form,
    star_sign_sum,
    strip_chain_total,
    tableau_count,
    vertical_strip_count,
    vertical_strip_removals,
)


class TestEnumeration:
    def test_count_is_product(self):
        """Test |T(mu)| = prod(m_i + 1)"""
        assert tableau_count(Partition.of(1, 1)) == 3
        assert tableau_count(Partition.of(2, 1)) == 4
        assert tableau_count(Partition.of(3, 3, 2, 1)) == 3 * 2 * 2

    def test_signature_distribution(self):
        """Test signatures of shape (2,1)"""
        assert signature_distribution(Partition.of(2, 1)) == {1: 2, -1: 2}
        assert tableau_count(Partition.of(1, 1), 0) == 1

    def test_involutions_are_involutive(self):
        """Test phi^2 = psi^2 = 1 and that phi and psi commute"""
        for tableau in generate_tableaux(Partition.of(3, 2, 2, 1)):
            assert phi(phi(tableau)) == tableau
            assert psi(psi(tableau)) == tableau
            assert phi(psi(tableau)) == psi(phi(tableau))


class TestFixedCounts:
    def test_small_shapes(self):
        """Test fixed counts of (2,1) and (2,2)"""
        assert fixed_counts(Partition.of(2, 1)).psi == 0
        counts = fixed_counts(Partition.of(2, 2))
        assert (counts.phi, counts.psi, counts.phipsi) == (1, 1, 3)

    def test_closed_forms_hold(self):
        """Test that enumeration agrees with the closed forms up to size 10"""
        for n in range(11):
            for mu in generate_partitions(n):
                fixed_counts(mu)

    def test_unknown_involution(self, tableau_service):
        """Test an unknown involution name"""
        with pytest.raises(UnknownNameError):
            tableau_service.fixed_by(Partition.of(2), "chi")


class TestVerticalStrips:
    def test_small_counts(self):
        """Test strip removals from (1,1) and (2,1)"""
        assert vertical_strip_count(Partition.of(1, 1), 1, 1) == 1
        assert vertical_strip_count(Partition.of(2, 1), 1, 0) == 1
        assert vertical_strip_count(Partition.of(2, 1), 5, 0) == 0

    def test_removals_match_row_subsets(self):
        """Test block removals against every choice of rows losing a box"""
        for n in range(9):
            for mu in generate_partitions(n):
                for size in range(n + 1):
                    expected = set()
                    for rows in combinations(range(mu.length), size):
                        smaller = [p - (i in rows) for i, p in enumerate(mu.parts)]
                        if all(a >= b for a, b in zip(smaller, smaller[1:])):
                            expected.add(tuple(p for p in smaller if p > 0))
                    found = list(vertical_strip_removals(mu.parts, size))
                    assert len(found) == len(expected)
                    assert set(found) == expected

    def test_long_column(self, tableau_service):
        """Test a column of 30 boxes split into two strips of 15"""
        column = Partition.of(*[1] * 30)
        assert vertical_strip_count(column, 15, 15) == 1
        assert tableau_service.vertical_strip_count(column, 15, 15) == 1
        assert vertical_strip_count(column, 14, 15) == 0

    def test_chain_total_counts_tableaux(self):
        """Test the strip chain total against |T_d(mu)| for every signature"""
        for n in range(9):
            for mu in generate_partitions(n):
                for d in range(-n, n + 1):
                    assert strip_chain_total(mu, d) == tableau_count(mu, d)


def block_orders(rows, parity):
    """Every reordering of rows within equal-length blocks whose length has the given parity"""
    blocks = [list(group) for _, group in groupby(rows, key=lambda row: row[0])]
    choices = [sorted(set(permutations(b))) if b[0][0] % 2 == parity else [tuple(b)] for b in blocks]
    for choice in product(*choices):
        yield [row for block in choice for row in block]


def all_tableaux(max_size):
    for n in range(max_size + 1):
        for mu in generate_partitions(n):
            yield from generate_tableaux(mu)


class TestStarSign:
    def test_m_statistic(self):
        """Test m(T) on small row lists"""
        assert m_statistic([(1, 1), (1, -1)]) == 1
        assert m_statistic([(2, 1)]) == 0
        assert m_statistic([]) == 0
        assert m_statistic([(1, -1), (1, 1)]) == 0

    def test_even_rows_are_inert(self):
        """Test m(T) ignores the order and signs of even rows up to size 8"""
        for tableau in all_tableaux(8):
            rows = tableau.rows()
            value = m_statistic(rows)
            assert m_statistic([(length, sign if length % 2 else -sign) for length, sign in rows]) == value
            for order in block_orders(rows, 0):
                assert m_statistic(order) == value

    def test_minus_rows_lowest(self):
        """Test that - rows below + rows in each odd block give the largest m over block orders"""
        for tableau in all_tableaux(7):
            rows = tableau.rows()
            assert m_statistic(rows) == max(m_statistic(order) for order in block_orders(rows, 1))

    def test_small_value(self):
        """Test shape (1,1)"""
        assert star_sign_sum(Partition.of(1, 1)) == 1

    def test_matches_closed_form(self):
        """Test the alternating sum against its closed form up to size 8"""
        for n in range(9):
            for mu in generate_partitions(n):
                assert star_sign_sum(mu) == star_sign_closed_form(mu)

    def test_bound(self, tableau_service, test_settings):
        """Test the tableau bound"""
        with pytest.raises(BoundExceededError):
            tableau_service.star_sign_sum(Partition.of(test_settings.tableau_bound + 1))

    def test_service_enumeration(self, tableau_service):
        """Test enumeration through the service"""
        tableaux = list(tableau_service.enumerate_tableaux(Partition.of(2, 1)))
        assert len(tableaux) == 4
        assert len(list(tableau_service.enumerate_tableaux(Partition.of(2, 1), 1))) == 2
