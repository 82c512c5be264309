"""
Signed tableaux: enumeration, the involutions phi and psi, vertical strip
removal and the alternating m(T) sum
"""
import logging
from collections import Counter
from dataclasses import dataclass
from itertools import groupby, product
from math import prod
from typing import Dict, Iterator, List, Optional, Tuple

from app.config import Settings, settings
from app.exceptions import ClosedFormMismatchError, UnknownNameError, check_bound
from app.models import Partition, SignedTableau

logger = logging.getLogger(__name__)


def generate_tableaux(mu: Partition, signature: Optional[int] = None) -> Iterator[SignedTableau]:
    """One tableau per class; a class is the number of + rows per length"""
    lengths = sorted(mu.multiplicities, reverse=True)
    ranges = [range(mu.multiplicity(length) + 1) for length in lengths]
    for counts in product(*ranges):
        tableau = SignedTableau(mu, tuple(zip(lengths, counts)))
        if signature is None or tableau.signature == signature:
            yield tableau


def tableau_count(mu: Partition, signature: Optional[int] = None) -> int:
    return sum(1 for _ in generate_tableaux(mu, signature))


def signature_distribution(mu: Partition) -> Dict[int, int]:
    return dict(Counter(t.signature for t in generate_tableaux(mu)))


def phi(tableau: SignedTableau) -> SignedTableau:
    """Change every sign"""
    shape = tableau.shape
    return SignedTableau(shape, tuple((i, shape.multiplicity(i) - k) for i, k in tableau.plus_counts))


def psi(tableau: SignedTableau) -> SignedTableau:
    """Reverse every row: the terminal sign flips exactly on even rows"""
    shape = tableau.shape
    return SignedTableau(
        shape,
        tuple((i, shape.multiplicity(i) - k if i % 2 == 0 else k) for i, k in tableau.plus_counts),
    )


def _all_even(counts) -> bool:
    return all(m % 2 == 0 for m in counts)


def phi_fixed_closed_form(mu: Partition) -> int:
    return 1 if _all_even(mu.multiplicities.values()) else 0


def psi_fixed_closed_form(mu: Partition) -> int:
    mults = mu.multiplicities
    if not _all_even(m for i, m in mults.items() if i % 2 == 0):
        return 0
    return prod(m + 1 for i, m in mults.items() if i % 2 == 1)


def phipsi_fixed_closed_form(mu: Partition) -> int:
    mults = mu.multiplicities
    if not _all_even(m for i, m in mults.items() if i % 2 == 1):
        return 0
    return prod(m + 1 for i, m in mults.items() if i % 2 == 0)


def psi_fixed_count(mu: Partition, signature: Optional[int] = None) -> int:
    """|T_(p+,p-)(mu)^psi| by enumeration"""
    return sum(1 for t in generate_tableaux(mu, signature) if psi(t) == t)


@dataclass(frozen=True)
class FixedCounts:
    phi: int
    psi: int
    phipsi: int
    psi_by_signature: Tuple[Tuple[int, int], ...]


def fixed_counts(mu: Partition) -> FixedCounts:
    """Fixed-point counts of phi, psi and phi.psi, checked against closed forms"""
    tableaux = list(generate_tableaux(mu))
    fixed_phi = [t for t in tableaux if phi(t) == t]
    fixed_psi = [t for t in tableaux if psi(t) == t]
    fixed_phipsi = [t for t in tableaux if phi(psi(t)) == t]
    for t in fixed_phi + fixed_phipsi:
        if t.signature != 0:
            raise ClosedFormMismatchError(f"{t} is fixed by phi or phi.psi but has signature {t.signature}")
    expected = (phi_fixed_closed_form(mu), psi_fixed_closed_form(mu), phipsi_fixed_closed_form(mu))
    found = (len(fixed_phi), len(fixed_psi), len(fixed_phipsi))
    if found != expected:
        raise ClosedFormMismatchError(f"fixed counts for {mu}: enumerated {found}, closed form {expected}")
    by_signature = Counter(t.signature for t in fixed_psi)
    return FixedCounts(*found, psi_by_signature=tuple(sorted(by_signature.items())))


def vertical_strip_removals(parts: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    """Shapes left after removing a vertical strip of the given size.

    Boxes leave each block of equal rows from its bottom rows, so a removal is
    a choice of 0..m_i boxes per block.
    """
    blocks = [(length, len(list(group))) for length, group in groupby(parts)]
    for taken in product(*(range(count + 1) for _, count in blocks)):
        if sum(taken) != size:
            continue
        smaller: List[int] = []
        for (length, count), k in zip(blocks, taken):
            smaller.extend([length] * (count - k) + [length - 1] * k)
        yield tuple(p for p in smaller if p > 0)


def vertical_strip_count(mu: Partition, a: int, b: int) -> int:
    """Ways to remove a vertical b-strip, then a vertical a-strip, leaving only even rows"""
    if a < 0 or b < 0 or a + b > mu.size:
        return 0
    total = 0
    for middle in vertical_strip_removals(mu.parts, b):
        for rest in vertical_strip_removals(middle, a):
            if all(p % 2 == 0 for p in rest):
                total += 1
    return total


def strip_chain_total(mu: Partition, signature: int) -> int:
    """sum of vertical_strip_count(mu, a, b) over a - b = signature"""
    return sum(
        vertical_strip_count(mu, a, a - signature)
        for a in range(max(signature, 0), mu.size + 1)
        if 2 * a - signature <= mu.size
    )


def m_statistic(rows: List[Tuple[int, int]]) -> int:
    """Max over rows R of (#odd - rows at or below R) - (#odd + rows at or below R)"""
    best = None
    running = 0
    for length, sign in reversed(rows):
        if length % 2:
            running += 1 if sign < 0 else -1
        best = running if best is None else max(best, running)
    return best or 0


def star_sign_sum(mu: Partition) -> int:
    total = 0
    for tableau in generate_tableaux(mu, 0):
        rows = tableau.rows()
        odd_minus = sum(1 for length, sign in rows if length % 2 and sign < 0)
        total += -1 if (odd_minus - m_statistic(rows)) % 2 else 1
    return total


def star_sign_closed_form(mu: Partition) -> int:
    return phipsi_fixed_closed_form(mu)


class TableauService:
    def __init__(self, config: Settings = settings):
        self.config = config

    def enumerate_tableaux(self, mu: Partition, signature: Optional[int] = None) -> Iterator[SignedTableau]:
        """Signed tableaux of shape mu"""
        check_bound("|mu|", mu.size, self.config.tableau_bound)
        return generate_tableaux(mu, signature)

    def fixed_counts(self, mu: Partition) -> FixedCounts:
        """phi / psi / phi.psi fixed-point counts"""
        check_bound("|mu|", mu.size, self.config.tableau_bound)
        return fixed_counts(mu)

    def fixed_by(self, mu: Partition, involution: str, signature: Optional[int] = None) -> int:
        """Count tableaux fixed by phi, psi or phipsi"""
        check_bound("|mu|", mu.size, self.config.tableau_bound)
        maps = {"phi": phi, "psi": psi, "phipsi": lambda t: phi(psi(t))}
        if involution not in maps:
            raise UnknownNameError("tableau involution", involution, maps)
        apply = maps[involution]
        return sum(1 for t in generate_tableaux(mu, signature) if apply(t) == t)

    def vertical_strip_count(self, mu: Partition, a: int, b: int) -> int:
        """Ordered vertical strip removals leaving even rows"""
        check_bound("|mu|", mu.size, self.config.tableau_bound)
        return vertical_strip_count(mu, a, b)

    def star_sign_sum(self, mu: Partition) -> int:
        """Alternating sum over signature-zero tableaux weighted by m(T)"""
        check_bound("|mu|", mu.size, self.config.tableau_bound)
        value = star_sign_sum(mu)
        logger.debug(f"star sign sum for {mu} = {value}")
        return value

    def count(self, mu: Partition, signature: Optional[int] = None, fixed_by: Optional[str] = None) -> int:
        """Number of tableaux, optionally of one signature and fixed by one involution"""
        if fixed_by is not None:
            return self.fixed_by(mu, fixed_by, signature)
        check_bound("|mu|", mu.size, self.config.tableau_bound)
        return tableau_count(mu, signature)

    def signature_distribution(self, mu: Partition) -> Dict[int, int]:
        check_bound("|mu|", mu.size, self.config.tableau_bound)
        return dict(sorted(signature_distribution(mu).items()))
