"""
Symmetric-group characters: Murnaghan-Nakayama evaluation and a
power-sum / Kostka oracle
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from app.config import Settings, settings
from app.exceptions import SizeMismatchError, UnknownNameError, check_bound
from app.models import Partition
from app.services.partition_service import generate_partitions, transpose

logger = logging.getLogger(__name__)


def _strip_zeros(parts) -> Tuple[int, ...]:
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    length = len(shape)
    beta = [p + length - 1 - i for i, p in enumerate(shape)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        height = sum(1 for c in beta if target < c < b)
        moved = sorted((beads - {b}) | {target}, reverse=True)
        smaller = _strip_zeros(x - (length - 1 - i) for i, x in enumerate(moved))
        value = _mn(smaller, rest)
        total += -value if height % 2 else value
    return total


def character(rho: Partition, nu: Partition) -> int:
    """chi^rho at a permutation of cycle type nu"""
    if rho.size != nu.size:
        raise SizeMismatchError(f"|rho| = {rho.size} but |nu| = {nu.size}")
    return _mn(rho.parts, nu.parts)


# Oracle: p_nu expanded in monomials, Schur coefficients read through Kostka numbers

def _power_sum_monomials(nu: Partition) -> Dict[Tuple[int, ...], int]:
    variables = nu.size
    poly: Dict[Tuple[int, ...], int] = {(0,) * variables: 1}
    for part in nu.parts:
        product: Dict[Tuple[int, ...], int] = {}
        for exps, coeff in poly.items():
            for v in range(variables):
                bumped = exps[:v] + (exps[v] + part,) + exps[v + 1:]
                product[bumped] = product.get(bumped, 0) + coeff
        poly = product
    return poly


def _horizontal_strips(shape: Tuple[int, ...], size: int, rows: int) -> Iterator[Tuple[int, ...]]:
    """Shapes obtained by adding a horizontal strip of the given size"""
    padded = list(shape) + [0] * (rows - len(shape))

    def extend(i: int, left: int, acc: List[int]):
        if i == rows:
            if left == 0:
                yield _strip_zeros(acc)
            return
        cap = padded[i - 1] if i > 0 else padded[0] + left
        for add in range(min(left, cap - padded[i]) + 1):
            yield from extend(i + 1, left - add, acc + [padded[i] + add])

    yield from extend(0, size, [])


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: Partition) -> int:
    """Number of semistandard tableaux of the given shape and content"""
    if shape.size != content.size:
        return 0
    rows = shape.length
    layers = {(): 1}
    for letter in content.parts:
        grown: Dict[Tuple[int, ...], int] = {}
        for inner, count in layers.items():
            for outer in _horizontal_strips(inner, letter, rows):
                if len(outer) <= rows and all(o <= s for o, s in zip(outer, shape.parts)):
                    grown[outer] = grown.get(outer, 0) + count
        layers = grown
    return layers.get(shape.parts, 0)


@lru_cache(maxsize=None)
def _oracle_column(nu: Partition) -> Dict[Partition, int]:
    monomials = _power_sum_monomials(nu)
    variables = nu.size
    shapes = list(generate_partitions(nu.size))
    column: Dict[Partition, int] = {}
    for rho in shapes:
        exps = rho.parts + (0,) * (variables - rho.length)
        value = monomials.get(exps, 0)
        for tau, chi in column.items():
            value -= chi * kostka(tau, rho)
        column[rho] = value
    return column


def character_oracle(rho: Partition, nu: Partition) -> int:
    if rho.size != nu.size:
        raise SizeMismatchError(f"|rho| = {rho.size} but |nu| = {nu.size}")
    return _oracle_column(nu)[rho]


# Filters on rho for weighted character sums

def _even_mult(rho: Partition, parity: int) -> bool:
    return all(m % 2 == 0 for i, m in rho.multiplicities.items() if i % 2 == parity)


CHARACTER_FILTERS: Dict[str, Callable[[Partition], bool]] = {
    "all": lambda rho: True,
    "even": lambda rho: rho.is_even,
    "transpose-even": lambda rho: transpose(rho).is_even,
    "even-mult-even-parts": lambda rho: _even_mult(rho, 0),
    "even-mult-odd-parts": lambda rho: _even_mult(rho, 1),
}


def character_sum(
    nu: Partition,
    filter_name: str = "all",
    weight: Optional[Callable[[Partition], int]] = None,
) -> int:
    """sum over rho |- |nu| passing the filter of weight(rho) * chi^rho_nu"""
    if filter_name not in CHARACTER_FILTERS:
        raise UnknownNameError("character filter", filter_name, CHARACTER_FILTERS)
    keep = CHARACTER_FILTERS[filter_name]
    total = 0
    for rho in generate_partitions(nu.size):
        if not keep(rho):
            continue
        w = 1 if weight is None else weight(rho)
        if w:
            total += w * character(rho, nu)
    return total


class CharacterService:
    def __init__(self, config: Settings = settings):
        self.config = config

    def character(self, rho: Partition, nu: Partition) -> int:
        """Exact character value"""
        check_bound("|nu|", nu.size, self.config.character_bound)
        return character(rho, nu)

    def character_oracle(self, rho: Partition, nu: Partition) -> int:
        """Character value through the power-sum / Kostka route"""
        check_bound("|nu|", nu.size, self.config.oracle_bound)
        return character_oracle(rho, nu)

    def character_sum(
        self,
        nu: Partition,
        filter_name: str = "all",
        weight: Optional[Callable[[Partition], int]] = None,
    ) -> int:
        """Filtered, weighted sum of character values"""
        check_bound("|nu|", nu.size, self.config.character_bound)
        return character_sum(nu, filter_name, weight)

    def character_table(self, n: int) -> Dict[Partition, Dict[Partition, int]]:
        """Full table rho -> nu -> chi^rho_nu"""
        check_bound("n", n, self.config.oracle_bound)
        shapes = list(generate_partitions(n))
        logger.info(f"Building character table for n={n} ({len(shapes)} classes)")
        return {rho: {nu: character(rho, nu) for nu in shapes} for rho in shapes}
