"""
Multiplicities of irreducible characters of GL_n(q) and U_n(q^2) in the
permutation characters of their symmetric spaces.

Three evaluations are provided: the closed forms indexed by multipartitions,
the unipotent closed forms indexed by a single partition, and the pairing of
a basic character with the induced trivial character, computed once from
involution sums and once by expanding the basic character into irreducibles.
"""
import logging
import random
from dataclasses import replace
from fractions import Fraction
from itertools import product
from math import ceil, floor, prod
from typing import Callable, Dict, List, Optional, Tuple

from app.config import Settings, settings
from app.exceptions import (
    IncompatibleCaseError,
    NonIntegralMultiplicityError,
    RouteMismatchError,
    check_bound,
)
from app.models import (
    MultiPartition,
    OrbitTable,
    OrbitTag,
    Partition,
    QuotientKind,
    SignFamily,
    SymmetricSpaceCase,
    Twist,
)
from app.services.character_service import character
from app.services.involution_service import weighted_involution_sum, weighted_signed_sum
from app.services.orbit_service import abstract_table, zeta_twist
from app.services.partition_service import epsilon, generate_partitions, n_stat, transpose, z_nu
from app.services.tableau_service import (
    phipsi_fixed_closed_form,
    psi_fixed_closed_form,
    psi_fixed_count,
    tableau_count,
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
ROUTES = ("involution", "character")


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _transpose_even(part: Partition) -> bool:
    return transpose(part).is_even


def dual_condition(rho: MultiPartition) -> bool:
    """rho_xi equals rho at the dual orbit, checked across dual pairs"""
    return all(
        rho[orbit.id] == rho[orbit.partner]
        for orbit in rho.table
        if orbit.tag is OrbitTag.DUAL_PAIR
    )


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralMultiplicityError(f"{what} evaluated to {value}")
    return int(value)


# Closed forms indexed by multipartitions

def _symplectic(case: SymmetricSpaceCase, rho: MultiPartition) -> Fraction:
    return Fraction(int(all(p.is_even for _, p in rho.assignments)))


def _levi(case: SymmetricSpaceCase, rho: MultiPartition) -> Fraction:
    if not dual_condition(rho) or not _transpose_even(rho.tagged(OrbitTag.MINUS_ONE)):
        return Fraction(0)
    one = transpose(rho.tagged(OrbitTag.ONE))
    if case.twist is Twist.SPLIT:
        return Fraction(tableau_count(one, case.signature))
    return Fraction(psi_fixed_count(one, case.signature))


def _extension(case: SymmetricSpaceCase, rho: MultiPartition) -> Fraction:
    if not dual_condition(rho) or not _transpose_even(rho.tagged(OrbitTag.MINUS_ONE)):
        return Fraction(0)
    one = rho.tagged(OrbitTag.ONE)
    if case.twist is Twist.SPLIT:
        return Fraction(int(one.is_even))
    return Fraction(phipsi_fixed_closed_form(transpose(one)))


def _all_transpose_even(rho: MultiPartition) -> bool:
    return all(_transpose_even(p) for _, p in rho.assignments)


def _orthogonal_split_main(rho: MultiPartition) -> Fraction:
    value = HALF
    for orbit_id, part in rho.assignments:
        if rho.table.get(orbit_id).d == 1:
            value *= tableau_count(part)
        elif not _transpose_even(part):
            return Fraction(0)
    return value


def _orthogonal_split_odd(case: SymmetricSpaceCase, rho: MultiPartition) -> Fraction:
    return _orthogonal_split_main(rho)


def _orthogonal_split_even(case: SymmetricSpaceCase, rho: MultiPartition) -> Fraction:
    value = _orthogonal_split_main(rho)
    if _all_transpose_even(rho):
        value += HALF * case.epsilon
    return value


# (d, m parity) -> factor for the unitary orthogonal forms; None means rho' must be even
_UNITARY_ODD: Dict[Tuple[int, int], Optional[Callable[[Partition], int]]] = {
    (1, 1): psi_fixed_closed_form,
    (-1, 1): phipsi_fixed_closed_form,
    (1, 0): tableau_count,
    (-1, 0): None,
}
_UNITARY_EVEN: Dict[Tuple[int, int], Optional[Callable[[Partition], int]]] = {
    (1, 1): phipsi_fixed_closed_form,
    (-1, 1): psi_fixed_closed_form,
    (1, 0): tableau_count,
    (-1, 0): None,
}


def _orthogonal_unitary_main(rho: MultiPartition, table) -> Fraction:
    value = HALF
    for orbit_id, part in rho.assignments:
        orbit = rho.table.get(orbit_id)
        factor = table[(orbit.d, orbit.m % 2)]
        if factor is None:
            if not _transpose_even(part):
                return Fraction(0)
            continue
        value *= factor(part)
        if not value:
            return value
    return value


def _orthogonal_unitary_odd(case: SymmetricSpaceCase, rho: MultiPartition) -> Fraction:
    return _orthogonal_unitary_main(rho, _UNITARY_ODD)


def _orthogonal_unitary_even(case: SymmetricSpaceCase, rho: MultiPartition) -> Fraction:
    value = _orthogonal_unitary_main(rho, _UNITARY_EVEN)
    if _all_transpose_even(rho):
        value += HALF * case.epsilon
    return value


Theorem = Callable[[SymmetricSpaceCase, MultiPartition], Fraction]

THEOREMS: Dict[Tuple[QuotientKind, Twist, int], Theorem] = {}
for _twist in Twist:
    for _parity in (0, 1):
        THEOREMS[(QuotientKind.LEVI, _twist, _parity)] = _levi
    THEOREMS[(QuotientKind.SYMPLECTIC, _twist, 0)] = _symplectic
    THEOREMS[(QuotientKind.EXTENSION, _twist, 0)] = _extension
THEOREMS[(QuotientKind.ORTHOGONAL, Twist.SPLIT, 1)] = _orthogonal_split_odd
THEOREMS[(QuotientKind.ORTHOGONAL, Twist.SPLIT, 0)] = _orthogonal_split_even
THEOREMS[(QuotientKind.ORTHOGONAL, Twist.NONSPLIT, 1)] = _orthogonal_unitary_odd
THEOREMS[(QuotientKind.ORTHOGONAL, Twist.NONSPLIT, 0)] = _orthogonal_unitary_even


def _check_compatible(case: SymmetricSpaceCase, rho: MultiPartition) -> None:
    if rho.table.twist is not case.twist:
        raise IncompatibleCaseError(f"{case.key} needs a {case.twist.value} orbit table, got {rho.table.twist.value}")
    if rho.n != case.n:
        raise IncompatibleCaseError(f"multipartition has n = {rho.n}, case has n = {case.n}")


def multiplicity(case: SymmetricSpaceCase, rho: MultiPartition) -> int:
    _check_compatible(case, rho)
    if case.special:
        return so_multiplicity(case, rho)
    theorem = THEOREMS[(case.kind, case.twist, case.n % 2)]
    return _integral(theorem(case, rho), f"{case.describe()} at {rho.to_dict()}")


def so_multiplicity(case: SymmetricSpaceCase, rho: MultiPartition, k_zeta: int = 1) -> int:
    """Special orthogonal value: the orthogonal value at rho and at its sign twist"""
    if case.kind is not QuotientKind.ORTHOGONAL:
        raise IncompatibleCaseError(f"{case.key} has no special-orthogonal variant")
    _check_compatible(case, rho)
    base = replace(case, special=False)
    return multiplicity(base, rho) + multiplicity(base, zeta_twist(rho.table, rho, k_zeta))


def epsilon_gap(case: SymmetricSpaceCase, rho: MultiPartition) -> int:
    """Value for epsilon = + minus value for epsilon = -"""
    if case.kind is not QuotientKind.ORTHOGONAL or case.n % 2:
        raise IncompatibleCaseError("epsilon applies to orthogonal cases with even n")
    plus = multiplicity(replace(case, epsilon=1, special=False), rho)
    minus = multiplicity(replace(case, epsilon=-1, special=False), rho)
    return plus - minus


def levi_tableau_total(table: OrbitTable, rho: MultiPartition) -> Tuple[int, int]:
    """(sum over n_plus of the split Levi values, prod(m_i(rho_1') + 1) or 0)"""
    n = rho.n
    total = sum(
        multiplicity(SymmetricSpaceCase(QuotientKind.LEVI, Twist.SPLIT, n, n_plus, n - n_plus), rho)
        for n_plus in range(n + 1)
    )
    if dual_condition(rho) and _transpose_even(rho.tagged(OrbitTag.MINUS_ONE)):
        expected = tableau_count(transpose(rho.tagged(OrbitTag.ONE)))
    else:
        expected = 0
    return total, expected


# Unipotent closed forms, written directly in multiplicities of rho and rho'

def _prod_plus_one(mults: Dict[int, int], parity: Optional[int] = None) -> int:
    return prod(m + 1 for i, m in mults.items() if parity is None or i % 2 == parity)


def _even_where(mults: Dict[int, int], parity: int) -> bool:
    return all(m % 2 == 0 for i, m in mults.items() if i % 2 == parity)


def _round_by_epsilon(value: Fraction, eps: int) -> int:
    return ceil(value) if eps > 0 else floor(value)


def unipotent_multiplicity(case: SymmetricSpaceCase, rho: Partition) -> int:
    if case.special:
        raise IncompatibleCaseError("unipotent closed forms cover the orthogonal groups, not SO")
    if rho.size != case.n:
        raise IncompatibleCaseError(f"|rho| = {rho.size} but n = {case.n}")
    conj = transpose(rho)
    mults, conj_mults = rho.multiplicities, conj.multiplicities
    split = case.twist is Twist.SPLIT

    if case.kind is QuotientKind.SYMPLECTIC:
        return int(rho.is_even)
    if case.kind is QuotientKind.LEVI:
        return tableau_count(conj, case.signature) if split else psi_fixed_count(conj, case.signature)
    if case.kind is QuotientKind.EXTENSION:
        if split:
            return int(rho.is_even)
        return _prod_plus_one(conj_mults, 0) if _even_where(conj_mults, 1) else 0

    if split:
        half = HALF * _prod_plus_one(mults)
        if case.n % 2 == 0 and conj.is_even:
            return _round_by_epsilon(half, case.epsilon)
        return _integral(half, f"{case.describe()} at {rho}")
    if case.n % 2:
        if not _even_where(mults, 0):
            return 0
        return _integral(HALF * _prod_plus_one(mults, 1), f"{case.describe()} at {rho}")
    half = HALF * _prod_plus_one(mults, 0)
    if conj.is_even:
        return _round_by_epsilon(half, case.epsilon)
    if _even_where(mults, 1):
        return _integral(half, f"{case.describe()} at {rho}")
    return 0


# Basic characters

def transition_sign(case: SymmetricSpaceCase, nu: MultiPartition, rho: MultiPartition) -> int:
    """Sign attached to rho in the expansion of the basic character at nu"""
    n = nu.n
    if case.twist is Twist.SPLIT:
        return _sign(n + sum(p.size for _, p in nu.assignments))
    exponent = (n + 1) // 2
    for orbit_id, part in rho.assignments:
        exponent += rho.table.get(orbit_id).m * n_stat(transpose(part)) + part.size
    return _sign(exponent)


def character_route(case: SymmetricSpaceCase, nu: MultiPartition) -> int:
    ids = nu.support
    shapes = [list(generate_partitions(nu[i].size)) for i in ids]
    total = 0
    for combo in product(*shapes):
        chi = prod(character(r, nu[i]) for i, r in zip(ids, combo))
        if not chi:
            continue
        rho = MultiPartition.build(nu.table, dict(zip(ids, combo)))
        value = multiplicity(case, rho)
        if value:
            total += transition_sign(case, nu, rho) * chi * value
    return total


def _ff(part: Partition) -> int:
    return weighted_involution_sum(part, "ff")


def _orthogonal_sum(part: Partition, restrict: bool) -> int:
    """sum of (-2)^l1, restricted to l1_odd = 0 when asked"""
    return weighted_involution_sum(part, "no-odd-fixed" if restrict else "none", "minus-two-l1")


def _unitary_orthogonal_sum(part: Partition, restrict: bool) -> int:
    return weighted_involution_sum(part, "no-odd-fixed" if restrict else "none", "unitary-orthogonal")


def _half_size_sign(part: Partition) -> int:
    """(-1)^(|nu|/2); zero for odd size, where the accompanying count vanishes"""
    return 0 if part.size % 2 else _sign(part.size // 2)


def _inner_other_factors(case: SymmetricSpaceCase, nu: MultiPartition) -> int:
    """Contribution of orbits other than 1 and -1 in the Levi and extension cases"""
    value = 1
    seen = set()
    relevant = set(nu.support) | {
        nu.table.get(i).partner for i in nu.support if nu.table.get(i).tag is OrbitTag.DUAL_PAIR
    }
    for orbit_id in sorted(relevant):
        orbit = nu.table.get(orbit_id)
        part = nu[orbit_id]
        if orbit.tag is OrbitTag.SELF_DUAL:
            count = weighted_involution_sum(part, "no-even-fixed")
            signed = case.twist is Twist.SPLIT or orbit.m % 4 == 0
            value *= _sign(part.size) * count if signed else count
        elif orbit.tag is OrbitTag.DUAL_PAIR and orbit_id not in seen:
            seen.update((orbit_id, orbit.partner))
            if part != nu[orbit.partner]:
                return 0
            factor = z_nu(part)
            if case.twist is Twist.NONSPLIT and orbit.m % 2:
                factor *= _sign(sum(1 for p in part.parts if p % 2))
            value *= factor
    return value


def _inner_route(case: SymmetricSpaceCase, nu: MultiPartition) -> Fraction:
    one, minus_one = nu.tagged(OrbitTag.ONE), nu.tagged(OrbitTag.MINUS_ONE)
    split = case.twist is Twist.SPLIT
    weight = "sign-l2" if split else "unitary-levi"
    if case.kind is QuotientKind.LEVI:
        first = weighted_signed_sum(one, SignFamily.PLUS, case.signature, weight)
    else:
        first = weighted_signed_sum(one, SignFamily.STAR, None, weight)
    second = epsilon(minus_one) * _ff(minus_one)
    if not split:
        second *= _half_size_sign(minus_one)
    return Fraction(first * second * _inner_other_factors(case, nu))


def _symplectic_route(case: SymmetricSpaceCase, nu: MultiPartition) -> Fraction:
    return Fraction(prod(_ff(p) for _, p in nu.assignments))


def _orthogonal_route(case: SymmetricSpaceCase, nu: MultiPartition) -> Fraction:
    n = nu.n
    orbits = [(nu.table.get(i), p) for i, p in nu.assignments]
    if case.twist is Twist.SPLIT:
        main = prod(_orthogonal_sum(p, o.d == -1) for o, p in orbits)
        if n % 2:
            return -HALF * main
        correction = prod(epsilon(p) * _ff(p) for _, p in orbits)
        return HALF * main + HALF * case.epsilon * correction
    if n % 2:
        main = prod(
            _unitary_orthogonal_sum(p, o.d == -1) if o.m % 2 else _orthogonal_sum(p, o.d == -1)
            for o, p in orbits
        )
        return HALF * _sign(n // 2) * main
    main = prod(
        _unitary_orthogonal_sum(p, o.d == 1) if o.m % 2 else _orthogonal_sum(p, o.d == -1)
        for o, p in orbits
    )
    correction = prod(
        (_half_size_sign(p) if o.m % 2 else 1) * epsilon(p) * _ff(p)
        for o, p in orbits
    )
    return HALF * _sign(n // 2) * main + HALF * case.epsilon * correction


def involution_route(case: SymmetricSpaceCase, nu: MultiPartition) -> int:
    if case.kind is QuotientKind.SYMPLECTIC:
        value = _symplectic_route(case, nu)
    elif case.kind is QuotientKind.ORTHOGONAL:
        value = _orthogonal_route(case, nu)
    else:
        value = _inner_route(case, nu)
    return _integral(value, f"involution route for {case.describe()} at {nu.to_dict()}")


def basic_character_multiplicity(case: SymmetricSpaceCase, nu: MultiPartition, route: str) -> int:
    if case.special:
        raise IncompatibleCaseError("basic characters are paired with the orthogonal groups, not SO")
    _check_compatible(case, nu)
    if route == "involution":
        return involution_route(case, nu)
    if route == "character":
        return character_route(case, nu)
    raise IncompatibleCaseError(f"unknown route '{route}'; expected one of: {', '.join(ROUTES)}")


def crosscheck(case: SymmetricSpaceCase, nu: MultiPartition) -> Tuple[int, int]:
    """Both routes; RouteMismatchError when they disagree"""
    left = basic_character_multiplicity(case, nu, "involution")
    right = basic_character_multiplicity(case, nu, "character")
    if left != right:
        logger.error(f"route mismatch for {case.describe()} at {nu.to_dict()}: {left} != {right}")
        raise RouteMismatchError(f"{case.describe()} at {nu.to_dict()}", left, right)
    return left, right


# Random abstract instances

def random_table(rng: random.Random, twist: Twist) -> OrbitTable:
    specs: List[Dict] = [{"id": "one", "tag": "one"}]
    if rng.random() < 0.8:
        specs.append({"id": "minus-one", "tag": "minus-one", "d": rng.choice((1, -1))})
    for i in range(rng.randint(0, 2)):
        specs.append({"id": f"s{i}", "tag": "self-dual", "m": rng.choice((2, 4, 6)), "d": rng.choice((1, -1))})
    for i in range(rng.randint(0, 2)):
        m, d = rng.randint(1, 3), rng.choice((1, -1))
        specs.append({"id": f"p{i}a", "tag": "dual-pair", "m": m, "d": d, "partner": f"p{i}b"})
        specs.append({"id": f"p{i}b", "tag": "dual-pair", "m": m, "d": d, "partner": f"p{i}a"})
    return abstract_table(twist, specs)


def _random_partition(rng: random.Random, size: int) -> Partition:
    return rng.choice(list(generate_partitions(size)))


def random_multipartition(rng: random.Random, table: OrbitTable, max_n: int, max_support: int = 3) -> MultiPartition:
    remaining = rng.randint(0, max_n)
    mapping: Dict[str, Partition] = {}
    orbits = list(table)
    rng.shuffle(orbits)
    for orbit in orbits:
        if len(mapping) >= max_support or remaining < orbit.m:
            continue
        if orbit.id in mapping or rng.random() < 0.4:
            continue
        pair = (
            orbit.tag is OrbitTag.DUAL_PAIR
            and orbit.partner not in mapping
            and len(mapping) + 2 <= max_support
            and rng.random() < 0.6
        )
        cost = orbit.m * (2 if pair else 1)
        size = rng.randint(1, remaining // cost) if remaining >= cost else 0
        if not size:
            continue
        part = _random_partition(rng, size)
        mapping[orbit.id] = part
        if pair:
            mapping[orbit.partner] = part
        remaining -= cost * size
    return MultiPartition.build(table, mapping)


def random_case(rng: random.Random, twist: Twist, n: int) -> SymmetricSpaceCase:
    kinds = [QuotientKind.LEVI, QuotientKind.ORTHOGONAL]
    if n % 2 == 0:
        kinds += [QuotientKind.SYMPLECTIC, QuotientKind.EXTENSION]
    kind = rng.choice(kinds)
    if kind is QuotientKind.LEVI:
        n_plus = rng.randint(0, n)
        return SymmetricSpaceCase(kind, twist, n, n_plus, n - n_plus)
    if kind is QuotientKind.ORTHOGONAL:
        return SymmetricSpaceCase(kind, twist, n, epsilon=rng.choice((1, -1)) if n % 2 == 0 else None)
    return SymmetricSpaceCase(kind, twist, n)


def random_instance(rng: random.Random, max_n: int = 8, max_support: int = 3) -> Tuple[SymmetricSpaceCase, MultiPartition]:
    twist = rng.choice(list(Twist))
    table = random_table(rng, twist)
    rho = random_multipartition(rng, table, max_n, max_support)
    return random_case(rng, twist, rho.n), rho


class MultiplicityService:
    def __init__(self, config: Settings = settings):
        self.config = config

    def multiplicity(self, case: SymmetricSpaceCase, rho: MultiPartition) -> int:
        """Multiplicity of the irreducible character labelled rho"""
        check_bound("n", rho.n, self.config.partition_bound)
        value = multiplicity(case, rho)
        logger.info(f"{case.describe()} at {rho.to_dict()}: {value}")
        return value

    def unipotent_multiplicity(self, case: SymmetricSpaceCase, rho: Partition) -> int:
        """Unipotent closed form"""
        check_bound("n", rho.size, self.config.partition_bound)
        return unipotent_multiplicity(case, rho)

    def unipotent_table(self, case: SymmetricSpaceCase) -> List[Tuple[Partition, int]]:
        """Unipotent closed form for every partition of n"""
        check_bound("n", case.n, self.config.partition_bound)
        return [(rho, unipotent_multiplicity(case, rho)) for rho in generate_partitions(case.n)]

    def so_multiplicity(self, case: SymmetricSpaceCase, rho: MultiPartition, k_zeta: int = 1) -> int:
        """Special-orthogonal multiplicity through the sign twist"""
        check_bound("n", rho.n, self.config.partition_bound)
        return so_multiplicity(case, rho, k_zeta)

    def _check_route_bounds(self, nu: MultiPartition) -> None:
        check_bound("n", nu.n, self.config.multiplicity_bound)
        check_bound("#orbits in support", len(nu.support), self.config.max_support)

    def basic_character_multiplicity(self, case: SymmetricSpaceCase, nu: MultiPartition, route: str) -> int:
        """Pairing of the basic character at nu with the induced trivial character"""
        self._check_route_bounds(nu)
        return basic_character_multiplicity(case, nu, route)

    def crosscheck(self, case: SymmetricSpaceCase, nu: MultiPartition) -> Tuple[int, int]:
        """Evaluate both routes and compare"""
        self._check_route_bounds(nu)
        return crosscheck(case, nu)
