"""
Frobenius orbits on the character group limit L, in concrete (given q) and
abstract (declared invariants) form, and the twist by a sign character
"""
import logging
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from app.config import Settings, settings
from app.exceptions import BoundExceededError, InvalidOrbitError, check_bound
from app.models import FrobeniusOrbit, MultiPartition, OrbitTable, OrbitTag, Partition, Twist

logger = logging.getLogger(__name__)


def is_odd_prime_power(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    p = next(f for f in range(3, q + 1, 2) if q % f == 0)
    while q % p == 0:
        q //= p
    return q == 1


def frobenius_multiplier(q: int, twist: Twist) -> int:
    """q for sigma, -q for the twisted sigma"""
    return q if twist is Twist.SPLIT else -q


def level_modulus(q: int, twist: Twist, level: int) -> int:
    """Order of the fixed points of sigma^level (resp. twisted sigma^level)"""
    return q ** level - 1 if twist is Twist.SPLIT else q ** level - (-1) ** level


def norm_exponent(q: int, twist: Twist, level: int, target: int) -> int:
    """Exponent of the norm from level `target` down to `level`"""
    if target % level:
        raise InvalidOrbitError(f"level {level} does not divide level {target}")
    step = frobenius_multiplier(q, twist) ** level
    return sum(step ** i for i in range(target // level))


def embed(q: int, twist: Twist, k: int, level: int, target: int) -> int:
    """Transpose of the norm: a residue at `level` as a residue at `target`"""
    return (k * norm_exponent(q, twist, level, target)) % level_modulus(q, twist, target)


def residue_cycle(k: int, multiplier: int, modulus: int) -> List[int]:
    cycle = [k % modulus]
    nxt = (k * multiplier) % modulus
    while nxt != cycle[0]:
        cycle.append(nxt)
        nxt = (nxt * multiplier) % modulus
    return cycle


def residue_orbits(multiplier: int, modulus: int) -> List[Tuple[int, ...]]:
    """Partition Z/modulus into orbits of multiplication by multiplier"""
    seen = set()
    orbits = []
    for k in range(modulus):
        if k in seen:
            continue
        cycle = residue_cycle(k, multiplier, modulus)
        seen.update(cycle)
        orbits.append(tuple(sorted(cycle)))
    return orbits


def orbit_id(level: int, representative: int) -> str:
    return f"{level}:{representative}"


def exact_level_orbits(q: int, twist: Twist, level: int) -> List[Tuple[int, ...]]:
    """Orbits at `level` of size exactly `level`, i.e. not coming from lower levels"""
    modulus = level_modulus(q, twist, level)
    return [o for o in residue_orbits(frobenius_multiplier(q, twist), modulus) if len(o) == level]


def exact_level_count(q: int, twist: Twist, level: int) -> int:
    """Number of orbits of size exactly `level`"""
    return len(exact_level_orbits(q, twist, level))


def lower_level_image(q: int, twist: Twist, level: int) -> set:
    """Residues at `level` embedded from some proper divisor level"""
    image = set()
    for lower in range(1, level):
        if level % lower == 0:
            for k in range(level_modulus(q, twist, lower)):
                image.add(embed(q, twist, k, lower, level))
    return image


def _canonical(q: int, twist: Twist, level: int, k: int, choose: Callable[[Sequence[int]], int] = min) -> int:
    modulus = level_modulus(q, twist, level)
    return choose(residue_cycle(k, frobenius_multiplier(q, twist), modulus))


def enumerate_orbits(
    q: int, twist: Twist, max_level: int, choose: Callable[[Sequence[int]], int] = min
) -> OrbitTable:
    """Orbits of exact level up to max_level; `choose` picks each representative from its cycle"""
    orbits: List[FrobeniusOrbit] = []
    for level in range(1, max_level + 1):
        modulus = level_modulus(q, twist, level)
        found = exact_level_orbits(q, twist, level)
        reps = {choose(o) for o in found}
        for cycle in found:
            k = choose(cycle)
            dual = _canonical(q, twist, level, -k, choose)
            if level == 1 and k == 0:
                tag = OrbitTag.ONE
            elif level == 1 and 2 * k == modulus:
                tag = OrbitTag.MINUS_ONE
            elif dual == k:
                tag = OrbitTag.SELF_DUAL
            else:
                tag = OrbitTag.DUAL_PAIR
            if dual not in reps:
                raise InvalidOrbitError(f"dual of {orbit_id(level, k)} missing at level {level}")
            orbits.append(
                FrobeniusOrbit(
                    id=orbit_id(level, k),
                    tag=tag,
                    m=level,
                    d=-1 if k % 2 else 1,
                    twist=twist,
                    partner=orbit_id(level, dual) if tag is OrbitTag.DUAL_PAIR else None,
                    q=q,
                    representative=k,
                )
            )
        logger.info(f"q={q} {twist.value} level {level}: {len(found)} new orbits")
    return OrbitTable(twist, tuple(orbits), q)


def zeta_twist(table: OrbitTable, rho: MultiPartition, k_zeta: int = 1) -> MultiPartition:
    """Move each partition from the orbit of xi to the orbit of zeta.xi"""
    if not table.is_concrete:
        raise InvalidOrbitError("the sign-character twist needs a concrete orbit table")
    if k_zeta % 2 == 0:
        raise InvalidOrbitError(f"k_zeta must be odd, got {k_zeta}")
    q, twist = table.q, table.twist
    moved: Dict[str, Partition] = {}
    for source, part in rho.assignments:
        orbit = table.get(source)
        level = orbit.m
        modulus = level_modulus(q, twist, level)
        shifted = (orbit.representative + embed(q, twist, k_zeta, 1, level)) % modulus
        cycle = residue_cycle(shifted, frobenius_multiplier(q, twist), modulus)
        target = next((orbit_id(level, r) for r in cycle if orbit_id(level, r) in table), None)
        if target is None:
            raise InvalidOrbitError(f"twist of {source} is missing from the table")
        moved[target] = part
    return MultiPartition.build(table, moved)


def abstract_table(twist: Twist, specs: Iterable[Mapping]) -> OrbitTable:
    """Build a table from declared invariants: id, tag, m, d and optional partner"""
    orbits = []
    for spec in specs:
        try:
            orbits.append(
                FrobeniusOrbit(
                    id=str(spec["id"]),
                    tag=OrbitTag(spec["tag"]),
                    m=int(spec.get("m", 1)),
                    d=int(spec.get("d", 1)),
                    twist=twist,
                    partner=spec.get("partner"),
                )
            )
        except (KeyError, ValueError) as exc:
            raise InvalidOrbitError(f"bad orbit declaration {dict(spec)}: {exc}") from exc
    return OrbitTable(twist, tuple(orbits))


def unipotent_table(twist: Twist) -> OrbitTable:
    """Table holding only the orbit of 1"""
    return OrbitTable(twist, (FrobeniusOrbit("1", OrbitTag.ONE, 1, 1, twist),))


def unipotent(table: OrbitTable, rho: Partition) -> MultiPartition:
    one = table.find(OrbitTag.ONE)
    if one is None:
        raise InvalidOrbitError("orbit table has no orbit of 1")
    return MultiPartition.build(table, {one.id: rho})


def table_to_dict(table: OrbitTable) -> Dict:
    return {
        "twist": table.twist.value,
        "q": table.q,
        "orbits": [
            {
                "id": o.id,
                "tag": o.tag.value,
                "m": o.m,
                "d": o.d,
                "partner": o.partner,
                "representative": o.representative,
            }
            for o in table
        ],
    }


class OrbitService:
    def __init__(self, config: Settings = settings):
        self.config = config

    def enumerate_orbits(self, q: int, twist: Twist, max_level: int) -> OrbitTable:
        """Concrete orbit table for q up to the given level"""
        if not is_odd_prime_power(q):
            raise InvalidOrbitError(f"q must be an odd prime power, got {q}")
        check_bound("q", q, self.config.max_q)
        if max_level < 1:
            raise InvalidOrbitError("max_level must be at least 1")
        check_bound("max_level", max_level, self.config.max_level)
        top = level_modulus(q, twist, max_level)
        if top > self.config.orbit_element_bound:
            raise BoundExceededError(f"residues at level {max_level} for q={q}", top, self.config.orbit_element_bound)
        return enumerate_orbits(q, twist, max_level)

    def zeta_twist(self, table: OrbitTable, rho: MultiPartition, k_zeta: int = 1) -> MultiPartition:
        """Twist by a character zeta with <-1, zeta> = -1"""
        return zeta_twist(table, rho, k_zeta)

    def abstract_table(self, twist: Twist, specs: Iterable[Mapping]) -> OrbitTable:
        """Orbit table from declared invariants"""
        return abstract_table(twist, specs)
