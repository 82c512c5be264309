"""
Domain value types: partitions, centralizer involutions, signed tableaux,
Frobenius orbits, multipartitions and symmetric-space cases
"""
import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from app.exceptions import ComputationError, IncompatibleCaseError, InvalidOrbitError


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ComputationError(f"not a partition: {list(self.parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the canonical text form, e.g. "[3,1]" """
        try:
            value = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ComputationError(f"invalid partition text {text!r}") from exc
        if isinstance(value, int) and not isinstance(value, bool):
            value = [value]
        if not isinstance(value, list) or not all(isinstance(p, int) and not isinstance(p, bool) for p in value):
            raise ComputationError(f"invalid partition text {text!r}")
        return cls(tuple(value))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def multiplicity(self, i: int) -> int:
        """m_i, the number of parts equal to i"""
        return self.multiplicities.get(i, 0)

    @property
    def is_even(self) -> bool:
        return all(p % 2 == 0 for p in self.parts)

    def to_list(self) -> List[int]:
        return list(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return json.dumps(self.to_list(), separators=(",", ":"))


@dataclass(frozen=True)
class PartitionStats:
    multiplicities: Tuple[Tuple[int, int], ...]
    is_even: bool
    ell_even: int
    ell_odd: int
    ell_0mod4: int
    ell_2mod4: int
    z: int
    epsilon: int


@dataclass(frozen=True)
class InvolutionStats:
    l1: int = 0
    l2: int = 0
    l3: int = 0
    l1_even: int = 0
    l1_odd: int = 0
    l2_0mod4: int = 0
    l2_2mod4: int = 0
    l3_even: int = 0
    l3_odd: int = 0

    def as_tuple(self) -> Tuple[int, ...]:
        return (
            self.l1, self.l2, self.l3, self.l1_even, self.l1_odd,
            self.l2_0mod4, self.l2_2mod4, self.l3_even, self.l3_odd,
        )


STAT_NAMES = (
    "l1", "l2", "l3", "l1_even", "l1_odd",
    "l2_0mod4", "l2_2mod4", "l3_even", "l3_odd",
)


class CycleKind(int, enum.Enum):
    FIXED = 1
    ROTATED = 2
    PAIRED = 3


@dataclass(frozen=True)
class CentralizerInvolution:
    """An involution commuting with w_nu, stored per cycle of w_nu.

    pairing[j] is the cycle that j is sent to and shifts[j] is the rotation
    offset i(w, j) in Z/nu_j.
    """
    nu: Partition
    pairing: Tuple[int, ...]
    shifts: Tuple[int, ...]

    def kind(self, j: int) -> CycleKind:
        if self.pairing[j] != j:
            return CycleKind.PAIRED
        return CycleKind.FIXED if self.shifts[j] == 0 else CycleKind.ROTATED

    @cached_property
    def fixed_cycles(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.nu.length) if self.kind(j) is CycleKind.FIXED)

    @cached_property
    def stats(self) -> InvolutionStats:
        counts = dict.fromkeys(STAT_NAMES, 0)
        for j, length in enumerate(self.nu.parts):
            kind = self.kind(j)
            if kind is CycleKind.FIXED:
                counts["l1"] += 1
                counts["l1_even" if length % 2 == 0 else "l1_odd"] += 1
            elif kind is CycleKind.ROTATED:
                counts["l2"] += 1
                counts["l2_0mod4" if length % 4 == 0 else "l2_2mod4"] += 1
            else:
                counts["l3"] += 1
                counts["l3_even" if length % 2 == 0 else "l3_odd"] += 1
        return InvolutionStats(**counts)


class SignFamily(str, enum.Enum):
    PLUS = "plus"
    STAR = "star"


@dataclass(frozen=True)
class SignedInvolution:
    """A pair (w, epsilon) with epsilon constant (plus) or alternating (star)
    along each pointwise-fixed cycle of w.

    For the plus family signs[i] is +1/-1 on the i-th fixed cycle; for the
    star family it is 0/1, selecting one of the two alternating patterns.
    """
    base: CentralizerInvolution
    family: SignFamily
    signs: Tuple[int, ...]

    @property
    def signature(self) -> int:
        """p_plus - p_minus"""
        if self.family is SignFamily.STAR:
            return 0
        lengths = self.base.nu.parts
        return sum(s * lengths[j] for s, j in zip(self.signs, self.base.fixed_cycles))


@dataclass(frozen=True)
class SignedTableau:
    """Signed tableau up to permuting rows of equal length.

    plus_counts pairs each distinct row length (longest first) with the
    number of rows of that length ending in +.
    """
    shape: Partition
    plus_counts: Tuple[Tuple[int, int], ...]

    @property
    def signature(self) -> int:
        """(#odd rows ending +) - (#odd rows ending -)"""
        return sum(
            2 * plus - self.shape.multiplicity(length)
            for length, plus in self.plus_counts
            if length % 2 == 1
        )

    def rows(self) -> List[Tuple[int, int]]:
        """(length, terminal sign) top to bottom, + rows above - rows of equal length"""
        rows: List[Tuple[int, int]] = []
        for length, plus in self.plus_counts:
            minus = self.shape.multiplicity(length) - plus
            rows.extend([(length, 1)] * plus)
            rows.extend([(length, -1)] * minus)
        return rows


class Twist(str, enum.Enum):
    SPLIT = "split"
    NONSPLIT = "nonsplit"


class OrbitTag(str, enum.Enum):
    ONE = "one"
    MINUS_ONE = "minus-one"
    SELF_DUAL = "self-dual"
    DUAL_PAIR = "dual-pair"


@dataclass(frozen=True)
class FrobeniusOrbit:
    id: str
    tag: OrbitTag
    m: int
    d: int
    twist: Twist
    partner: Optional[str] = None
    q: Optional[int] = None
    representative: Optional[int] = None

    @property
    def is_concrete(self) -> bool:
        return self.q is not None and self.representative is not None


@dataclass(frozen=True)
class OrbitTable:
    twist: Twist
    orbits: Tuple[FrobeniusOrbit, ...]
    q: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "orbits", tuple(self.orbits))
        by_id: Dict[str, FrobeniusOrbit] = {}
        for orbit in self.orbits:
            if orbit.id in by_id:
                raise InvalidOrbitError(f"duplicate orbit id '{orbit.id}'")
            by_id[orbit.id] = orbit
        object.__setattr__(self, "_by_id", by_id)
        self._validate()

    def _validate(self) -> None:
        tags = [o.tag for o in self.orbits]
        if tags.count(OrbitTag.ONE) > 1 or tags.count(OrbitTag.MINUS_ONE) > 1:
            raise InvalidOrbitError("at most one orbit may be tagged one / minus-one")
        for orbit in self.orbits:
            if orbit.twist is not self.twist:
                raise InvalidOrbitError(f"orbit '{orbit.id}' has twist {orbit.twist.value}, table is {self.twist.value}")
            if orbit.m < 1 or orbit.d not in (1, -1):
                raise InvalidOrbitError(f"orbit '{orbit.id}': m must be positive and d = +1 or -1")
            if orbit.tag is OrbitTag.ONE and (orbit.m != 1 or orbit.d != 1):
                raise InvalidOrbitError("the orbit of 1 has m = 1 and d = +1")
            if orbit.tag is OrbitTag.MINUS_ONE and orbit.m != 1:
                raise InvalidOrbitError("the orbit of -1 has m = 1")
            if orbit.tag is OrbitTag.SELF_DUAL and orbit.m % 2:
                raise InvalidOrbitError(f"self-dual orbit '{orbit.id}' must have even m")
            if orbit.tag is OrbitTag.DUAL_PAIR:
                partner = self._by_id.get(orbit.partner or "")
                if partner is None or partner.id == orbit.id:
                    raise InvalidOrbitError(f"orbit '{orbit.id}' needs a partner orbit")
                if partner.tag is not OrbitTag.DUAL_PAIR or partner.partner != orbit.id:
                    raise InvalidOrbitError(f"orbits '{orbit.id}' and '{partner.id}' are not mutual partners")
                if (partner.m, partner.d) != (orbit.m, orbit.d):
                    raise InvalidOrbitError(f"dual orbits '{orbit.id}' and '{partner.id}' differ in m or d")
            elif orbit.partner is not None:
                raise InvalidOrbitError(f"orbit '{orbit.id}' is self-dual and takes no partner")

    def __iter__(self) -> Iterator[FrobeniusOrbit]:
        return iter(self.orbits)

    def __contains__(self, orbit_id: str) -> bool:
        return orbit_id in self._by_id

    def get(self, orbit_id: str) -> FrobeniusOrbit:
        try:
            return self._by_id[orbit_id]
        except KeyError:
            raise InvalidOrbitError(f"unknown orbit id '{orbit_id}'") from None

    def find(self, tag: OrbitTag) -> Optional[FrobeniusOrbit]:
        return next((o for o in self.orbits if o.tag is tag), None)

    @property
    def is_concrete(self) -> bool:
        return self.q is not None and all(o.is_concrete for o in self.orbits)


@dataclass(frozen=True)
class MultiPartition:
    """Assignment of partitions to orbits; empty partitions are dropped"""
    table: OrbitTable
    assignments: Tuple[Tuple[str, Partition], ...] = ()

    def __post_init__(self):
        cleaned = {}
        for orbit_id, part in self.assignments:
            self.table.get(orbit_id)
            if orbit_id in cleaned:
                raise InvalidOrbitError(f"orbit '{orbit_id}' assigned twice")
            cleaned[orbit_id] = part
        object.__setattr__(
            self, "assignments",
            tuple(sorted((k, v) for k, v in cleaned.items() if v.size)),
        )

    @classmethod
    def build(cls, table: OrbitTable, mapping: Mapping[str, Partition]) -> "MultiPartition":
        return cls(table, tuple(mapping.items()))

    def __getitem__(self, orbit_id: str) -> Partition:
        return dict(self.assignments).get(orbit_id, Partition())

    def tagged(self, tag: OrbitTag) -> Partition:
        orbit = self.table.find(tag)
        return self[orbit.id] if orbit is not None else Partition()

    @property
    def support(self) -> Tuple[str, ...]:
        return tuple(k for k, _ in self.assignments)

    @property
    def n(self) -> int:
        return sum(self.table.get(k).m * p.size for k, p in self.assignments)

    def to_dict(self) -> Dict[str, List[int]]:
        return {k: p.to_list() for k, p in self.assignments}


class QuotientKind(str, enum.Enum):
    SYMPLECTIC = "symplectic"
    LEVI = "levi"
    EXTENSION = "extension"
    ORTHOGONAL = "orthogonal"


CASE_KEYS: Dict[str, Tuple[QuotientKind, Twist]] = {
    "gl-sp": (QuotientKind.SYMPLECTIC, Twist.SPLIT),
    "u-sp": (QuotientKind.SYMPLECTIC, Twist.NONSPLIT),
    "gl-glgl": (QuotientKind.LEVI, Twist.SPLIT),
    "u-uu": (QuotientKind.LEVI, Twist.NONSPLIT),
    "gl-glq2": (QuotientKind.EXTENSION, Twist.SPLIT),
    "u-uq4": (QuotientKind.EXTENSION, Twist.NONSPLIT),
    "gl-o": (QuotientKind.ORTHOGONAL, Twist.SPLIT),
    "u-o": (QuotientKind.ORTHOGONAL, Twist.NONSPLIT),
}


@dataclass(frozen=True)
class SymmetricSpaceCase:
    kind: QuotientKind
    twist: Twist
    n: int
    n_plus: Optional[int] = None
    n_minus: Optional[int] = None
    epsilon: Optional[int] = None
    special: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise IncompatibleCaseError("n must be nonnegative")
        if self.kind in (QuotientKind.SYMPLECTIC, QuotientKind.EXTENSION) and self.n % 2:
            raise IncompatibleCaseError(f"{self.key} needs even n, got {self.n}")
        if self.kind is QuotientKind.LEVI:
            if self.n_plus is None or self.n_minus is None or self.n_plus < 0 or self.n_minus < 0:
                raise IncompatibleCaseError(f"{self.key} needs nonnegative n_plus and n_minus")
            if self.n_plus + self.n_minus != self.n:
                raise IncompatibleCaseError(f"n_plus + n_minus = {self.n_plus + self.n_minus} != n = {self.n}")
        elif self.n_plus is not None or self.n_minus is not None:
            raise IncompatibleCaseError(f"{self.key} takes no n_plus / n_minus")
        if self.kind is QuotientKind.ORTHOGONAL and self.n % 2 == 0:
            if self.epsilon not in (1, -1):
                raise IncompatibleCaseError(f"{self.key} with even n needs epsilon = +1 or -1")
        elif self.epsilon is not None:
            raise IncompatibleCaseError(f"{self.key} with n = {self.n} takes no epsilon")
        if self.special and self.kind is not QuotientKind.ORTHOGONAL:
            raise IncompatibleCaseError("the special-orthogonal variant applies to orthogonal cases only")

    @classmethod
    def from_key(
        cls,
        key: str,
        n: int,
        n_plus: Optional[int] = None,
        n_minus: Optional[int] = None,
        epsilon: Optional[int] = None,
        special: bool = False,
    ) -> "SymmetricSpaceCase":
        if key not in CASE_KEYS:
            raise IncompatibleCaseError(f"unknown case '{key}'; expected one of: {', '.join(CASE_KEYS)}")
        kind, twist = CASE_KEYS[key]
        return cls(kind, twist, n, n_plus, n_minus, epsilon, special)

    @property
    def key(self) -> str:
        return next(k for k, v in CASE_KEYS.items() if v == (self.kind, self.twist))

    @property
    def signature(self) -> int:
        return (self.n_plus or 0) - (self.n_minus or 0)

    def describe(self) -> str:
        extra = []
        if self.kind is QuotientKind.LEVI:
            extra.append(f"({self.n_plus},{self.n_minus})")
        if self.epsilon is not None:
            extra.append("eps=+" if self.epsilon > 0 else "eps=-")
        if self.special:
            extra.append("SO")
        return " ".join([f"{self.key} n={self.n}", *extra])
