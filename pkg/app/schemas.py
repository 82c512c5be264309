"""
Pydantic schemas for requests and responses, shared by the API and the CLI
"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from app.config import settings
from app.exceptions import IncompatibleCaseError
from app.models import (
    CASE_KEYS,
    MultiPartition,
    OrbitTable,
    Partition,
    PartitionStats,
    SymmetricSpaceCase,
    Twist,
)
from app.services.orbit_service import OrbitService, abstract_table, table_to_dict, unipotent_table


# Partition schemas
class PartitionStatsResponse(BaseModel):
    partition: List[int]
    transpose: List[int]
    n_stat: int
    multiplicities: Dict[int, int]
    is_even: bool
    ell_even: int
    ell_odd: int
    ell_0mod4: int
    ell_2mod4: int
    z: int
    epsilon: int

    @classmethod
    def build(cls, nu: Partition, conj: Partition, n_value: int, stats: PartitionStats) -> "PartitionStatsResponse":
        return cls(
            partition=nu.to_list(),
            transpose=conj.to_list(),
            n_stat=n_value,
            multiplicities=dict(stats.multiplicities),
            is_even=stats.is_even,
            ell_even=stats.ell_even,
            ell_odd=stats.ell_odd,
            ell_0mod4=stats.ell_0mod4,
            ell_2mod4=stats.ell_2mod4,
            z=stats.z,
            epsilon=stats.epsilon,
        )


class PartitionListResponse(BaseModel):
    n: int
    count: int
    partitions: List[List[int]]


# Character schemas
class CharacterResponse(BaseModel):
    rho: List[int]
    nu: List[int]
    value: int


class CharacterSumResponse(BaseModel):
    nu: List[int]
    filter: str
    value: int


# Involution schemas
class InvolutionResponse(BaseModel):
    nu: List[int]
    family: str
    filter: str
    weight: str
    signature: Optional[int] = None
    count: int
    weighted_sum: int


# Tableau schemas
class TableauResponse(BaseModel):
    mu: List[int]
    signature: Optional[int] = None
    fixed_by: Optional[str] = None
    count: int
    signature_distribution: Dict[int, int] = Field(default_factory=dict)


# Orbit schemas
class OrbitSpec(BaseModel):
    id: str
    tag: str = Field(..., description="one, minus-one, self-dual or dual-pair")
    m: int = Field(1, ge=1)
    d: int = Field(1, description="+1 or -1")
    partner: Optional[str] = None
    representative: Optional[int] = None


class OrbitTableResponse(BaseModel):
    twist: Twist
    q: Optional[int] = None
    orbits: List[OrbitSpec]

    @classmethod
    def from_table(cls, table: OrbitTable) -> "OrbitTableResponse":
        return cls.model_validate(table_to_dict(table))


# Multiplicity schemas
class CaseParams(BaseModel):
    case: str = Field(..., description=f"one of: {', '.join(CASE_KEYS)}")
    n_plus: Optional[int] = None
    n_minus: Optional[int] = None
    epsilon: Optional[int] = None
    special: bool = False

    def to_case(self, n: int) -> SymmetricSpaceCase:
        return SymmetricSpaceCase.from_key(self.case, n, self.n_plus, self.n_minus, self.epsilon, self.special)


class MultiplicityRequest(CaseParams):
    """Case parameters plus a multipartition over a concrete or declared orbit table.

    With `q` set the table is enumerated up to `max_level` and orbit ids are
    "level:representative"; otherwise `orbits` declares the table. Without
    either, the table holds only the orbit of 1, with id "1".
    """
    n: Optional[int] = Field(None, description="checked against the multipartition when given")
    q: Optional[int] = None
    max_level: int = Field(1, ge=1)
    orbits: Optional[List[OrbitSpec]] = None
    assignments: Dict[str, List[int]] = Field(default_factory=dict)
    k_zeta: int = 1

    @property
    def twist(self) -> Twist:
        if self.case not in CASE_KEYS:
            return Twist.SPLIT
        return CASE_KEYS[self.case][1]

    def to_table(self, orbit_service: OrbitService) -> OrbitTable:
        if self.q is not None:
            return orbit_service.enumerate_orbits(self.q, self.twist, self.max_level)
        if self.orbits is not None:
            return abstract_table(self.twist, [o.model_dump() for o in self.orbits])
        return unipotent_table(self.twist)

    def to_multipartition(self, table: OrbitTable) -> MultiPartition:
        return MultiPartition.build(table, {k: Partition(tuple(v)) for k, v in self.assignments.items()})

    def build(self, orbit_service: OrbitService) -> Tuple[SymmetricSpaceCase, MultiPartition]:
        rho = self.to_multipartition(self.to_table(orbit_service))
        if self.n is not None and self.n != rho.n:
            raise IncompatibleCaseError(f"declared n = {self.n} but the multipartition has n = {rho.n}")
        return self.to_case(rho.n), rho


class MultiplicityResponse(BaseModel):
    schema_version: str = settings.schema_version
    case: str
    description: str
    assignments: Dict[str, List[int]]
    multiplicity: int


class UnipotentRow(BaseModel):
    rho: List[int]
    multiplicity: int


class UnipotentTableResponse(BaseModel):
    schema_version: str = settings.schema_version
    case: str
    description: str
    rows: List[UnipotentRow]


class CrosscheckResult(BaseModel):
    case: str
    nu: Dict[str, List[int]]
    involution: Optional[int] = None
    character: Optional[int] = None
    equal: bool
    error: Optional[str] = None


# Identity schemas
class IdentityResultSchema(BaseModel):
    identity: str
    nu: List[int]
    signature: Optional[int] = None
    lhs: int
    rhs: int
    equal: bool

    @classmethod
    def from_result(cls, result) -> "IdentityResultSchema":
        return cls(
            identity=result.case.name,
            nu=result.case.nu.to_list(),
            signature=result.case.signature,
            lhs=result.lhs,
            rhs=result.rhs,
            equal=result.equal,
        )


# Run report
class RunReport(BaseModel):
    schema_version: str = settings.schema_version
    command: List[str]
    items: List[dict] = Field(default_factory=list)
    failures: List[dict] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


# Error schemas
class ErrorResponse(BaseModel):
    detail: str
    error_code: Optional[str] = None
