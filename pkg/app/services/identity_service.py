"""
Named symmetric-group identities, each checked by two independent routes:
involution enumeration on one side, character sums on the other
"""
import logging
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from app.config import Settings, settings
from app.exceptions import ComputationError, UnknownNameError, check_bound
from app.models import Partition, SignFamily
from app.services.character_service import character_sum
from app.services.involution_service import weighted_involution_sum, weighted_signed_sum
from app.services.partition_service import epsilon, generate_partitions, n_stat, transpose
from app.services.tableau_service import (
    phipsi_fixed_closed_form,
    psi_fixed_closed_form,
    psi_fixed_count,
    tableau_count,
)

logger = logging.getLogger(__name__)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class Identity:
    name: str
    signed: bool
    lhs: Callable[[Partition, Optional[int]], int]
    rhs: Callable[[Partition, Optional[int]], int]
    description: str


# Right-hand sides

def _rhs_levi(nu: Partition, d: Optional[int]) -> int:
    return character_sum(nu, "all", lambda rho: tableau_count(transpose(rho), d))


def _rhs_unitary_levi(nu: Partition, d: Optional[int]) -> int:
    return character_sum(nu, "all", lambda rho: _sign(n_stat(rho)) * psi_fixed_count(transpose(rho), d))


def _rhs_unitary_extension(nu: Partition, d: Optional[int]) -> int:
    return character_sum(
        nu, "all", lambda rho: _sign(n_stat(rho)) * phipsi_fixed_closed_form(transpose(rho))
    )


def _rhs_orthogonal(nu: Partition, d: Optional[int]) -> int:
    total = character_sum(nu, "all", lambda rho: tableau_count(rho))
    return _sign(nu.size) * total


def _rhs_unitary_orthogonal(nu: Partition, d: Optional[int]) -> int:
    return character_sum(nu, "all", lambda rho: _sign(n_stat(transpose(rho))) * psi_fixed_closed_form(rho))


def _rhs_unitary_special(nu: Partition, d: Optional[int]) -> int:
    return character_sum(nu, "all", lambda rho: _sign(n_stat(transpose(rho))) * phipsi_fixed_closed_form(rho))


IDENTITIES: Dict[str, Identity] = {
    identity.name: identity
    for identity in (
        Identity(
            "ff-inv", False,
            lambda nu, d: weighted_involution_sum(nu, "ff"),
            lambda nu, d: character_sum(nu, "even"),
            "|Z_ff-inv| = sum over even rho of chi",
        ),
        Identity(
            "macdonald-I8E11", False,
            lambda nu, d: weighted_involution_sum(nu, "none", "sign-l2"),
            lambda nu, d: character_sum(nu, "all"),
            "sum of (-1)^l2 = sum of all chi",
        ),
        Identity(
            "glngln-star", False,
            lambda nu, d: weighted_signed_sum(nu, SignFamily.STAR, None, "sign-l2"),
            lambda nu, d: character_sum(nu, "even"),
            "star family, (-1)^l2 = sum over even rho of chi",
        ),
        Identity(
            "other-gln-on", False,
            lambda nu, d: weighted_involution_sum(nu, "no-even-fixed"),
            lambda nu, d: character_sum(nu, "all"),
            "#{l1_even = l2_even = 0} = sum of all chi",
        ),
        Identity(
            "glnglngln", True,
            lambda nu, d: weighted_signed_sum(nu, SignFamily.PLUS, d, "sign-l2"),
            _rhs_levi,
            "signature class, (-1)^l2 = sum of |T_d(rho')| chi",
        ),
        Identity(
            "ununun", True,
            lambda nu, d: weighted_signed_sum(nu, SignFamily.PLUS, d, "unitary-levi"),
            _rhs_unitary_levi,
            "signature class, (-1)^(l2_0mod4 + l3_odd/2) = sum of (-1)^n(rho) |T_d(rho')^psi| chi",
        ),
        Identity(
            "unun", False,
            lambda nu, d: weighted_signed_sum(nu, SignFamily.STAR, None, "unitary-levi"),
            _rhs_unitary_extension,
            "star family, (-1)^(l2_0mod4 + l3_odd/2) = sum of (-1)^n(rho) |T(rho')^phipsi| chi",
        ),
        Identity(
            "gln-on", False,
            lambda nu, d: weighted_involution_sum(nu, "none", "minus-two-l1"),
            _rhs_orthogonal,
            "sum of (-2)^l1 = (-1)^|nu| sum of prod(m_i + 1) chi",
        ),
        Identity(
            "gln-son", False,
            lambda nu, d: weighted_involution_sum(nu, "no-odd-fixed", "minus-two-l1"),
            lambda nu, d: character_sum(nu, "transpose-even"),
            "l1_odd = 0, (-2)^l1 = sum over rho' even of chi",
        ),
        Identity(
            "un-on", False,
            lambda nu, d: weighted_involution_sum(nu, "none", "unitary-orthogonal"),
            _rhs_unitary_orthogonal,
            "(-1)^(l1_even + l2_2mod4 + l3_odd/2) 2^l1 = sum of (-1)^n(rho') |T(rho)^psi| chi",
        ),
        Identity(
            "un-son", False,
            lambda nu, d: weighted_involution_sum(nu, "no-odd-fixed", "unitary-special"),
            _rhs_unitary_special,
            "l1_odd = 0, (-1)^(l1 + l2_2mod4 + l3_odd/2) 2^l1 = sum of (-1)^n(rho') |T(rho)^phipsi| chi",
        ),
    )
}


@dataclass(frozen=True)
class IdentityCase:
    name: str
    nu: Partition
    signature: Optional[int] = None


@dataclass(frozen=True)
class IdentityResult:
    case: IdentityCase
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def resolve_identity(name: str) -> Identity:
    if name not in IDENTITIES:
        raise UnknownNameError("identity", name, IDENTITIES)
    return IDENTITIES[name]


def check_identity(case: IdentityCase) -> IdentityResult:
    identity = resolve_identity(case.name)
    if identity.signed and case.signature is None:
        raise ComputationError(f"identity {case.name} needs a signature class")
    return IdentityResult(case, identity.lhs(case.nu, case.signature), identity.rhs(case.nu, case.signature))


def signature_classes(size: int) -> List[int]:
    """Canonical differences p+ - p- with |d| <= size and d = size mod 2"""
    return list(range(-size, size + 1, 2))


# Closed forms for nu = (a^b), multiplied over distinct parts

def _matching_sum(a: int, b: int) -> int:
    return sum(comb(b, 2 * r) * a ** r * factorial(2 * r) // (2 ** r * factorial(r)) for r in range(b // 2 + 1))


def _perfect_matchings(a: int, b: int) -> int:
    half = b // 2
    return a ** half * factorial(b) // (2 ** half * factorial(half))


def _ff_block(a: int, b: int) -> int:
    if a % 2 == 1:
        return 0 if b % 2 else _perfect_matchings(a, b)
    return _matching_sum(a, b)


def _even_fixed_free_block(a: int, b: int) -> int:
    if a % 2 == 0:
        return 0 if b % 2 else _perfect_matchings(a, b)
    return _matching_sum(a, b)


CLOSED_FORM_FAMILIES: Dict[str, Callable[[int, int], int]] = {
    "ff-inv-signed": _ff_block,
    "even-fixed-free": _even_fixed_free_block,
}


def multiplicative_closed_form(nu: Partition, family: str) -> int:
    if family not in CLOSED_FORM_FAMILIES:
        raise UnknownNameError("closed-form family", family, CLOSED_FORM_FAMILIES)
    block = CLOSED_FORM_FAMILIES[family]
    return prod(block(a, b) for a, b in nu.multiplicities.items())


def closed_form_enumeration(nu: Partition, family: str) -> Tuple[int, int]:
    """The two enumerated quantities each closed-form family evaluates"""
    if family == "ff-inv-signed":
        return (
            weighted_involution_sum(nu, "ff"),
            epsilon(nu) * weighted_involution_sum(nu, "no-odd-fixed", "minus-two-l1"),
        )
    if family == "even-fixed-free":
        return (
            weighted_involution_sum(nu, "no-even-fixed"),
            weighted_involution_sum(nu, "none", "sign-l2"),
        )
    raise UnknownNameError("closed-form family", family, CLOSED_FORM_FAMILIES)


class IdentityService:
    def __init__(self, config: Settings = settings):
        self.config = config

    def check_identity(self, case: IdentityCase) -> IdentityResult:
        """Evaluate both sides of one identity"""
        identity = resolve_identity(case.name)
        bound = self.config.identity_signed_bound if identity.signed else self.config.identity_plain_bound
        check_bound("|nu|", case.nu.size, bound)
        return check_identity(case)

    def cases(self, names: Iterable[str], max_size: Optional[int] = None) -> Iterator[IdentityCase]:
        """All cases of the named identities up to the size bounds"""
        for name in names:
            identity = resolve_identity(name)
            limit = self.config.identity_signed_bound if identity.signed else self.config.identity_plain_bound
            if max_size is not None:
                check_bound(f"max_size for {name}", max_size, limit)
                limit = max_size
            for size in range(limit + 1):
                for nu in generate_partitions(size):
                    if identity.signed:
                        for d in signature_classes(size):
                            yield IdentityCase(name, nu, d)
                    else:
                        yield IdentityCase(name, nu)

    def run_suite(self, names: Optional[Iterable[str]] = None, max_size: Optional[int] = None) -> List[IdentityResult]:
        """Check every case of the named identities; all identities by default"""
        names = list(names) if names is not None else list(IDENTITIES)
        results = []
        for case in self.cases(names, max_size):
            result = check_identity(case)
            if not result.equal:
                logger.error(f"{case.name} fails at nu={case.nu} d={case.signature}: {result.lhs} != {result.rhs}")
            results.append(result)
        logger.info(f"Checked {len(results)} identity cases over {len(names)} identities")
        return results

    def multiplicative_closed_form(self, nu: Partition, family: str) -> int:
        """Closed form for the (a^b) family"""
        check_bound("|nu|", nu.size, self.config.involution_bound)
        return multiplicative_closed_form(nu, family)
