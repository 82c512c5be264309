"""
Involutions in the centralizer of w_nu, plain and signed, with the
statistics and weightings the multiplicity formulas are built from
"""
import logging
import re
from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from app.config import Settings, settings
from app.exceptions import UnknownNameError, WeightExpressionError, check_bound
from app.models import (
    STAT_NAMES,
    CentralizerInvolution,
    InvolutionStats,
    Partition,
    SignedInvolution,
    SignFamily,
)

logger = logging.getLogger(__name__)

INVOLUTION_FILTERS: Dict[str, Callable[[InvolutionStats], bool]] = {
    "none": lambda s: True,
    "ff": lambda s: s.l1 == 0,
    "no-odd-fixed": lambda s: s.l1_odd == 0,
    "no-even-fixed": lambda s: s.l1_even == 0 and s.l2 == 0,
}

NAMED_WEIGHTS: Dict[str, str] = {
    "one": "1",
    "sign-l2": "(-1)^l2",
    "minus-two-l1": "(-2)^l1",
    "two-l1": "2^l1",
    "unitary-levi": "(-1)^(l2_0mod4+l3_odd/2)",
    "unitary-orthogonal": "(-1)^(l1_even+l2_2mod4+l3_odd/2)*2^l1",
    "unitary-special": "(-1)^(l1+l2_2mod4+l3_odd/2)*2^l1",
}

_FACTOR = re.compile(r"^\(?(-?[12])\)?(?:\^(.+))?$")
_TERM = re.compile(r"^([a-z0-9_]+)(?:/(\d+))?$")


class WeightExpression:
    """Product of base^exponent factors over involution statistics.

    Grammar: factor ('*' factor)*, factor = base ['^' exponent],
    base in {1, -1, 2, -2} (optionally parenthesized), exponent a statistic
    name or '(' term ('+' term)* ')' with term = stat or stat/k.
    """

    def __init__(self, text: str):
        self.text = NAMED_WEIGHTS.get(text, text)
        self.factors: List[Tuple[int, List[Tuple[str, int]]]] = []
        source = self.text.replace(" ", "")
        if not source:
            raise WeightExpressionError("empty weight expression")
        for raw in source.split("*"):
            match = _FACTOR.match(raw)
            if not match:
                raise WeightExpressionError(f"malformed factor '{raw}' in '{text}'")
            base, exponent = int(match.group(1)), match.group(2)
            self.factors.append((base, self._parse_exponent(exponent, text)))

    @staticmethod
    def _parse_exponent(exponent: Optional[str], text: str) -> List[Tuple[str, int]]:
        if exponent is None:
            return []
        if exponent.startswith("(") and exponent.endswith(")"):
            pieces = exponent[1:-1].split("+")
        else:
            pieces = [exponent]
        terms = []
        for piece in pieces:
            match = _TERM.match(piece)
            if not match or match.group(1) not in STAT_NAMES:
                raise WeightExpressionError(f"malformed exponent '{exponent}' in '{text}'")
            divisor = int(match.group(2) or 1)
            if divisor == 0:
                raise WeightExpressionError(f"zero divisor in '{text}'")
            terms.append((match.group(1), divisor))
        return terms

    def __call__(self, stats: InvolutionStats) -> int:
        value = 1
        for base, terms in self.factors:
            power = 0
            for name, divisor in terms:
                amount = getattr(stats, name)
                if amount % divisor:
                    raise WeightExpressionError(f"{name}/{divisor} is not integral for {stats}")
                power += amount // divisor
            value *= base ** power
        return value


def resolve_filter(name: str) -> Callable[[InvolutionStats], bool]:
    if name not in INVOLUTION_FILTERS:
        raise UnknownNameError("involution filter", name, INVOLUTION_FILTERS)
    return INVOLUTION_FILTERS[name]


def _matchings(indices: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    """Partial matchings of indices; (j, j) marks an unmatched index"""
    if not indices:
        yield []
        return
    first, rest = indices[0], indices[1:]
    for tail in _matchings(rest):
        yield [(first, first)] + tail
    for pos, other in enumerate(rest):
        remaining = rest[:pos] + rest[pos + 1:]
        for tail in _matchings(remaining):
            yield [(first, other)] + tail


def _length_group_choices(length: int, indices: Sequence[int]) -> Iterator[List[Tuple[int, int, int]]]:
    for matching in _matchings(list(indices)):
        options = []
        for j, k in matching:
            if j == k:
                shifts = (0, length // 2) if length % 2 == 0 else (0,)
                options.append([((j, j, s),) for s in shifts])
            else:
                options.append([((j, k, s), (k, j, (-s) % length)) for s in range(length)])
        for combo in product(*options):
            yield [entry for group in combo for entry in group]


def generate_involutions(nu: Partition) -> Iterator[CentralizerInvolution]:
    """Every involution of Z^nu exactly once, unbounded"""
    groups: Dict[int, List[int]] = {}
    for j, length in enumerate(nu.parts):
        groups.setdefault(length, []).append(j)
    per_group = [list(_length_group_choices(length, idx)) for length, idx in groups.items()]
    for combo in product(*per_group):
        pairing = [0] * nu.length
        shifts = [0] * nu.length
        for group in combo:
            for j, k, s in group:
                pairing[j] = k
                shifts[j] = s
        yield CentralizerInvolution(nu, tuple(pairing), tuple(shifts))


@lru_cache(maxsize=None)
def stats_multiset(nu: Partition) -> Tuple[Tuple[InvolutionStats, int], ...]:
    counts = Counter(w.stats for w in generate_involutions(nu))
    return tuple(counts.items())


def _signatures(lengths: Sequence[int]) -> Counter:
    """Distribution of sum(+-length) over all sign choices"""
    dist = Counter({0: 1})
    for length in lengths:
        step: Counter = Counter()
        for total, count in dist.items():
            step[total + length] += count
            step[total - length] += count
        dist = step
    return dist


@lru_cache(maxsize=None)
def signed_multiset(nu: Partition, family: SignFamily) -> Tuple[Tuple[InvolutionStats, int, int], ...]:
    """(stats, signature, count) triples over the signed family"""
    counts: Counter = Counter()
    for w in generate_involutions(nu):
        stats = w.stats
        if family is SignFamily.STAR:
            if stats.l1_odd == 0:
                counts[(stats, 0)] += 2 ** stats.l1
        else:
            lengths = [nu.parts[j] for j in w.fixed_cycles]
            for signature, count in _signatures(lengths).items():
                counts[(stats, signature)] += count
    return tuple((stats, sig, count) for (stats, sig), count in counts.items())


def weighted_involution_sum(nu: Partition, filter_name: str = "none", weight: str = "one") -> int:
    keep = resolve_filter(filter_name)
    evaluate = WeightExpression(weight)
    return sum(count * evaluate(stats) for stats, count in stats_multiset(nu) if keep(stats))


def involution_count(nu: Partition, filter_name: str = "none") -> int:
    return weighted_involution_sum(nu, filter_name, "one")


def weighted_signed_sum(
    nu: Partition,
    family: SignFamily,
    signature: Optional[int] = None,
    weight: str = "one",
    filter_name: str = "none",
) -> int:
    """Weighted sum over signed involutions; signature is p_plus - p_minus"""
    keep = resolve_filter(filter_name)
    evaluate = WeightExpression(weight)
    return sum(
        count * evaluate(stats)
        for stats, sig, count in signed_multiset(nu, family)
        if keep(stats) and (signature is None or sig == signature)
    )


def generate_signed(nu: Partition, family: SignFamily) -> Iterator[SignedInvolution]:
    for w in generate_involutions(nu):
        fixed = w.fixed_cycles
        if family is SignFamily.STAR:
            if any(nu.parts[j] % 2 for j in fixed):
                continue
            choices = (0, 1)
        else:
            choices = (1, -1)
        for signs in product(choices, repeat=len(fixed)):
            yield SignedInvolution(w, family, signs)


# Brute-force oracle over permutations of the underlying point set

def canonical_element(nu: Partition) -> Tuple[int, ...]:
    """w_nu: rotation on consecutive blocks of sizes nu_1, nu_2, ..."""
    image = []
    offset = 0
    for length in nu.parts:
        image.extend(offset + (t + 1) % length for t in range(length))
        offset += length
    return tuple(image)


def _point_involutions(points: int) -> Iterator[Tuple[int, ...]]:
    for matching in _matchings(list(range(points))):
        image = list(range(points))
        for a, b in matching:
            image[a], image[b] = b, a
        yield tuple(image)


def generate_brute_force(nu: Partition) -> Iterator[Tuple[int, ...]]:
    w_nu = canonical_element(nu)
    for w in _point_involutions(nu.size):
        if all(w[w_nu[x]] == w_nu[w[x]] for x in range(nu.size)):
            yield w


def permutation_to_involution(nu: Partition, w: Sequence[int]) -> CentralizerInvolution:
    """Read pairing and shifts off a permutation commuting with w_nu"""
    offsets = []
    owner = []
    offset = 0
    for j, length in enumerate(nu.parts):
        offsets.append(offset)
        owner.extend([j] * length)
        offset += length
    pairing = []
    shifts = []
    for j in range(nu.length):
        image = w[offsets[j]]
        k = owner[image]
        pairing.append(k)
        shifts.append(image - offsets[k])
    return CentralizerInvolution(nu, tuple(pairing), tuple(shifts))


def permutation_stats(nu: Partition, w: Sequence[int]) -> InvolutionStats:
    return permutation_to_involution(nu, w).stats


class InvolutionService:
    def __init__(self, config: Settings = settings):
        self.config = config

    def enumerate_involutions(self, nu: Partition, filter_name: str = "none") -> Iterator[CentralizerInvolution]:
        """Structured enumeration of Z^nu_inv, filtered"""
        check_bound("|nu|", nu.size, self.config.involution_bound)
        keep = resolve_filter(filter_name)
        return (w for w in generate_involutions(nu) if keep(w.stats))

    def brute_force_involutions(self, nu: Partition) -> Iterator[Tuple[int, ...]]:
        """Direct search for involutions commuting with w_nu"""
        check_bound("|nu|", nu.size, self.config.brute_force_bound)
        return generate_brute_force(nu)

    def weighted_involution_sum(self, nu: Partition, filter_name: str = "none", weight: str = "one") -> int:
        """Weighted sum over filtered involutions"""
        check_bound("|nu|", nu.size, self.config.involution_bound)
        value = weighted_involution_sum(nu, filter_name, weight)
        logger.debug(f"sum over Z^{nu} [{filter_name}] of {weight} = {value}")
        return value

    def enumerate_signed(
        self, nu: Partition, family: SignFamily, signature: Optional[int] = None
    ) -> Iterator[SignedInvolution]:
        """Signed involutions of one family, optionally of one signature"""
        check_bound("|nu|", nu.size, self.config.involution_bound)
        return (s for s in generate_signed(nu, family) if signature is None or s.signature == signature)

    def weighted_signed_sum(
        self,
        nu: Partition,
        family: SignFamily,
        signature: Optional[int] = None,
        weight: str = "one",
        filter_name: str = "none",
    ) -> int:
        """Weighted sum over a signed family"""
        check_bound("|nu|", nu.size, self.config.involution_bound)
        return weighted_signed_sum(nu, family, signature, weight, filter_name)

    def summarize(
        self,
        nu: Partition,
        family: Optional[SignFamily] = None,
        filter_name: str = "none",
        weight: str = "one",
        signature: Optional[int] = None,
    ) -> Tuple[int, int]:
        """(count, weighted sum) over plain involutions, or a signed family when given"""
        if family is None:
            return (
                self.weighted_involution_sum(nu, filter_name),
                self.weighted_involution_sum(nu, filter_name, weight),
            )
        return (
            self.weighted_signed_sum(nu, family, signature, "one", filter_name),
            self.weighted_signed_sum(nu, family, signature, weight, filter_name),
        )
