"""Exhaustive and stochastic exploration of the input space.

Integral mode enumerates the full sequence space (``size ** n`` sequences,
lexicographic) and the distinct orderings of price multisets; real mode
draws seeded uniform samples.  All integral results are exact.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import kernels
from .algorithms import AlgorithmKind, AlgorithmSpec, _distinct_orderings, _run_prices, check_spec, ordering_count
from .domain import Mode, PriceDomain, PriceSequence, _trusted_sequence
from .errors import BudgetError, LengthError, ModeError

DEFAULT_MAX_SEQUENCES = 10_000_000
DEFAULT_MAX_PERMUTATIONS = 10_000_000


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps on how much of the input space an operation may walk."""

    max_sequences: int = DEFAULT_MAX_SEQUENCES
    max_permutations: int = DEFAULT_MAX_PERMUTATIONS

    def __post_init__(self):
        if self.max_sequences <= 0 or self.max_permutations <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = EnumerationBudget()


@dataclass(frozen=True)
class OutputDistribution:
    """How often each price is the accepted output, over all length-n sequences."""

    domain: PriceDomain
    length: int
    counts: dict

    def total(self) -> int:
        return sum(self.counts.values())

    def profit_sum(self) -> int:
        """Sum of accepted prices over the whole sequence space."""
        return sum(price * count for price, count in self.counts.items())

    def expectation(self) -> Fraction:
        return Fraction(self.profit_sum(), self.total())


def sorted_relation(counts_a: dict, counts_b: dict, prices) -> tuple[str, bool]:
    """Compare two output distributions position-by-position after sorting.

    Returns ``(relation, strict)`` where relation is ``"eq"`` (identical),
    ``"le"`` (every k-th smallest output of A is <= B's, so B covers A),
    ``"ge"`` (the reverse), or ``"mixed"`` (neither side covers the other).
    ``strict`` is True when at least one position differs.
    """
    below_a = 0
    below_b = 0
    le = ge = True
    equal = True
    for price in sorted(prices):
        below_a += counts_a.get(price, 0)
        below_b += counts_b.get(price, 0)
        if below_a != below_b:
            equal = False
        # A's sorted outputs sit below B's iff A accumulates mass no slower.
        if below_a < below_b:
            le = False
        if below_a > below_b:
            ge = False
    if equal:
        return "eq", False
    if le:
        return "le", True
    if ge:
        return "ge", True
    return "mixed", True


def _space_size(domain: PriceDomain, length: int) -> int:
    return domain.size ** length


def enumerate_sequences(domain: PriceDomain, length: int,
                        budget: EnumerationBudget | None = None) -> Iterator[PriceSequence]:
    """All ``size ** length`` sequences, each exactly once, lexicographically."""
    if domain.mode is not Mode.INTEGRAL:
        raise ModeError("only integral domains can be enumerated")
    if length < 2:
        raise LengthError(f"sequences have length >= 2, got {length}")
    budget = budget or DEFAULT_BUDGET
    total = _space_size(domain, length)
    if total > budget.max_sequences:
        raise BudgetError(f"{total} sequences exceed the budget of {budget.max_sequences}")

    def generate():
        alphabet = range(domain.low, domain.high + 1)
        for combo in itertools.product(alphabet, repeat=length):
            yield _trusted_sequence(domain, combo)

    return generate()


def output_distribution(alg: AlgorithmSpec, domain: PriceDomain, length: int,
                        budget: EnumerationBudget | None = None) -> OutputDistribution:
    """Exhaustive tally of the accepted price over every length-n sequence.

    Threshold rules go through the tally kernel (compiled when available);
    OPT and generic rules replay the sequence stream directly.  Either way
    the result is an exact count per price and the counts sum to
    ``size ** length``.
    """
    if domain.mode is not Mode.INTEGRAL:
        raise ModeError("output distributions require an integral domain")
    if length < 2:
        raise LengthError(f"sequences have length >= 2, got {length}")
    check_spec(alg, domain)
    budget = budget or DEFAULT_BUDGET
    total = _space_size(domain, length)
    if total > budget.max_sequences:
        raise BudgetError(f"{total} sequences exceed the budget of {budget.max_sequences}")

    if alg.is_threshold:
        second = alg.kind is AlgorithmKind.RESERVATION_SECOND
        raw = kernels.count_outputs(domain.low, domain.high, length, alg.price, second)
        counts = {domain.low + i: int(c) for i, c in enumerate(raw)}
    else:
        counts = {price: 0 for price in domain.prices()}
        for seq in enumerate_sequences(domain, length, budget):
            counts[_run_prices(alg, seq.prices)] += 1
    return OutputDistribution(domain, length, counts)


def permutation_expectation(alg: AlgorithmSpec, contents,
                            budget: EnumerationBudget | None = None) -> Fraction:
    """Exact expected profit of ``alg`` over a uniformly random ordering.

    Walks the distinct arrangements of the multiset rather than all ``n!``
    raw permutations; every distinct arrangement carries equal probability,
    so the plain average over them is the exact expectation.
    """
    prices = sorted(contents)
    if len(prices) < 2:
        raise LengthError("expectation needs a multiset of at least 2 prices")
    budget = budget or DEFAULT_BUDGET
    arrangements = ordering_count(prices)
    if arrangements > budget.max_permutations:
        raise BudgetError(f"{arrangements} orderings exceed the budget of {budget.max_permutations}")
    total = 0
    for order in _distinct_orderings(prices):
        total += _run_prices(alg, order)
    return Fraction(total, arrangements)


def sample_real_sequences(domain: PriceDomain, length: int, count: int,
                          seed: int) -> Iterator[PriceSequence]:
    """``count`` sequences of independent uniform prices, reproducible by seed.

    The generator is the stdlib Mersenne Twister, whose output stream for a
    given seed is documented to be stable across platforms; identical seeds
    therefore reproduce the identical stream bit for bit.
    """
    if domain.mode is not Mode.REAL:
        raise ModeError("sampling requires a real domain")
    if length < 2:
        raise LengthError(f"sequences have length >= 2, got {length}")
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = random.Random(seed)
    low = float(domain.low)
    high = float(domain.high)

    def generate():
        for _ in range(count):
            yield _trusted_sequence(domain, tuple(rng.uniform(low, high) for _ in range(length)))

    return generate()
