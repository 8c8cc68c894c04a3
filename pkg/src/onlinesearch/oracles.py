"""Independent brute-force reference implementations.

Every function here recomputes a measure by replaying algorithms over
exhaustively enumerated inputs (or seeded samples in real mode), using only
the run / worst-ordering / enumeration primitives.  None of the closed
forms from ``measures`` appear here, so agreement between the two modules
is evidence rather than tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional

from .algorithms import AlgorithmSpec, opt_profit, run, worst_order_profit
from .domain import Mode, PriceDomain
from .enumeration import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    enumerate_sequences,
    permutation_expectation,
    sample_real_sequences,
)
from .errors import BudgetError, ModeError
from .verdicts import Interval, Relation, Verdict


@dataclass(frozen=True)
class OracleReport:
    """One brute-force value next to its closed-form counterpart."""

    quantity: str
    oracle_value: object
    closed_form_value: object
    match: bool
    instances_checked: int
    detail: str = ""


@dataclass(frozen=True)
class MonteCarloMean:
    """Sample mean with its standard error."""

    mean: float
    stderr: float
    samples: int


def _multisets(domain: PriceDomain, size: int):
    return combinations_with_replacement(domain.prices(), size)


def _multiset_budget_check(domain: PriceDomain, sizes, budget: EnumerationBudget) -> None:
    total = sum(math.comb(domain.size + k - 1, k) for k in sizes)
    if total > budget.max_sequences:
        raise BudgetError(f"{total} multisets exceed the budget of {budget.max_sequences}")


def oracle_competitive(alg: AlgorithmSpec, domain: PriceDomain, n_max: int,
                       budget: EnumerationBudget | None = None) -> Fraction:
    """Largest optimum-to-profit ratio over every sequence of length 2..n_max."""
    budget = budget or DEFAULT_BUDGET
    best = Fraction(0)
    for n in range(2, n_max + 1):
        for seq in enumerate_sequences(domain, n, budget):
            ratio = Fraction(opt_profit(seq), run(alg, seq))
            if ratio > best:
                best = ratio
    return best


def oracle_bijective(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain, length: int,
                     budget: EnumerationBudget | None = None) -> Verdict:
    """Pairing verdict at one length, from replayed output multisets.

    Sorts both algorithms' outputs over the full sequence space and compares
    them position by position.  For small spaces the verdict is additionally
    cross-validated by building the pairing explicitly: sequences sorted by
    output, matched smallest to smallest, every pair checked.
    """
    budget = budget or DEFAULT_BUDGET
    outputs_a = [run(a, seq) for seq in enumerate_sequences(domain, length, budget)]
    outputs_b = [run(b, seq) for seq in enumerate_sequences(domain, length, budget)]
    sorted_a = sorted(outputs_a)
    sorted_b = sorted(outputs_b)

    if sorted_a == sorted_b:
        relation = Relation.EQUIVALENT
    else:
        le = all(x <= y for x, y in zip(sorted_a, sorted_b))
        ge = all(x >= y for x, y in zip(sorted_a, sorted_b))
        if le:
            relation = Relation.SECOND_BETTER
        elif ge:
            relation = Relation.FIRST_BETTER
        else:
            relation = Relation.INCOMPARABLE

    witness = None
    if len(outputs_a) <= 1000:
        # Explicit greedy pairing: order both sequence lists by output and
        # match positionally; the mapping is a bijection by construction.
        by_output_a = sorted(range(len(outputs_a)), key=lambda i: outputs_a[i])
        by_output_b = sorted(range(len(outputs_b)), key=lambda i: outputs_b[i])
        forward_ok = all(
            outputs_a[i] <= outputs_b[j] for i, j in zip(by_output_a, by_output_b)
        )
        backward_ok = all(
            outputs_a[i] >= outputs_b[j] for i, j in zip(by_output_a, by_output_b)
        )
        witness = {"explicit_pairing_forward": forward_ok, "explicit_pairing_backward": backward_ok}

    return Verdict("bijective", relation, witness=witness)


def oracle_average(alg: AlgorithmSpec, domain: PriceDomain, length: int,
                   budget: EnumerationBudget | None = None) -> int:
    """Exact total profit over every sequence of the given length."""
    budget = budget or DEFAULT_BUDGET
    return sum(run(alg, seq) for seq in enumerate_sequences(domain, length, budget))


def oracle_random_order(alg: AlgorithmSpec, domain: PriceDomain, size: int,
                        budget: EnumerationBudget | None = None) -> Fraction:
    """Worst optimum-to-expected-profit ratio over all multisets of one size.

    Both the optimum and the random-order expectation depend only on the
    multiset contents, so the scan walks combinations with repetition
    instead of the full sequence space.
    """
    if domain.mode is not Mode.INTEGRAL:
        raise ModeError("the random-order oracle enumerates integral multisets")
    budget = budget or DEFAULT_BUDGET
    _multiset_budget_check(domain, [size], budget)
    worst = Fraction(0)
    for contents in _multisets(domain, size):
        expectation = permutation_expectation(alg, contents, budget)
        ratio = Fraction(max(contents)) / expectation
        if ratio > worst:
            worst = ratio
    return worst


def oracle_rwo(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain, n_max: int,
               budget: EnumerationBudget | None = None) -> tuple[Fraction, Fraction]:
    """Floor and ceiling of the worst-ordering profit ratio of ``a`` to ``b``.

    Scans every multiset of sizes 2..n_max and returns the extreme ratios
    of the two worst-ordering profits.
    """
    if domain.mode is not Mode.INTEGRAL:
        raise ModeError("the worst-ordering oracle enumerates integral multisets")
    budget = budget or DEFAULT_BUDGET
    sizes = range(2, n_max + 1)
    _multiset_budget_check(domain, sizes, budget)
    floor: Optional[Fraction] = None
    ceiling: Optional[Fraction] = None
    for size in sizes:
        for contents in _multisets(domain, size):
            ratio = Fraction(worst_order_profit(a, contents), worst_order_profit(b, contents))
            if floor is None or ratio < floor:
                floor = ratio
            if ceiling is None or ratio > ceiling:
                ceiling = ratio
    return floor, ceiling


def oracle_relative_interval(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain, length: int,
                             budget: EnumerationBudget | None = None) -> Interval:
    """Exact range of the pairwise profit difference over one length."""
    budget = budget or DEFAULT_BUDGET
    lo = hi = None
    for seq in enumerate_sequences(domain, length, budget):
        diff = run(a, seq) - run(b, seq)
        if lo is None or diff < lo:
            lo = diff
        if hi is None or diff > hi:
            hi = diff
    return Interval(Fraction(lo), Fraction(hi))


def oracle_expected_real(price, domain: PriceDomain, length: int, samples: int,
                         seed: int) -> MonteCarloMean:
    """Monte Carlo mean profit of a first-hit rule under uniform real prices.

    Purely a float path: the threshold is compared as a float and the
    result carries its standard error.  Deterministic per seed.
    """
    if domain.mode is not Mode.REAL:
        raise ModeError("the Monte Carlo oracle needs a real domain")
    if samples < 2:
        raise ValueError("a standard error needs at least 2 samples")
    threshold = float(price)
    total = 0.0
    total_sq = 0.0
    for seq in sample_real_sequences(domain, length, samples, seed):
        accepted = seq.prices[-1]
        for value in seq.prices:
            if value >= threshold:
                accepted = value
                break
        total += accepted
        total_sq += accepted * accepted
    mean = total / samples
    variance = max(0.0, (total_sq - samples * mean * mean) / (samples - 1))
    stderr = math.sqrt(variance / samples)
    return MonteCarloMean(mean=mean, stderr=stderr, samples=samples)
