"""Closed-form evaluators and verdict engines for the performance measures.

Each public operation evaluates a measure from its closed form; the
``oracles`` module recomputes the same quantities by brute force so the two
can be compared exactly.  Integral-mode results are exact rationals and
integers throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from . import oracles
from .algorithms import AlgorithmKind, AlgorithmSpec, check_spec, reservation, reservation_second
from .domain import Mode, PriceDomain
from .enumeration import EnumerationBudget, OutputDistribution, output_distribution, sorted_relation
from .errors import LengthError, MeasureError, ModeError, OrderError, PreconditionError, SpecError
from .verdicts import Interval, Relation, SweepPoint, Verdict

# ---------------------------------------------------------------------------
# shared validation and numeric helpers


def _require_integral(domain: PriceDomain) -> None:
    if domain.mode is not Mode.INTEGRAL:
        raise ModeError("this measure is defined on integral domains")


def _require_real(domain: PriceDomain) -> None:
    if domain.mode is not Mode.REAL:
        raise ModeError("this measure is defined on real domains")


def _threshold_of(alg: AlgorithmSpec, domain: PriceDomain) -> int:
    if not alg.is_threshold:
        raise SpecError(f"expected a threshold rule, got {alg.label()}")
    check_spec(alg, domain)
    return alg.price


def _ordered_pair(p, q, domain: PriceDomain) -> None:
    check_spec(reservation(p), domain)
    check_spec(reservation(q), domain)
    if p >= q:
        raise OrderError(f"need p < q, got {p} >= {q}")


def ceil_sqrt(value: int) -> int:
    """Exact ceiling of the square root of a nonnegative integer."""
    root = math.isqrt(value)
    return root if root * root == value else root + 1


def _growth_threshold(base: Fraction, target: Fraction) -> int:
    """Smallest integer t >= 1 with ``base ** t > target`` (base > 1, target >= 1).

    A float estimate seeds the search; the boundary itself is settled by
    exact rational comparisons.
    """
    if base <= 1:
        raise ValueError("growth base must exceed 1")
    estimate = 0.0
    if target > 1:
        estimate = math.log(float(target)) / math.log(float(base))
    t = max(1, math.floor(estimate) - 2)
    while base ** t <= target:
        t += 1
    while t > 1 and base ** (t - 1) > target:
        t -= 1
    return t


# ---------------------------------------------------------------------------
# competitive analysis


def competitive_ratio(alg: AlgorithmSpec, domain: PriceDomain) -> Fraction:
    """Worst-case ratio of the offline optimum to the rule's profit.

    A first-hit rule either sees nothing above its threshold (every profit
    is at least the sequence minimum, every optimum at most ``price - 1``)
    or accepts something at least ``price`` against an optimum of at most
    ``high``; the ratio is the larger of the two bounds.  A second-hit rule
    can always be trapped on a lone high price followed by minima.
    """
    _require_integral(domain)
    price = _threshold_of(alg, domain)
    if alg.kind is AlgorithmKind.RESERVATION:
        return max(Fraction(price - 1, domain.low), Fraction(domain.high, price))
    return Fraction(domain.high, domain.low)


def compare_competitive(p: int, q: int, domain: PriceDomain) -> Verdict:
    """Verdict between first-hit rules at thresholds ``p < q``.

    The higher threshold wins exactly when ``high * low > p * (q - 1)``;
    equality makes the two rules tie.
    """
    _require_integral(domain)
    _ordered_pair(p, q, domain)
    margin = domain.high * domain.low - p * (q - 1)
    if margin > 0:
        relation = Relation.SECOND_BETTER
    elif margin == 0:
        relation = Relation.EQUIVALENT
    else:
        relation = Relation.FIRST_BETTER
    witness = {
        "first_ratio": competitive_ratio(reservation(p), domain),
        "second_ratio": competitive_ratio(reservation(q), domain),
    }
    return Verdict("competitive", relation, witness=witness)


# ---------------------------------------------------------------------------
# output-count closed forms and bijective analysis


def counts_closed_form(alg: AlgorithmSpec, domain: PriceDomain, length: int) -> OutputDistribution:
    """Closed-form output distribution of a threshold rule at one length.

    ``gap`` prices sit strictly below the threshold and ``tail`` prices meet
    it.  A first-hit rule outputs a below-threshold price k only when k is
    the final price after a below-threshold prefix, and outputs a meeting
    price k once for every position at which k can be the first hit.  The
    second-hit variant additionally allows exactly one earlier hit.  The
    convention ``0 ** 0 == 1`` (native to Python ints) carries the
    threshold-at-lower-bound case.
    """
    _require_integral(domain)
    if length < 2:
        raise LengthError(f"sequences have length >= 2, got {length}")
    price = _threshold_of(alg, domain)
    low, high, size = domain.low, domain.high, domain.size
    gap = price - low
    tail = high - price + 1
    if alg.kind is AlgorithmKind.RESERVATION:
        below = gap ** (length - 1)
        meeting = sum(gap ** (i - 1) * size ** (length - i) for i in range(1, length + 1))
    else:
        below = gap ** (length - 1) + gap ** (length - 2) * (length - 1) * tail
        meeting = gap ** (length - 1) + sum(
            gap ** (i - 2) * (i - 1) * tail * size ** (length - i) for i in range(2, length + 1)
        )
    counts = {k: below for k in range(low, price)}
    counts.update({k: meeting for k in range(price, high + 1)})
    return OutputDistribution(domain, length, counts)


def _bijective_rule(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain) -> Optional[Relation]:
    # Length-independent verdict for threshold pairs; None when no rule applies.
    low = domain.low
    if a.kind is AlgorithmKind.RESERVATION and b.kind is AlgorithmKind.RESERVATION:
        if a.price == b.price:
            return Relation.EQUIVALENT
        smaller_first = a.price < b.price
        small = a.price if smaller_first else b.price
        if small == low:
            return Relation.SECOND_BETTER if smaller_first else Relation.FIRST_BETTER
        return Relation.INCOMPARABLE
    if a.is_threshold and b.is_threshold and a.price == b.price:
        if a.kind is b.kind:
            return Relation.EQUIVALENT
        if a.price == low:
            return Relation.EQUIVALENT
        # The second-hit variant is dominated by its first-hit rule.
        if a.kind is AlgorithmKind.RESERVATION_SECOND:
            return Relation.SECOND_BETTER
        return Relation.FIRST_BETTER
    return None


def compare_bijective(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain,
                      lengths: tuple[int, int] = (2, 4),
                      budget: EnumerationBudget | None = None) -> Verdict:
    """Profit-preserving pairing verdict between two rules.

    A pairing of the sequence space that never lowers the profit exists in
    one direction exactly when the sorted output vectors dominate
    position-by-position, so in integral mode the verdict is read off the
    output distributions for each tested length.  Threshold pairs obey a
    length-independent rule which is returned directly (the enumerated
    dominance is attached as a witness); generic rules get the empirical
    verdict labelled with its tested range.  Real mode never enumerates:
    every output class of a threshold rule has continuum-many preimages, so
    all threshold rules pair up exactly.
    """
    if domain.mode is Mode.REAL:
        if not (a.is_threshold and b.is_threshold):
            raise SpecError("real-mode pairing verdicts cover threshold rules only")
        check_spec(a, domain)
        check_spec(b, domain)
        return Verdict("bijective", Relation.EQUIVALENT, witness={"rule": "continuum-pairing"})

    _require_integral(domain)
    first_n, last_n = lengths
    if first_n < 2 or first_n > last_n:
        raise LengthError(f"bad length range {lengths}")
    check_spec(a, domain)
    check_spec(b, domain)

    relations = set()
    any_strict = False
    for n in range(first_n, last_n + 1):
        dist_a = output_distribution(a, domain, n, budget)
        dist_b = output_distribution(b, domain, n, budget)
        rel, strict = sorted_relation(dist_a.counts, dist_b.counts, domain.prices())
        relations.add(rel)
        any_strict = any_strict or strict
    if relations <= {"eq"}:
        empirical = Relation.EQUIVALENT
    elif relations <= {"eq", "le"}:
        empirical = Relation.SECOND_BETTER
    elif relations <= {"eq", "ge"}:
        empirical = Relation.FIRST_BETTER
    else:
        empirical = Relation.INCOMPARABLE

    rule = _bijective_rule(a, b, domain)
    if rule is not None:
        witness = {"empirical": empirical.value, "lengths": (first_n, last_n)}
        return Verdict("bijective", rule, witness=witness)
    witness = {"scope": "empirical over tested lengths", "lengths": (first_n, last_n)}
    return Verdict("bijective", empirical, witness=witness)


# ---------------------------------------------------------------------------
# average analysis


def _first_hit_profit_sum(size: int, low: int, price: int, length: int) -> int:
    # Closed form for the total first-hit profit over the whole sequence
    # space; the verification suite replays it against direct enumeration.
    gap = price - low
    numerator = (
        size ** (length + 1)
        + price * size ** length
        + low * size ** length
        - size ** length
        - size * gap ** length
    )
    return numerator // 2


def average_sum(alg: AlgorithmSpec, domain: PriceDomain, length: int) -> int:
    """Total profit of a threshold rule over all ``size ** length`` sequences."""
    _require_integral(domain)
    if length < 2:
        raise LengthError(f"sequences have length >= 2, got {length}")
    price = _threshold_of(alg, domain)
    if alg.kind is AlgorithmKind.RESERVATION:
        return _first_hit_profit_sum(domain.size, domain.low, price, length)
    return counts_closed_form(alg, domain, length).profit_sum()


def _average_condition(size: int, low: int, p: int, q: int, length: int) -> bool:
    # Total-profit gap favors the higher threshold at this length.
    return size ** (length - 1) * (q - p) > (q - low) ** length - (p - low) ** length


def compare_average(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain) -> Verdict:
    """Total-profit verdict: higher thresholds win once sequences are long enough.

    For first-hit rules at ``p < q`` the verdict is second-better from the
    threshold length on; the witness carries both that provable threshold
    and the exact smallest length at which the gap is already strict.  A
    second-hit variant loses to its first-hit rule at every length unless
    the threshold sits at the lower bound, where the two distributions
    coincide.
    """
    _require_integral(domain)
    size, low = domain.size, domain.low
    if a.kind is AlgorithmKind.RESERVATION and b.kind is AlgorithmKind.RESERVATION:
        p = _threshold_of(a, domain)
        q = _threshold_of(b, domain)
        if p >= q:
            raise OrderError(f"need p < q, got {p} >= {q}")
        threshold = _growth_threshold(Fraction(size, size - 1), Fraction(size, q - p))
        first_strict = next(n for n in range(2, threshold + 1) if _average_condition(size, low, p, q, n))
        witness = {"threshold_length": threshold, "first_strict_length": first_strict}
        return Verdict("average", Relation.SECOND_BETTER, witness=witness)
    if (
        a.kind is AlgorithmKind.RESERVATION_SECOND
        and b.kind is AlgorithmKind.RESERVATION
        and a.price == b.price
    ):
        price = _threshold_of(b, domain)
        if price > low:
            return Verdict("average", Relation.SECOND_BETTER, witness={"strict_from_length": 2})
        return Verdict("average", Relation.EQUIVALENT)
    raise OrderError("defined for first-hit pairs (p < q) or a second-hit variant against its rule")


# ---------------------------------------------------------------------------
# expected analysis


@dataclass(frozen=True)
class ExpectedModel:
    """Single-step acceptance model for a first-hit rule under uniform prices."""

    below_share: Fraction
    above_share: Fraction
    below_mean: Fraction
    above_mean: Fraction

    def __post_init__(self):
        if self.below_share + self.above_share != 1:
            raise ValueError("shares must sum to 1")
        if self.below_mean > self.above_mean:
            raise ValueError("below-threshold mean cannot exceed the meeting mean")

    @classmethod
    def for_domain(cls, domain: PriceDomain, price) -> "ExpectedModel":
        low, high = Fraction(domain.low), Fraction(domain.high)
        price = Fraction(price)
        if domain.mode is Mode.INTEGRAL:
            size = domain.size
            return cls(
                below_share=Fraction(price - low, size),
                above_share=Fraction(high - price + 1, size),
                below_mean=(price + low - 1) / 2,
                above_mean=(high + price) / 2,
            )
        width = domain.width
        return cls(
            below_share=(price - low) / width,
            above_share=(high - price) / width,
            below_mean=(price + low) / 2,
            above_mean=(high + price) / 2,
        )


def expected_profit(alg: AlgorithmSpec, domain: PriceDomain, length: int) -> Fraction:
    """Expected profit of a first-hit rule over i.i.d. uniform prices.

    Integral mode chains the acceptance model step by step (equal to the
    total profit divided by the number of sequences); real mode uses the
    interval-width closed form.  The threshold must be rational so the
    result is exact.
    """
    if alg.kind is not AlgorithmKind.RESERVATION:
        raise SpecError(f"expected profit is defined for first-hit rules, got {alg.label()}")
    if length < 2:
        raise LengthError(f"sequences have length >= 2, got {length}")
    if domain.mode is Mode.REAL and not isinstance(alg.price, (int, Fraction)):
        raise ModeError(f"real-mode thresholds must be rational, got {alg.price!r}")
    check_spec(alg, domain)

    if domain.mode is Mode.INTEGRAL:
        model = ExpectedModel.for_domain(domain, alg.price)
        geometric = sum(model.below_share ** (i - 1) for i in range(1, length + 1))
        return model.above_share * model.above_mean * geometric + model.below_mean * model.below_share ** length

    width = domain.width
    if width == 0:
        return Fraction(domain.low)
    price = Fraction(alg.price)
    low, high = Fraction(domain.low), Fraction(domain.high)
    return (high * width ** length + price * width ** length - width * (price - low) ** length) / (
        2 * width ** length
    )


def compare_expected(p, q, domain: PriceDomain) -> Verdict:
    """Expected-profit verdict between real-mode first-hit rules at ``p < q``.

    The extreme pair (lower bound vs upper bound) ties at the interval
    midpoint.  Against any other upper threshold the higher rule wins from
    the witness length on.  When the higher threshold sits exactly at the
    upper bound (and ``p`` is interior) the expectation gap
    ``width * r * (1 - r**(n-1)) / 2`` with ``r = (p - low)/width`` is
    positive at every length, so the lower rule is strictly better.
    """
    _require_real(domain)
    for value in (p, q):
        if not isinstance(value, (int, Fraction)):
            raise ModeError(f"thresholds must be rational, got {value!r}")
        check_spec(reservation(value), domain)
    if p >= q:
        raise OrderError(f"need p < q, got {p} >= {q}")
    low, high = Fraction(domain.low), Fraction(domain.high)
    p, q = Fraction(p), Fraction(q)
    if p == low and q == high:
        return Verdict("expected", Relation.EQUIVALENT, witness={"shared_mean": (low + high) / 2})
    width = domain.width
    if q == high:
        return Verdict("expected", Relation.FIRST_BETTER, witness={"strict_from_length": 2})
    threshold = _growth_threshold(width / (q - low), width / (q - p))
    first_strict = next(
        n
        for n in range(2, threshold + 1)
        if width ** (n - 1) * (q - p) > (q - low) ** n - (p - low) ** n
    )
    witness = {"threshold_length": threshold, "first_strict_length": first_strict}
    return Verdict("expected", Relation.SECOND_BETTER, witness=witness)


# ---------------------------------------------------------------------------
# random order analysis


def random_order_ratio(alg: AlgorithmSpec, domain: PriceDomain) -> Fraction:
    """Worst ratio of the optimum to the expected profit under random arrival order.

    Stated for first-hit rules with a threshold above both the lower bound
    and 1 (the two extremal families: one high price among thresholds, or
    one near-miss among minima); a second-hit rule is pinned to the global
    worst ratio by a lone maximum among minima.
    """
    _require_integral(domain)
    price = _threshold_of(alg, domain)
    if alg.kind is AlgorithmKind.RESERVATION_SECOND:
        return Fraction(domain.high, domain.low)
    if price <= domain.low or price <= 1:
        raise PreconditionError(
            "the closed form is stated for thresholds above the lower bound and above 1"
        )
    return max(Fraction(domain.high, price), Fraction(price - 1, domain.low))


def compare_random_order(p: int, q: int, domain: PriceDomain) -> Verdict:
    """Random-order verdict; the winning condition matches the competitive one."""
    _require_integral(domain)
    _ordered_pair(p, q, domain)
    margin = domain.high * domain.low - p * (q - 1)
    if margin > 0:
        relation = Relation.SECOND_BETTER
    elif margin == 0:
        relation = Relation.EQUIVALENT
    else:
        relation = Relation.FIRST_BETTER
    witness = {"product_bound": domain.high * domain.low, "pair_product": p * (q - 1)}
    return Verdict("random-order", relation, witness=witness)


def compare_second_variant(measure: str, price: int, domain: PriceDomain) -> Verdict:
    """Verdict for a first-hit rule against its own second-hit variant.

    Under both ratio measures the second-hit variant carries the global
    worst ratio, so the first-hit rule wins strictly unless its threshold
    sits at the lower bound, where the two ratios coincide.
    """
    _require_integral(domain)
    check_spec(reservation(price), domain)
    strict = price > domain.low
    relation = Relation.FIRST_BETTER if strict else Relation.EQUIVALENT
    if measure == "competitive":
        witness = {
            "first_ratio": competitive_ratio(reservation(price), domain),
            "second_ratio": competitive_ratio(reservation_second(price), domain),
        }
    elif measure == "random-order":
        witness = {"second_ratio": Fraction(domain.high, domain.low)}
        if strict:
            witness["first_ratio"] = random_order_ratio(reservation(price), domain)
    else:
        raise MeasureError(f"no second-variant verdict for measure {measure!r}")
    return Verdict(measure, relation, witness=witness)


# ---------------------------------------------------------------------------
# relative worst order analysis


def worst_order_upper_ratio(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain) -> Fraction:
    """Least ceiling on worst-ordering profit of ``a`` over ``b``'s, across all multisets.

    For first-hit rules: against a smaller threshold the ceiling is
    ``high / b.price`` (a multiset holding just ``b.price`` and the maximum
    attains it); against a larger threshold it is ``(b.price - 1) / low``
    when ``a``'s threshold is interior, and exactly 1 when ``a`` sits at
    the lower bound, where its worst-ordering profit is the multiset
    minimum and can never lead.  A first-hit rule leads its second-hit
    variant by at most ``high / low`` (attained unless the threshold is the
    lower bound); the variant never leads its own rule.
    """
    _require_integral(domain)
    pa = _threshold_of(a, domain)
    pb = _threshold_of(b, domain)
    low, high = domain.low, domain.high
    if a.kind is AlgorithmKind.RESERVATION and b.kind is AlgorithmKind.RESERVATION:
        if pa == pb:
            return Fraction(1)
        if pa > pb:
            return Fraction(high, pb)
        if pa == low:
            return Fraction(1)
        return Fraction(pb - 1, low)
    if a.kind is b.kind and pa == pb:
        return Fraction(1)
    if pa != pb:
        raise PreconditionError("cross-threshold bounds cover first-hit pairs only")
    if a.kind is AlgorithmKind.RESERVATION:
        return Fraction(high, low) if pa > low else Fraction(1)
    return Fraction(1)


def rwo_bounds(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain) -> Verdict:
    """Worst-ordering comparison: comparable pairs get a ratio, others get bounds.

    Accepts a first-hit pair ordered higher threshold first, or a first-hit
    rule against its own second-hit variant.  When the floor reaches 1 the
    pair is comparable in the first rule's favor with the ceiling as its
    worst-order ratio; otherwise the two ceilings are reported as a related
    pair.  Witnesses carry the extremal multisets.
    """
    _require_integral(domain)
    low, high = domain.low, domain.high
    if a.kind is AlgorithmKind.RESERVATION and b.kind is AlgorithmKind.RESERVATION:
        q = _threshold_of(a, domain)
        p = _threshold_of(b, domain)
        if q <= p:
            raise OrderError(f"need the higher threshold first, got {q} <= {p}")
        ceiling = worst_order_upper_ratio(a, b, domain)
        reverse_ceiling = worst_order_upper_ratio(b, a, domain)
        floor = 1 / reverse_ceiling
        witness = {
            "ceiling": ceiling,
            "floor": floor,
            "ceiling_multiset": (p, high),
            "floor_multiset": (q - 1, low) if p > low else (low, low),
        }
        if floor == 1:
            witness["worst_order_ratio"] = ceiling
            return Verdict("rwo", Relation.FIRST_BETTER, witness=witness)
        return Verdict("rwo", Relation.RELATED, related=(ceiling, reverse_ceiling), witness=witness)
    if (
        a.kind is AlgorithmKind.RESERVATION
        and b.kind is AlgorithmKind.RESERVATION_SECOND
        and a.price == b.price
    ):
        price = _threshold_of(a, domain)
        ceiling = worst_order_upper_ratio(a, b, domain)
        witness = {
            "ceiling": ceiling,
            "floor": Fraction(1),
            "ceiling_multiset": (high, low) if price > low else (low, low),
            "floor_multiset": (low, low),
        }
        if price > low:
            witness["worst_order_ratio"] = ceiling
            return Verdict("rwo", Relation.FIRST_BETTER, witness=witness)
        return Verdict("rwo", Relation.EQUIVALENT, witness=witness)
    raise OrderError("defined for first-hit pairs (higher threshold first) or a rule against its variant")


# ---------------------------------------------------------------------------
# relative interval analysis


class IntervalVariant(Enum):
    FINITE = "finite"
    ASYMPTOTIC_OVER_SIZE = "asymptotic-over-size"


def finite_difference_bounds(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain) -> tuple[int, int]:
    """Exact range of ``a(I) - b(I)`` over all sequences of every length.

    For first-hit rules the higher threshold trails by at most its own
    near-miss (first price just under the higher threshold, minimum last)
    and leads by at most ``high - lower_threshold`` (lower threshold first,
    maximum second); both extremes already occur at length 2 and at every
    longer length.  A first-hit rule trails its second-hit variant by at
    most ``high - price`` and leads by up to the full price range.
    """
    _require_integral(domain)
    low, high = domain.low, domain.high
    pa = _threshold_of(a, domain)
    pb = _threshold_of(b, domain)
    if a.kind is AlgorithmKind.RESERVATION and b.kind is AlgorithmKind.RESERVATION:
        if pa == pb:
            return 0, 0
        if pa > pb:
            return low - pa + 1, high - pb
        return pa - high, pb - 1 - low
    if a.kind is b.kind and pa == pb:
        return 0, 0
    if pa != pb:
        raise SpecError("difference bounds cover first-hit pairs or a rule against its own variant")
    if a.kind is AlgorithmKind.RESERVATION:
        return pa - high, high - low
    return low - high, high - pa


def _asymptotic_limits(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain) -> tuple[Fraction, Fraction]:
    pa, pb = a.price, b.price
    if a.kind is AlgorithmKind.RESERVATION and b.kind is AlgorithmKind.RESERVATION:
        if pa == pb:
            return Fraction(0), Fraction(0)
        if pa > pb:
            return Fraction(0), Fraction(1)
        return Fraction(-1), Fraction(0)
    if a.kind is b.kind and pa == pb:
        return Fraction(0), Fraction(0)
    if pa != pb:
        raise SpecError("normalized bounds cover first-hit pairs or a rule against its own variant")
    return Fraction(-1), Fraction(1)


def relative_interval(a: AlgorithmSpec, b: AlgorithmSpec, domain: PriceDomain,
                      variant: IntervalVariant = IntervalVariant.FINITE,
                      doublings: int = 4,
                      budget: EnumerationBudget | None = None) -> Interval:
    """Range of the pairwise profit difference, raw or normalized.

    The finite variant reports the exact difference bounds.  The asymptotic
    variant holds both rules fixed, doubles the domain size ``doublings``
    times, measures the per-size difference bounds by exhaustive enumeration
    at length 2, normalizes them by the size, and returns the limiting
    interval with the sweep attached; the sweep converges monotonically to
    the limits.
    """
    _require_integral(domain)
    if variant is IntervalVariant.FINITE:
        lo, hi = finite_difference_bounds(a, b, domain)
        return Interval(Fraction(lo), Fraction(hi))

    _threshold_of(a, domain)
    _threshold_of(b, domain)
    limits = _asymptotic_limits(a, b, domain)
    points = []
    for step in range(doublings + 1):
        size = domain.size * 2 ** step
        grown = PriceDomain(domain.low, domain.low + size - 1, Mode.INTEGRAL)
        measured = oracles.oracle_relative_interval(a, b, grown, 2, budget)
        points.append(SweepPoint(size, measured.lo / size, measured.hi / size))
    return Interval(limits[0], limits[1], sweep=tuple(points))


# ---------------------------------------------------------------------------
# worst-profit (floor) ratio


def minmin_ratio(alg: AlgorithmSpec, domain: PriceDomain) -> Fraction:
    """Ratio of the optimum's worst profit to the rule's worst profit.

    The all-minimum sequence forces every rule, and the optimum, down to
    the lower bound, so the ratio is 1 for every algorithm: the measure
    cannot separate online search rules.
    """
    check_spec(alg, domain)
    return Fraction(1)


# ---------------------------------------------------------------------------
# best-threshold scans


@dataclass(frozen=True)
class BestReservation:
    """Thresholds no other threshold strictly beats under one measure."""

    measure: str
    prices: frozenset
    witness: Optional[int]


def _interval_beats(x: int, y: int, domain: PriceDomain) -> bool:
    # Does the first-hit rule at x beat the one at y on difference range?
    lo, hi = finite_difference_bounds(reservation(x), reservation(y), domain)
    return hi > abs(lo)


def best_reservation(measure: str, domain: PriceDomain) -> BestReservation:
    """Full scan for the thresholds not beaten under a measure's pairwise verdicts.

    Ties are kept: the result is the whole set of unbeaten thresholds, with
    the measure's closed-form pick attached as a witness (geometric mean for
    the ratio measures, the upper bound for totals, the arithmetic mean for
    difference ranges).  The floor-ratio measure cannot separate rules, so
    its scan returns every threshold.
    """
    _require_integral(domain)
    low, high = domain.low, domain.high
    prices = list(domain.prices())

    if measure == "bijective":
        raise MeasureError("pairing analysis leaves thresholds incomparable; no best-set scan")
    if measure == "minmin":
        return BestReservation(measure, frozenset(prices), None)

    if measure in ("competitive", "random-order"):
        def beats(x, y):
            margin = high * low - min(x, y) * (max(x, y) - 1)
            if x > y:
                return margin > 0
            return margin < 0

        witness = ceil_sqrt(high * low)
    elif measure == "average":
        def beats(x, y):
            return x > y

        witness = high
    elif measure == "rwo":
        def beats(x, y):
            return worst_order_upper_ratio(reservation(x), reservation(y), domain) > \
                worst_order_upper_ratio(reservation(y), reservation(x), domain)

        witness = ceil_sqrt(high * low)
    elif measure == "finite-relative-interval":
        def beats(x, y):
            return _interval_beats(x, y, domain)

        witness = (high + low + 1) // 2
    else:
        raise MeasureError(f"no best-threshold scan for measure {measure!r}")

    unbeaten = frozenset(x for x in prices if not any(beats(y, x) for y in prices if y != x))
    return BestReservation(measure, unbeaten, witness)
