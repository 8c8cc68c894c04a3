"""Deterministic online search algorithms and their worst-ordering profits.

The two policy families are threshold rules: ``reservation(p)`` accepts the
first price of at least ``p``; ``reservation_second(p)`` waits for the second
such price.  Either is forced to take the last price when its rule never
fires.  ``OPT`` is the offline optimum (the maximum price).  Arbitrary
online rules can be plugged in through a step callback.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .domain import Mode, PriceDomain, PriceSequence
from .errors import BudgetError, LengthError, SpecError


class AlgorithmKind(Enum):
    RESERVATION = "reservation"
    RESERVATION_SECOND = "reservation-second"
    OPT = "opt"
    GENERIC = "generic"


@dataclass(frozen=True)
class AlgorithmSpec:
    """A deterministic online search algorithm.

    ``price`` is the reservation threshold for the two threshold kinds.
    ``step`` is a callback ``(prefix, is_last) -> bool`` for generic rules;
    it must be deterministic and must accept when ``is_last`` is true.
    """

    kind: AlgorithmKind
    price: object = None
    step: Optional[Callable] = None
    name: Optional[str] = None

    def label(self) -> str:
        if self.kind is AlgorithmKind.RESERVATION:
            return f"R{self.price}"
        if self.kind is AlgorithmKind.RESERVATION_SECOND:
            return f"R{self.price}^2"
        if self.kind is AlgorithmKind.OPT:
            return "OPT"
        return f"generic:{self.name or 'anonymous'}"

    @property
    def is_threshold(self) -> bool:
        return self.kind in (AlgorithmKind.RESERVATION, AlgorithmKind.RESERVATION_SECOND)


def reservation(price) -> AlgorithmSpec:
    """Accept the first price of at least ``price``."""
    return AlgorithmSpec(AlgorithmKind.RESERVATION, price=price)


def reservation_second(price) -> AlgorithmSpec:
    """Accept the second price of at least ``price``."""
    return AlgorithmSpec(AlgorithmKind.RESERVATION_SECOND, price=price)


def generic_algorithm(step: Callable, name: str | None = None) -> AlgorithmSpec:
    """Wrap a deterministic decision callback as an algorithm."""
    return AlgorithmSpec(AlgorithmKind.GENERIC, step=step, name=name)


OPT = AlgorithmSpec(AlgorithmKind.OPT)


def check_spec(alg: AlgorithmSpec, domain: PriceDomain) -> None:
    """Raise SpecError unless ``alg`` is well formed for ``domain``."""
    if alg.is_threshold:
        if domain.mode is Mode.INTEGRAL and not isinstance(alg.price, int):
            raise SpecError(f"integral domain needs an integer reservation price, got {alg.price!r}")
        if alg.price is None or not (domain.low <= alg.price <= domain.high):
            raise SpecError(f"reservation price {alg.price!r} outside {domain}")
    elif alg.kind is AlgorithmKind.GENERIC and alg.step is None:
        raise SpecError("generic algorithm needs a step callback")


def _run_prices(alg: AlgorithmSpec, prices: tuple):
    # Core simulation over a raw price tuple; callers validate the rule.
    if alg.kind is AlgorithmKind.OPT:
        return max(prices)
    last = len(prices) - 1
    if alg.is_threshold:
        needed = 2 if alg.kind is AlgorithmKind.RESERVATION_SECOND else 1
        seen = 0
        for i, price in enumerate(prices):
            if price >= alg.price:
                seen += 1
                if seen == needed:
                    return price
            if i == last:
                return price
    # Generic: consult the callback with the prefix seen so far.
    for i in range(len(prices)):
        is_last = i == last
        if alg.step(prices[: i + 1], is_last):
            return prices[i]
        if is_last:
            raise SpecError("generic algorithm refused the last price")
    raise AssertionError("unreachable")


def run(alg: AlgorithmSpec, seq: PriceSequence):
    """Profit of ``alg`` on ``seq``: the single accepted price."""
    check_spec(alg, seq.domain)
    return _run_prices(alg, seq.prices)


def opt_profit(seq: PriceSequence):
    """Offline optimum: the maximum price of the sequence."""
    return max(seq.prices)


def _distinct_orderings(values):
    # All distinct arrangements of a multiset, lexicographically.
    counts = {}
    for v in sorted(values):
        counts[v] = counts.get(v, 0) + 1
    items = sorted(counts)
    prefix = []
    total = len(values)

    def emit():
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for v in items:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from emit()
                prefix.pop()
                counts[v] += 1

    yield from emit()


def ordering_count(values) -> int:
    """Number of distinct arrangements of a multiset."""
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    total = math.factorial(len(values))
    for c in counts.values():
        total //= math.factorial(c)
    return total


def worst_order_profit(alg: AlgorithmSpec, contents, max_orderings: int | None = None):
    """Minimum profit of ``alg`` over all orderings of a price multiset.

    For the threshold rules and OPT the minimum has a direct form: the
    adversary can always steer a first-hit rule onto the smallest price
    meeting the threshold (or onto the minimum when nothing does), and a
    second-hit rule additionally needs two qualifying prices before it can
    be pinned above the minimum.  Generic algorithms fall back to an
    exhaustive scan over distinct orderings, bounded by ``max_orderings``.
    """
    prices = sorted(contents)
    if len(prices) < 2:
        raise LengthError("worst-ordering profit needs a multiset of at least 2 prices")
    if alg.kind is AlgorithmKind.OPT:
        return prices[-1]
    if alg.is_threshold:
        meeting = [x for x in prices if x >= alg.price]
        if alg.kind is AlgorithmKind.RESERVATION:
            return meeting[0] if meeting else prices[0]
        return meeting[0] if len(meeting) >= 2 else prices[0]
    limit = 10_000_000 if max_orderings is None else max_orderings
    if ordering_count(prices) > limit:
        raise BudgetError(f"{ordering_count(prices)} orderings exceed the budget of {limit}")
    return min(_run_prices(alg, order) for order in _distinct_orderings(prices))
