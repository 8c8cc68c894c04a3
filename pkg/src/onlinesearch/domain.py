"""Core value types: price domains, price sequences, exact numbers.

Prices live in a closed interval ``[low, high]`` with ``0 < low <= high``.
A domain is either *integral* (finitely many integer prices) or *real*
(a continuous interval).  Everything is immutable after construction, so
domains and sequences can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import BoundsError, LengthError, ModeError, RangeError

# Exact ratios are plain `fractions.Fraction` values: arbitrary-precision
# numerator/denominator kept in lowest terms, with exact equality.  Exact
# counts are plain Python ints.  Both names exist so call sites can say
# what kind of number they mean.
ExactRatio = Fraction
BigCount = int


class Mode(Enum):
    INTEGRAL = "integral"
    REAL = "real"


def _is_rational(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


@dataclass(frozen=True)
class PriceDomain:
    """The interval of admissible prices.

    In integral mode the bounds must be ints and ``size`` gives the number
    of distinct prices (``high - low + 1``).  In real mode the bounds may be
    any rationals and ``width`` gives the interval length (``high - low``).
    """

    low: int | Fraction
    high: int | Fraction
    mode: Mode = Mode.INTEGRAL

    def __post_init__(self):
        if not _is_rational(self.low) or not _is_rational(self.high):
            raise ModeError(f"bounds must be exact rationals, got {self.low!r}, {self.high!r}")
        if self.mode is Mode.INTEGRAL:
            if not isinstance(self.low, int) or not isinstance(self.high, int):
                raise ModeError(f"integral domain requires integer bounds, got [{self.low}, {self.high}]")
        if self.low <= 0:
            raise BoundsError(f"lower bound must be positive, got {self.low}")
        if self.low > self.high:
            raise BoundsError(f"bounds out of order: {self.low} > {self.high}")

    @property
    def size(self) -> int:
        """Number of admissible integral prices."""
        if self.mode is not Mode.INTEGRAL:
            raise ModeError("size is defined for integral domains only")
        return self.high - self.low + 1

    @property
    def width(self) -> Fraction:
        """Length of the real price interval."""
        if self.mode is not Mode.REAL:
            raise ModeError("width is defined for real domains only")
        return Fraction(self.high) - Fraction(self.low)

    def prices(self) -> range:
        """All admissible prices, ascending (integral mode only)."""
        if self.mode is not Mode.INTEGRAL:
            raise ModeError("cannot enumerate prices of a real domain")
        return range(self.low, self.high + 1)

    def contains(self, price) -> bool:
        if self.mode is Mode.INTEGRAL and not isinstance(price, int):
            return False
        return self.low <= price <= self.high

    def __str__(self):
        tag = "" if self.mode is Mode.INTEGRAL else "R"
        return f"{tag}[{self.low}, {self.high}]"


@dataclass(frozen=True)
class PriceSequence:
    """An ordered arrival of at least two admissible prices."""

    domain: PriceDomain
    prices: tuple

    def __post_init__(self):
        if len(self.prices) < 2:
            raise LengthError(f"a price sequence needs at least 2 prices, got {len(self.prices)}")
        for price in self.prices:
            if self.domain.mode is Mode.INTEGRAL and not isinstance(price, int):
                raise ModeError(f"integral domain cannot hold price {price!r}")
            if not (self.domain.low <= price <= self.domain.high):
                raise RangeError(f"price {price} outside {self.domain}")

    @property
    def n(self) -> int:
        return len(self.prices)

    def __iter__(self):
        return iter(self.prices)

    def __len__(self):
        return len(self.prices)


def make_domain(low, high, mode: Mode = Mode.INTEGRAL) -> PriceDomain:
    """Validated price domain; see :class:`PriceDomain` for the invariants."""
    return PriceDomain(low, high, mode)


def integral_domain(low: int, high: int) -> PriceDomain:
    return PriceDomain(low, high, Mode.INTEGRAL)


def real_domain(low, high) -> PriceDomain:
    return PriceDomain(low, high, Mode.REAL)


def make_sequence(domain: PriceDomain, prices) -> PriceSequence:
    """Validated price sequence over ``domain``."""
    return PriceSequence(domain, tuple(prices))


def _trusted_sequence(domain: PriceDomain, prices: tuple) -> PriceSequence:
    # Internal constructor for prices produced by us (enumeration, sampling):
    # skips per-element validation on hot paths.
    seq = object.__new__(PriceSequence)
    object.__setattr__(seq, "domain", domain)
    object.__setattr__(seq, "prices", prices)
    return seq
