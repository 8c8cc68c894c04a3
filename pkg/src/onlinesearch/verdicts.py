"""Result types shared by the closed-form measures and the oracles."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional


class Relation(Enum):
    FIRST_BETTER = "FirstBetter"
    SECOND_BETTER = "SecondBetter"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"
    RELATED = "Related"


_FLIP = {
    Relation.FIRST_BETTER: Relation.SECOND_BETTER,
    Relation.SECOND_BETTER: Relation.FIRST_BETTER,
}


@dataclass(frozen=True)
class Verdict:
    """Outcome of comparing two algorithms under one measure.

    ``related`` holds the pair of worst-ordering ceilings
    ``(c_u(first, second), c_u(second, first))`` when the relation is
    ``RELATED``; ``witness`` is a free-form record explaining the verdict
    (thresholds, extremal sequences, closed-form values).
    """

    measure: str
    relation: Relation
    related: Optional[tuple[Fraction, Fraction]] = None
    witness: Optional[Mapping] = None

    def __post_init__(self):
        if self.relation is Relation.RELATED:
            if self.related is None:
                raise ValueError("a Related verdict carries its two ratios")
            if any(r <= 0 for r in self.related):
                raise ValueError("related ratios must be positive")

    def flipped(self) -> "Verdict":
        """The same verdict with the two algorithms swapped."""
        related = (self.related[1], self.related[0]) if self.related else None
        return replace(self, relation=_FLIP.get(self.relation, self.relation), related=related)


@dataclass(frozen=True)
class SweepPoint:
    """One step of a growing-domain sweep: normalized difference bounds at ``size``."""

    size: int
    lo_rate: Fraction
    hi_rate: Fraction


@dataclass(frozen=True)
class Interval:
    """Range of the profit difference first(I) - second(I)."""

    lo: Fraction
    hi: Fraction
    sweep: Optional[tuple[SweepPoint, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval out of order: [{self.lo}, {self.hi}]")

    @property
    def first_dominates(self) -> bool:
        """Never worse and sometimes strictly better."""
        return self.lo >= 0 and self.hi > 0

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"
