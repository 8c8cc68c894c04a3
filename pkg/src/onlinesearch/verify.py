"""The closed-form-versus-oracle verification suite.

Replays every closed form against its brute-force oracle over a grid of
small domains and sequence lengths.  All integral comparisons are exact;
Monte Carlo checks run only when a seed is supplied and use a declared
statistical tolerance.
"""

from __future__ import annotations

from fractions import Fraction

from . import measures, oracles
from .algorithms import reservation, reservation_second
from .domain import Mode, PriceDomain, real_domain
from .enumeration import DEFAULT_BUDGET, EnumerationBudget, output_distribution, permutation_expectation
from .errors import BudgetError
from .measures import IntervalVariant
from .oracles import OracleReport
from .verdicts import Relation

GRID_BASES = (1, 2, 3)


class _Check:
    """Accumulates exact comparisons for one report line."""

    def __init__(self, quantity: str):
        self.quantity = quantity
        self.instances = 0
        self.mismatch = None
        self.last = (None, None)

    def compare(self, oracle_value, closed_value, label: str) -> None:
        self.instances += 1
        self.last = (oracle_value, closed_value)
        if self.mismatch is None and oracle_value != closed_value:
            self.mismatch = (oracle_value, closed_value, label)

    def expect(self, condition: bool, label: str) -> None:
        self.compare(bool(condition), True, label)

    def report(self) -> OracleReport:
        if self.mismatch is not None:
            oracle_value, closed_value, label = self.mismatch
            return OracleReport(self.quantity, oracle_value, closed_value, False,
                                self.instances, detail=label)
        oracle_value, closed_value = self.last
        return OracleReport(self.quantity, oracle_value, closed_value, True, self.instances)


def _grid_domains(max_size: int, bases=GRID_BASES):
    return [PriceDomain(base, base + size - 1, Mode.INTEGRAL)
            for base in bases for size in range(2, max_size + 1)]


def _both_rules(domain):
    for price in domain.prices():
        yield reservation(price)
        yield reservation_second(price)


def _first_hit_pairs(domain):
    for p in domain.prices():
        for q in domain.prices():
            if p < q:
                yield p, q


def run_verification(max_size: int = 4, max_len: int = 6,
                     budget: EnumerationBudget | None = None,
                     seed: int | None = None,
                     mc_samples: int = 1_000_000) -> list[OracleReport]:
    """Run the whole suite; raises BudgetError if the grid cannot fit."""
    budget = budget or DEFAULT_BUDGET
    if max_size ** max_len > budget.max_sequences:
        raise BudgetError(
            f"{max_size}^{max_len} sequences exceed the budget of {budget.max_sequences}"
        )
    domains = _grid_domains(max_size)
    reports = []

    reports.extend(_check_counts_and_sums(domains, max_len, budget))
    reports.append(_check_competitive(domains, max_len, budget))
    reports.append(_check_bijective(domains, max_len, budget))
    reports.append(_check_average_threshold(domains, max_len))
    reports.append(_check_two_price_expectations(domains, max_len, budget))
    reports.append(_check_random_order_horizon(domains, max_len, budget))
    reports.append(_check_rwo_bounds(domains, max_len, budget))
    reports.append(_check_rwo_domination())
    reports.append(_check_finite_intervals(domains, max_len, budget))
    reports.append(_check_asymptotic_sweep(budget))
    reports.append(_check_minmin(domains))
    reports.append(_check_expected_closed_forms())
    if seed is not None:
        reports.append(_check_monte_carlo(seed, mc_samples))
    return reports


def _check_counts_and_sums(domains, max_len, budget):
    first = _Check("counts/first-hit")
    second = _Check("counts/second-hit")
    mass = _Check("counts/total-mass")
    sum_first = _Check("profit-sum/first-hit")
    sum_second = _Check("profit-sum/second-hit")
    sum_dist = _Check("profit-sum/distribution")
    for domain in domains:
        for n in range(2, max_len + 1):
            space = domain.size ** n
            for price in domain.prices():
                for alg, count_check, sum_check in (
                    (reservation(price), first, sum_first),
                    (reservation_second(price), second, sum_second),
                ):
                    label = f"{alg.label()} on {domain} at n={n}"
                    enumerated = output_distribution(alg, domain, n, budget)
                    closed = measures.counts_closed_form(alg, domain, n)
                    count_check.compare(enumerated.counts, closed.counts, label)
                    mass.compare(enumerated.total(), space, label)
                    mass.compare(closed.total(), space, label)
                    direct_sum = oracles.oracle_average(alg, domain, n, budget)
                    closed_sum = measures.average_sum(alg, domain, n)
                    sum_check.compare(direct_sum, closed_sum, label)
                    sum_dist.compare(enumerated.profit_sum(), closed_sum, label)
    return [c.report() for c in (first, second, mass, sum_first, sum_second, sum_dist)]


def _check_competitive(domains, max_len, budget):
    check = _Check("competitive/closed-vs-sup")
    deep = min(4, max_len)
    for domain in domains:
        for alg in _both_rules(domain):
            closed = measures.competitive_ratio(alg, domain)
            label = f"{alg.label()} on {domain}"
            # The extremal sequences have length 2; longer horizons add nothing.
            check.compare(oracles.oracle_competitive(alg, domain, 2, budget), closed, label)
            check.compare(oracles.oracle_competitive(alg, domain, deep, budget), closed,
                          f"{label} to n={deep}")
    return check.report()


def _check_bijective(domains, max_len, budget):
    check = _Check("bijective/rule-vs-enumeration")
    for domain in domains:
        pairs = [(reservation(p), reservation(q)) for p, q in _first_hit_pairs(domain)]
        pairs += [(reservation_second(p), reservation(p)) for p in domain.prices()]
        for a, b in pairs:
            rule = measures._bijective_rule(a, b, domain)
            for n in range(2, min(5, max_len) + 1):
                verdict = oracles.oracle_bijective(a, b, domain, n, budget)
                label = f"{a.label()} vs {b.label()} on {domain} at n={n}"
                check.compare(verdict.relation, rule, label)
                if verdict.witness is not None:
                    forward = verdict.witness["explicit_pairing_forward"]
                    check.compare(
                        forward,
                        rule in (Relation.SECOND_BETTER, Relation.EQUIVALENT),
                        f"pairing {label}",
                    )
    return check.report()


def _check_average_threshold(domains, max_len):
    check = _Check("average/threshold")
    for domain in domains:
        for p, q in _first_hit_pairs(domain):
            verdict = measures.compare_average(reservation(p), reservation(q), domain)
            n0 = verdict.witness["threshold_length"]
            label = f"p={p} q={q} on {domain}"
            check.expect(
                measures._average_condition(domain.size, domain.low, p, q, n0), label
            )
            for n in range(n0, n0 + 5):
                gap = measures.average_sum(reservation(q), domain, n) - \
                    measures.average_sum(reservation(p), domain, n)
                check.expect(gap > 0, f"{label} at n={n}")
        for price in domain.prices():
            verdict = measures.compare_average(reservation_second(price), reservation(price), domain)
            expected = Relation.SECOND_BETTER if price > domain.low else Relation.EQUIVALENT
            check.compare(verdict.relation, expected, f"variant pair at {price} on {domain}")
            for n in range(2, max_len + 1):
                gap = measures.average_sum(reservation(price), domain, n) - \
                    measures.average_sum(reservation_second(price), domain, n)
                check.expect(gap > 0 if price > domain.low else gap == 0,
                             f"variant sums at {price} on {domain}, n={n}")
    return check.report()


def _check_two_price_expectations(domains, max_len, budget):
    check = _Check("random-order/two-price-expectation")
    for domain in domains:
        low, high = domain.low, domain.high
        for n in range(2, min(6, max_len) + 1):
            for price in domain.prices():
                spike = [high] + [price] * (n - 1)
                expected = Fraction(high + price * (n - 1), n)
                check.compare(permutation_expectation(reservation(price), spike, budget),
                              expected, f"first-hit spike p={price} on {domain}, n={n}")
                floor_spike = [high] + [low] * (n - 1)
                expected = Fraction(high + low * (n - 1), n)
                check.compare(permutation_expectation(reservation_second(price), floor_spike, budget),
                              expected, f"second-hit spike p={price} on {domain}, n={n}")
    return check.report()


def _check_random_order_horizon(domains, max_len, budget):
    check = _Check("random-order/finite-horizon")
    deep = min(4, max_len)
    for domain in domains:
        for price in domain.prices():
            if price > domain.low and price > 1:
                limit = measures.random_order_ratio(reservation(price), domain)
                previous = None
                for n in range(2, deep + 1):
                    value = oracles.oracle_random_order(reservation(price), domain, n, budget)
                    label = f"R{price} on {domain} at n={n}"
                    check.expect(value <= limit, f"{label} below limit")
                    if previous is not None:
                        check.expect(value >= previous, f"{label} nondecreasing")
                    previous = value
            variant_limit = Fraction(domain.high, domain.low)
            for n in range(2, deep + 1):
                value = oracles.oracle_random_order(reservation_second(price), domain, n, budget)
                check.expect(value <= variant_limit,
                             f"R{price}^2 on {domain} at n={n} below limit")
    return check.report()


def _check_rwo_bounds(domains, max_len, budget):
    check = _Check("rwo/bounds")
    deep = min(5, max_len)
    for domain in domains:
        cases = [(reservation(q), reservation(p)) for p, q in _first_hit_pairs(domain)]
        cases += [(reservation(p), reservation_second(p)) for p in domain.prices()]
        for a, b in cases:
            verdict = measures.rwo_bounds(a, b, domain)
            bounds = (verdict.witness["floor"], verdict.witness["ceiling"])
            label = f"{a.label()} vs {b.label()} on {domain}"
            check.compare(oracles.oracle_rwo(a, b, domain, 3, budget), bounds, f"{label} at n<=3")
            check.compare(oracles.oracle_rwo(a, b, domain, deep, budget), bounds,
                          f"{label} at n<={deep}")
    return check.report()


def _check_rwo_domination():
    check = _Check("rwo/domination")
    for base in GRID_BASES:
        for size in range(2, 11):
            domain = PriceDomain(base, base + size - 1, Mode.INTEGRAL)
            pick = measures.ceil_sqrt(domain.low * domain.high)
            anchor = reservation(pick)
            for other in domain.prices():
                if other == pick:
                    continue
                forward = measures.worst_order_upper_ratio(anchor, reservation(other), domain)
                backward = measures.worst_order_upper_ratio(reservation(other), anchor, domain)
                check.expect(forward >= backward, f"s={pick} vs {other} on {domain}")
    return check.report()


def _check_finite_intervals(domains, max_len, budget):
    check = _Check("interval/finite")
    deep = min(4, max_len)
    for domain in domains:
        cases = []
        for p, q in _first_hit_pairs(domain):
            cases.append((reservation(q), reservation(p)))
            cases.append((reservation(p), reservation(q)))
        for p in domain.prices():
            cases.append((reservation(p), reservation_second(p)))
            cases.append((reservation_second(p), reservation(p)))
        for a, b in cases:
            closed = measures.relative_interval(a, b, domain, IntervalVariant.FINITE)
            for n in range(2, deep + 1):
                measured = oracles.oracle_relative_interval(a, b, domain, n, budget)
                check.compare(measured, closed,
                              f"{a.label()} vs {b.label()} on {domain} at n={n}")
    return check.report()


def _check_asymptotic_sweep(budget):
    check = _Check("interval/asymptotic-sweep")
    base = PriceDomain(1, 4, Mode.INTEGRAL)
    cases = [
        (reservation(3), reservation(2)),
        (reservation(2), reservation_second(2)),
    ]
    tolerance = Fraction(1, 20)
    for a, b in cases:
        interval = measures.relative_interval(a, b, base, IntervalVariant.ASYMPTOTIC_OVER_SIZE,
                                              doublings=4, budget=budget)
        label = f"{a.label()} vs {b.label()}"
        previous = None
        for point in interval.sweep:
            lo_gap = abs(point.lo_rate - interval.lo)
            hi_gap = abs(point.hi_rate - interval.hi)
            if previous is not None:
                check.expect(lo_gap < previous[0], f"{label} lo gap shrinking at {point.size}")
                check.expect(hi_gap < previous[1], f"{label} hi gap shrinking at {point.size}")
            previous = (lo_gap, hi_gap)
        check.expect(previous[0] <= tolerance, f"{label} final lo gap")
        check.expect(previous[1] <= tolerance, f"{label} final hi gap")
    return check.report()


def _check_minmin(domains):
    check = _Check("minmin/unit")
    for domain in domains:
        for alg in _both_rules(domain):
            check.compare(measures.minmin_ratio(alg, domain), Fraction(1),
                          f"{alg.label()} on {domain}")
    return check.report()


def _check_expected_closed_forms():
    check = _Check("expected/real-closed-forms")
    for low, high in ((1, 3), (2, 7)):
        domain = real_domain(low, high)
        midpoint = Fraction(low + high, 2)
        for n in range(2, 7):
            check.compare(measures.expected_profit(reservation(low), domain, n), midpoint,
                          f"floor rule on {domain} at n={n}")
            check.compare(measures.expected_profit(reservation(high), domain, n), midpoint,
                          f"ceiling rule on {domain} at n={n}")
        # Rational threshold grid in quarter steps, upper threshold interior.
        width = domain.width
        grid = [Fraction(low) + width * Fraction(k, 4) for k in range(5)]
        for p in grid:
            for q in grid:
                if p < q:
                    verdict = measures.compare_expected(p, q, domain)
                    label = f"p={p} q={q} on {domain}"
                    if p == low and q == high:
                        check.compare(verdict.relation, Relation.EQUIVALENT, label)
                    elif q == high:
                        check.compare(verdict.relation, Relation.FIRST_BETTER, label)
                        for n in (2, 3, 5):
                            gap = measures.expected_profit(reservation(p), domain, n) - \
                                measures.expected_profit(reservation(q), domain, n)
                            check.expect(gap > 0, f"{label} strict at n={n}")
                    else:
                        check.compare(verdict.relation, Relation.SECOND_BETTER, label)
                        n0 = verdict.witness["threshold_length"]
                        for n in (n0, n0 + 1, n0 + 2):
                            condition = width ** (n - 1) * (q - p) > (q - Fraction(low)) ** n - (p - Fraction(low)) ** n
                            check.expect(condition, f"{label} condition at n={n}")
    return check.report()


def _check_monte_carlo(seed, samples):
    check = _Check("expected/monte-carlo")
    domain = real_domain(1, 3)
    cases = [
        (Fraction(2), 2),
        (Fraction(1), 5),
        (Fraction(3), 5),
    ]
    for price, n in cases:
        closed = measures.expected_profit(reservation(price), domain, n)
        estimate = oracles.oracle_expected_real(price, domain, n, samples, seed)
        gap = abs(estimate.mean - float(closed))
        check.expect(gap <= 3 * estimate.stderr,
                     f"p={price} n={n}: |{estimate.mean:.6f} - {float(closed):.6f}| "
                     f"vs 3*{estimate.stderr:.6f}")
    return check.report()


def all_passed(reports: list[OracleReport]) -> bool:
    return all(report.match for report in reports)
