from fractions import Fraction

import pytest

from onlinesearch import (
    Interval,
    IntervalVariant,
    MeasureError,
    ModeError,
    OrderError,
    PreconditionError,
    Relation,
    SpecError,
    average_sum,
    best_reservation,
    ceil_sqrt,
    compare_average,
    compare_bijective,
    compare_competitive,
    compare_expected,
    compare_random_order,
    compare_second_variant,
    competitive_ratio,
    counts_closed_form,
    expected_profit,
    finite_difference_bounds,
    integral_domain,
    minmin_ratio,
    random_order_ratio,
    real_domain,
    relative_interval,
    reservation,
    reservation_second,
    rwo_bounds,
    worst_order_upper_ratio,
)
from onlinesearch.measures import ExpectedModel

D14 = integral_domain(1, 4)
D13 = integral_domain(1, 3)
R13 = real_domain(1, 3)


# ---------------------------------------------------------------------------
# competitive


def test_competitive_ratio_values():
    assert competitive_ratio(reservation(2), D14) == 2
    assert competitive_ratio(reservation(1), D14) == 4
    assert competitive_ratio(reservation_second(3), D14) == 4


def test_competitive_ratio_rejects_non_threshold_rules():
    from onlinesearch import OPT

    with pytest.raises(SpecError):
        competitive_ratio(OPT, D14)


def test_compare_competitive_verdicts():
    assert compare_competitive(2, 3, D14).relation is Relation.EQUIVALENT
    assert compare_competitive(1, 2, D14).relation is Relation.SECOND_BETTER
    assert compare_competitive(2, 4, D14).relation is Relation.FIRST_BETTER


def test_compare_competitive_rejects_bad_order():
    with pytest.raises(OrderError):
        compare_competitive(3, 2, D14)
    with pytest.raises(OrderError):
        compare_competitive(2, 2, D14)
    with pytest.raises(SpecError):
        compare_competitive(0, 2, D14)


# ---------------------------------------------------------------------------
# counts and bijective


def test_counts_closed_form_first_hit():
    assert counts_closed_form(reservation(2), D13, 2).counts == {1: 1, 2: 4, 3: 4}


def test_counts_closed_form_second_hit():
    assert counts_closed_form(reservation_second(2), D13, 2).counts == {1: 3, 2: 3, 3: 3}


def test_counts_closed_form_threshold_at_lower_bound():
    assert counts_closed_form(reservation(1), D13, 2).counts == {1: 3, 2: 3, 3: 3}
    assert counts_closed_form(reservation_second(1), D13, 3).counts == {1: 9, 2: 9, 3: 9}


def test_compare_bijective_rule_verdicts():
    assert compare_bijective(reservation(1), reservation(2), D13, (2, 4)).relation \
        is Relation.SECOND_BETTER
    assert compare_bijective(reservation(2), reservation(3), D13, (2, 4)).relation \
        is Relation.INCOMPARABLE
    assert compare_bijective(reservation_second(2), reservation(2), D13, (2, 4)).relation \
        is Relation.SECOND_BETTER
    assert compare_bijective(reservation_second(1), reservation(1), D13, (2, 3)).relation \
        is Relation.EQUIVALENT


def test_compare_bijective_rule_matches_enumeration_witness():
    verdict = compare_bijective(reservation(1), reservation(2), D13, (2, 4))
    assert verdict.witness["empirical"] == verdict.relation.value


def test_compare_bijective_real_mode():
    verdict = compare_bijective(reservation(2), reservation(3), R13)
    assert verdict.relation is Relation.EQUIVALENT
    verdict = compare_bijective(reservation(Fraction(5, 2)), reservation_second(2), R13)
    assert verdict.relation is Relation.EQUIVALENT


def test_compare_bijective_generic_is_empirical():
    from onlinesearch import generic_algorithm

    first_price = generic_algorithm(lambda prefix, is_last: True, name="first")
    verdict = compare_bijective(first_price, reservation(2), D13, (2, 3))
    assert verdict.relation is Relation.SECOND_BETTER
    assert verdict.witness["scope"] == "empirical over tested lengths"


# ---------------------------------------------------------------------------
# average


def test_average_sum_values():
    D12 = integral_domain(1, 2)
    assert average_sum(reservation(2), D12, 2) == 7
    assert average_sum(reservation(1), D12, 2) == 6
    assert average_sum(reservation_second(2), D13, 2) == 18
    assert average_sum(reservation(2), D13, 2) == 21


def test_compare_average_threshold():
    verdict = compare_average(reservation(1), reservation(2), integral_domain(1, 2))
    assert verdict.relation is Relation.SECOND_BETTER
    assert verdict.witness["threshold_length"] == 2


def test_compare_average_second_variant():
    assert compare_average(reservation_second(2), reservation(2), D13).relation \
        is Relation.SECOND_BETTER
    assert compare_average(reservation_second(1), reservation(1), D14).relation \
        is Relation.EQUIVALENT


def test_compare_average_rejects_bad_pairs():
    with pytest.raises(OrderError):
        compare_average(reservation(3), reservation(2), D14)
    with pytest.raises(OrderError):
        compare_average(reservation_second(2), reservation(3), D14)


# ---------------------------------------------------------------------------
# expected


def test_expected_profit_integral_matches_average_sum():
    for price in (1, 2, 3):
        for n in (2, 3, 4):
            expected = expected_profit(reservation(price), D13, n)
            assert expected == Fraction(average_sum(reservation(price), D13, n), 3 ** n)


def test_expected_profit_real_values():
    assert expected_profit(reservation(2), R13, 2) == Fraction(9, 4)
    for n in (2, 3, 7):
        assert expected_profit(reservation(1), R13, n) == 2
        assert expected_profit(reservation(3), R13, n) == 2


def test_expected_profit_rejects_float_threshold_in_real_mode():
    with pytest.raises(ModeError):
        expected_profit(reservation(2.5), R13, 2)


def test_expected_model_invariants():
    for price in (1, 2, 3):
        for domain in (D13, R13):
            model = ExpectedModel.for_domain(domain, price)
            assert model.below_share + model.above_share == 1
            assert model.below_mean <= model.above_mean


def test_compare_expected_verdicts():
    assert compare_expected(1, 3, R13).relation is Relation.EQUIVALENT
    verdict = compare_expected(2, Fraction(5, 2), R13)
    assert verdict.relation is Relation.SECOND_BETTER
    assert verdict.witness["threshold_length"] == 5
    assert compare_expected(1, 2, R13).relation is Relation.SECOND_BETTER


def test_compare_expected_interior_against_ceiling():
    # With the upper threshold at the top of the interval, the interior rule
    # is strictly ahead at every length.
    verdict = compare_expected(2, 3, R13)
    assert verdict.relation is Relation.FIRST_BETTER
    for n in (2, 3, 6):
        assert expected_profit(reservation(2), R13, n) > expected_profit(reservation(3), R13, n)


def test_compare_expected_requires_real_mode_and_order():
    with pytest.raises(ModeError):
        compare_expected(1, 2, D14)
    with pytest.raises(OrderError):
        compare_expected(Fraction(5, 2), 2, R13)


# ---------------------------------------------------------------------------
# random order


def test_random_order_ratio_values():
    assert random_order_ratio(reservation(2), D14) == 2
    assert random_order_ratio(reservation(3), D14) == 2
    assert random_order_ratio(reservation_second(2), D14) == 4


def test_random_order_ratio_precondition():
    with pytest.raises(PreconditionError):
        random_order_ratio(reservation(1), D14)
    with pytest.raises(PreconditionError):
        random_order_ratio(reservation(2), integral_domain(2, 5))


def test_compare_random_order_matches_competitive():
    for base in (1, 2, 3):
        for size in range(2, 11):
            domain = integral_domain(base, base + size - 1)
            for p in domain.prices():
                for q in domain.prices():
                    if p < q:
                        assert compare_random_order(p, q, domain).relation is \
                            compare_competitive(p, q, domain).relation


def test_second_variant_verdicts():
    assert compare_second_variant("competitive", 2, D14).relation is Relation.FIRST_BETTER
    assert compare_second_variant("competitive", 1, D14).relation is Relation.EQUIVALENT
    assert compare_second_variant("random-order", 3, D14).relation is Relation.FIRST_BETTER
    assert compare_second_variant("random-order", 1, D14).relation is Relation.EQUIVALENT


# ---------------------------------------------------------------------------
# relative worst order


def test_rwo_related_pair():
    verdict = rwo_bounds(reservation(3), reservation(2), D14)
    assert verdict.relation is Relation.RELATED
    assert verdict.related == (2, 2)
    assert verdict.witness["floor"] == Fraction(1, 2)


def test_rwo_comparable_when_lower_rule_sits_at_the_bound():
    verdict = rwo_bounds(reservation(2), reservation(1), D14)
    assert verdict.relation is Relation.FIRST_BETTER
    assert verdict.witness["worst_order_ratio"] == 4


def test_rwo_first_hit_beats_its_variant():
    verdict = rwo_bounds(reservation(2), reservation_second(2), D14)
    assert verdict.relation is Relation.FIRST_BETTER
    assert verdict.witness["worst_order_ratio"] == 4
    assert verdict.witness["floor"] == 1


def test_rwo_variant_ties_at_the_lower_bound():
    verdict = rwo_bounds(reservation(1), reservation_second(1), D14)
    assert verdict.relation is Relation.EQUIVALENT


def test_rwo_rejects_wrong_order():
    with pytest.raises(OrderError):
        rwo_bounds(reservation(2), reservation(3), D14)


def test_worst_order_ceilings():
    assert worst_order_upper_ratio(reservation(3), reservation(2), D14) == 2
    assert worst_order_upper_ratio(reservation(2), reservation(3), D14) == 2
    assert worst_order_upper_ratio(reservation(1), reservation(3), D14) == 1
    assert worst_order_upper_ratio(reservation(3), reservation(1), D14) == 4


# ---------------------------------------------------------------------------
# relative interval


def test_finite_interval_values():
    assert relative_interval(reservation(3), reservation(2), D14) == \
        Interval(Fraction(-1), Fraction(2))
    assert relative_interval(reservation(2), reservation_second(2), D14) == \
        Interval(Fraction(-2), Fraction(3))


def test_finite_interval_antisymmetry():
    cases = [
        (reservation(3), reservation(2)),
        (reservation(4), reservation(1)),
        (reservation(2), reservation_second(2)),
    ]
    for a, b in cases:
        forward = finite_difference_bounds(a, b, D14)
        backward = finite_difference_bounds(b, a, D14)
        assert forward == (-backward[1], -backward[0])


def test_asymptotic_interval_limits_and_sweep():
    interval = relative_interval(reservation(3), reservation(2), D14,
                                 IntervalVariant.ASYMPTOTIC_OVER_SIZE)
    assert (interval.lo, interval.hi) == (0, 1)
    assert interval.first_dominates
    sizes = [point.size for point in interval.sweep]
    assert sizes == [4, 8, 16, 32, 64]

    variant = relative_interval(reservation(2), reservation_second(2), D14,
                                IntervalVariant.ASYMPTOTIC_OVER_SIZE)
    assert (variant.lo, variant.hi) == (-1, 1)
    assert not variant.first_dominates


def test_interval_rejects_mixed_thresholds():
    with pytest.raises(SpecError):
        finite_difference_bounds(reservation(2), reservation_second(3), D14)


# ---------------------------------------------------------------------------
# floor ratio and best-threshold scans


def test_minmin_is_always_one():
    for alg in (reservation(2), reservation(4), reservation_second(2)):
        assert minmin_ratio(alg, D14) == 1


def test_best_competitive():
    best = best_reservation("competitive", integral_domain(1, 10))
    assert best.prices == frozenset({4})
    assert best.witness == 4 == ceil_sqrt(10)


def test_best_competitive_keeps_ties():
    best = best_reservation("competitive", integral_domain(1, 9))
    assert best.prices == frozenset({3, 4})
    assert best.witness == 3
    assert best.witness in best.prices


def test_best_average_is_the_upper_bound():
    assert best_reservation("average", D14).prices == frozenset({4})
    assert best_reservation("average", integral_domain(1, 10)).prices == frozenset({10})


def test_best_random_order_matches_competitive():
    for domain in (D14, integral_domain(1, 10), integral_domain(2, 9)):
        assert best_reservation("random-order", domain).prices == \
            best_reservation("competitive", domain).prices


def test_best_finite_interval_is_the_midpoint():
    best = best_reservation("finite-relative-interval", D14)
    assert best.prices == frozenset({3})
    assert best.witness == 3
    wide = best_reservation("finite-relative-interval", integral_domain(1, 10))
    assert wide.prices == frozenset({6})


def test_best_rwo_contains_the_geometric_pick():
    for domain in (D14, integral_domain(1, 10)):
        best = best_reservation("rwo", domain)
        assert best.witness in best.prices


def test_best_minmin_cannot_separate():
    assert best_reservation("minmin", D14).prices == frozenset({1, 2, 3, 4})


def test_best_bijective_is_rejected():
    with pytest.raises(MeasureError):
        best_reservation("bijective", D14)


def test_ceil_sqrt():
    assert ceil_sqrt(9) == 3
    assert ceil_sqrt(10) == 4
    assert ceil_sqrt(1) == 1
    assert ceil_sqrt(0) == 0
