import math
from fractions import Fraction
from itertools import permutations

import pytest

from onlinesearch import (
    OPT,
    BudgetError,
    EnumerationBudget,
    LengthError,
    ModeError,
    enumerate_sequences,
    generic_algorithm,
    integral_domain,
    output_distribution,
    permutation_expectation,
    real_domain,
    reservation,
    reservation_second,
    sample_real_sequences,
)
from onlinesearch.enumeration import sorted_relation


def test_enumeration_is_lexicographic_and_complete():
    d = integral_domain(1, 2)
    seqs = [s.prices for s in enumerate_sequences(d, 2)]
    assert seqs == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_sequences(integral_domain(1, 3), 2)) == 9
    for size in (2, 3, 4):
        d = integral_domain(1, size)
        for n in (2, 3, 4):
            assert sum(1 for _ in enumerate_sequences(d, n)) == size ** n


def test_enumeration_budget():
    with pytest.raises(BudgetError):
        list(enumerate_sequences(integral_domain(1, 10), 9, EnumerationBudget(10 ** 7, 10 ** 7)))


def test_enumeration_rejects_real_mode():
    with pytest.raises(ModeError):
        enumerate_sequences(real_domain(1, 3), 2)


def test_enumeration_rejects_short_lengths():
    with pytest.raises(LengthError):
        enumerate_sequences(integral_domain(1, 3), 1)


def test_output_distribution_first_hit():
    dist = output_distribution(reservation(2), integral_domain(1, 3), 2)
    assert dist.counts == {1: 1, 2: 4, 3: 4}
    assert dist.total() == 9


def test_output_distribution_second_hit():
    dist = output_distribution(reservation_second(2), integral_domain(1, 3), 2)
    assert dist.counts == {1: 3, 2: 3, 3: 3}


def test_output_distribution_lowest_threshold_is_uniform():
    dist = output_distribution(reservation(1), integral_domain(1, 3), 2)
    assert dist.counts == {1: 3, 2: 3, 3: 3}


def test_output_distribution_generic_path_agrees_with_kernel():
    d = integral_domain(1, 3)
    mirrored = generic_algorithm(
        lambda prefix, is_last: is_last or prefix[-1] >= 2, name="mirror"
    )
    via_callback = output_distribution(mirrored, d, 3)
    via_kernel = output_distribution(reservation(2), d, 3)
    assert via_callback.counts == via_kernel.counts


def test_output_distribution_opt():
    dist = output_distribution(OPT, integral_domain(1, 2), 2)
    assert dist.counts == {1: 1, 2: 3}


def test_distribution_mass_identity():
    for alg in (reservation(2), reservation_second(2)):
        for n in (2, 3, 4):
            dist = output_distribution(alg, integral_domain(1, 4), n)
            assert dist.total() == 4 ** n


def test_permutation_expectation_values():
    assert permutation_expectation(reservation(2), [4, 2, 2]) == Fraction(8, 3)
    assert permutation_expectation(reservation(2), [1, 1]) == 1
    assert permutation_expectation(reservation_second(2), [4, 1, 1]) == 2


def test_permutation_expectation_matches_raw_average():
    cases = [
        (reservation(2), (1, 2, 2, 4)),
        (reservation(3), (1, 1, 3, 4, 4)),
        (reservation_second(2), (2, 2, 3)),
        (OPT, (1, 4, 2)),
    ]
    d = integral_domain(1, 4)
    for alg, contents in cases:
        orders = list(permutations(contents))
        raw = Fraction(
            sum(alg_profit(alg, order, d) for order in orders), len(orders)
        )
        assert permutation_expectation(alg, contents) == raw


def alg_profit(alg, order, d):
    from onlinesearch import make_sequence, run

    return run(alg, make_sequence(d, order))


def test_permutation_budget():
    with pytest.raises(BudgetError):
        permutation_expectation(reservation(2), list(range(1, 9)), EnumerationBudget(10, 10))


def test_sampler_is_deterministic_per_seed():
    d = real_domain(1, 3)
    first = [s.prices for s in sample_real_sequences(d, 2, 3, seed=7)]
    second = [s.prices for s in sample_real_sequences(d, 2, 3, seed=7)]
    assert first == second
    third = [s.prices for s in sample_real_sequences(d, 2, 3, seed=8)]
    assert first != third


def test_sampler_respects_bounds_and_count():
    d = real_domain(1, 3)
    draws = list(sample_real_sequences(d, 4, 500, seed=3))
    assert len(draws) == 500
    assert all(1 <= price <= 3 for s in draws for price in s.prices)
    assert list(sample_real_sequences(d, 2, 0, seed=1)) == []


def test_sampler_mean_is_the_interval_midpoint():
    # Per-price empirical mean within three standard errors of 2 on R[1, 3].
    d = real_domain(1, 3)
    values = [price for s in sample_real_sequences(d, 2, 1_000_000, seed=1) for price in s.prices]
    mean = sum(values) / len(values)
    variance = sum((v - mean) ** 2 for v in values) / (len(values) - 1)
    stderr = math.sqrt(variance / len(values))
    assert abs(mean - 2) <= 3 * stderr


def test_sampler_requires_real_mode():
    with pytest.raises(ModeError):
        sample_real_sequences(integral_domain(1, 3), 2, 1, seed=1)


def test_sorted_relation():
    prices = range(1, 4)
    uniform = {1: 3, 2: 3, 3: 3}
    skewed = {1: 1, 2: 4, 3: 4}
    assert sorted_relation(uniform, uniform, prices) == ("eq", False)
    assert sorted_relation(uniform, skewed, prices) == ("le", True)
    assert sorted_relation(skewed, uniform, prices) == ("ge", True)
    assert sorted_relation({1: 5, 2: 0, 3: 4}, uniform, prices) == ("mixed", True)
