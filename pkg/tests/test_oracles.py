from fractions import Fraction

from onlinesearch import (
    Interval,
    Relation,
    expected_profit,
    integral_domain,
    oracle_average,
    oracle_bijective,
    oracle_competitive,
    oracle_expected_real,
    oracle_random_order,
    oracle_relative_interval,
    oracle_rwo,
    real_domain,
    reservation,
    reservation_second,
)

D14 = integral_domain(1, 4)
D13 = integral_domain(1, 3)
R13 = real_domain(1, 3)


def test_oracle_competitive_values():
    assert oracle_competitive(reservation(2), D14, 3) == 2
    assert oracle_competitive(reservation(1), D14, 2) == 4
    assert oracle_competitive(reservation_second(2), D14, 3) == 4


def test_oracle_bijective_verdicts():
    assert oracle_bijective(reservation(1), reservation(2), D13, 2).relation \
        is Relation.SECOND_BETTER
    assert oracle_bijective(reservation(2), reservation(3), D13, 2).relation \
        is Relation.INCOMPARABLE
    assert oracle_bijective(reservation(2), reservation(2), D13, 2).relation \
        is Relation.EQUIVALENT


def test_oracle_bijective_explicit_pairing_witness():
    verdict = oracle_bijective(reservation(1), reservation(2), D13, 2)
    assert verdict.witness == {
        "explicit_pairing_forward": True,
        "explicit_pairing_backward": False,
    }


def test_oracle_average_values():
    D12 = integral_domain(1, 2)
    assert oracle_average(reservation(2), D12, 2) == 7
    assert oracle_average(reservation(1), D12, 2) == 6
    assert oracle_average(reservation(2), D13, 2) == 21


def test_oracle_random_order_values():
    assert oracle_random_order(reservation(2), D14, 3) == Fraction(3, 2)
    assert oracle_random_order(reservation(2), D14, 2) == Fraction(4, 3)
    assert oracle_random_order(reservation(1), D14, 2) == Fraction(8, 5)


def test_oracle_rwo_values():
    assert oracle_rwo(reservation(3), reservation(2), D14, 3) == (Fraction(1, 2), Fraction(2))
    assert oracle_rwo(reservation(2), reservation_second(2), D14, 3) == (Fraction(1), Fraction(4))
    assert oracle_rwo(reservation(2), reservation(2), D14, 3) == (Fraction(1), Fraction(1))


def test_oracle_relative_interval_values():
    assert oracle_relative_interval(reservation(3), reservation(2), D14, 2) == \
        Interval(Fraction(-1), Fraction(2))
    assert oracle_relative_interval(reservation(2), reservation_second(2), D14, 2) == \
        Interval(Fraction(-2), Fraction(3))
    assert oracle_relative_interval(reservation(2), reservation(2), D14, 2) == \
        Interval(Fraction(0), Fraction(0))


def test_oracle_expected_real_matches_closed_forms():
    cases = [
        (Fraction(2), 2, Fraction(9, 4)),
        (Fraction(1), 5, Fraction(2)),
        (Fraction(3), 5, Fraction(2)),
    ]
    for price, length, closed in cases:
        assert expected_profit(reservation(price), R13, length) == closed
        estimate = oracle_expected_real(price, R13, length, 100_000, seed=1)
        assert abs(estimate.mean - float(closed)) <= 3 * estimate.stderr


def test_oracle_expected_real_is_deterministic():
    first = oracle_expected_real(Fraction(2), R13, 2, 1_000, seed=9)
    second = oracle_expected_real(Fraction(2), R13, 2, 1_000, seed=9)
    assert first == second
