"""Online price search: reservation policies and seven performance measures.

The package pairs every closed-form result with an independent brute-force
oracle; the ``verify`` module (and the ``onlinesearch verify`` command)
replays them against each other exactly.
"""

from .algorithms import (
    OPT,
    AlgorithmKind,
    AlgorithmSpec,
    generic_algorithm,
    opt_profit,
    ordering_count,
    reservation,
    reservation_second,
    run,
    worst_order_profit,
)
from .domain import (
    BigCount,
    ExactRatio,
    Mode,
    PriceDomain,
    PriceSequence,
    integral_domain,
    make_domain,
    make_sequence,
    real_domain,
)
from .enumeration import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    OutputDistribution,
    enumerate_sequences,
    output_distribution,
    permutation_expectation,
    sample_real_sequences,
)
from .errors import (
    BoundsError,
    BudgetError,
    LengthError,
    MeasureError,
    ModeError,
    OnlineSearchError,
    OrderError,
    PreconditionError,
    RangeError,
    SpecError,
)
from .measures import (
    BestReservation,
    ExpectedModel,
    IntervalVariant,
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
    minmin_ratio,
    random_order_ratio,
    relative_interval,
    rwo_bounds,
    worst_order_upper_ratio,
)
from .oracles import (
    MonteCarloMean,
    OracleReport,
    oracle_average,
    oracle_bijective,
    oracle_competitive,
    oracle_expected_real,
    oracle_random_order,
    oracle_relative_interval,
    oracle_rwo,
)
from .report import ReportDocument
from .verdicts import Interval, Relation, SweepPoint, Verdict
from .verify import all_passed, run_verification

__version__ = "0.1.0"
