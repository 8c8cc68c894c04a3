"""Command-line frontend: pairwise comparisons, verdict matrices, best-threshold
scans, and the closed-form-versus-oracle verification suite.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 budget
exceeded.  Real-mode sampling always requires an explicit seed; there is no
implicit entropy.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import measures, verify
from .algorithms import reservation, reservation_second
from .domain import Mode, PriceDomain, make_domain
from .enumeration import DEFAULT_MAX_PERMUTATIONS, DEFAULT_MAX_SEQUENCES, EnumerationBudget
from .errors import BudgetError, OnlineSearchError
from .measures import IntervalVariant
from .report import ReportDocument, approx_str, compact_number, fraction_str
from .verdicts import Relation, Verdict

__version__ = "0.1.0"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

BUDGET_ENV_VAR = "ONLINESEARCH_BUDGET"

PAIR_MEASURES = (
    "competitive",
    "bijective",
    "average",
    "expected",
    "random-order",
    "rwo",
    "relative-interval",
    "finite-relative-interval",
)
SINGLE_MEASURES = ("minmin",)
REAL_CAPABLE = ("bijective", "expected", "minmin")
MATRIX_MEASURES = (
    "competitive",
    "average",
    "random-order",
    "rwo",
    "bijective",
    "finite-relative-interval",
    "minmin",
)
BEST_MEASURES = (
    "competitive",
    "average",
    "random-order",
    "rwo",
    "finite-relative-interval",
    "minmin",
)


class UsageError(OnlineSearchError):
    """Flag combination the command cannot act on."""


# ---------------------------------------------------------------------------
# configuration and shared flag handling


def load_config(path: str) -> dict:
    """Plain ``key = value`` file; '#' starts a comment."""
    values = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


def _to_int(text, what: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise UsageError(f"bad {what}: {text!r}") from None


def _resolve_budget(args, config: dict) -> EnumerationBudget:
    if getattr(args, "budget", None) is not None:
        cap = args.budget
    elif "budget" in config:
        cap = _to_int(config["budget"], "budget in config file")
    elif os.environ.get(BUDGET_ENV_VAR):
        cap = _to_int(os.environ[BUDGET_ENV_VAR], f"budget in ${BUDGET_ENV_VAR}")
    else:
        return EnumerationBudget(DEFAULT_MAX_SEQUENCES, DEFAULT_MAX_PERMUTATIONS)
    if cap <= 0:
        raise UsageError("budget must be positive")
    return EnumerationBudget(cap, cap)


def _resolve_format(args, config: dict) -> str:
    fmt = getattr(args, "format", None) or config.get("format") or "md"
    if fmt not in ("csv", "json", "md"):
        raise UsageError(f"unknown format {fmt!r}")
    return fmt


def _resolve_bound(args, config: dict, name: str):
    value = getattr(args, name, None)
    if value is None:
        value = config.get(name)
    if value is None:
        raise UsageError(f"--{name} is required (flag or config file)")
    return str(value)


def _parse_price(text: str, mode: Mode):
    try:
        if mode is Mode.INTEGRAL:
            return int(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad price {text!r}: {exc}") from None


def _parse_lengths(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            first, last = text.split("..", 1)
            return int(first), int(last)
        single = int(text)
        return single, single
    except ValueError:
        raise UsageError(f"bad length range {text!r}; use N or A..B") from None


def _make_domain(args, config: dict) -> PriceDomain:
    mode = Mode.REAL if getattr(args, "real", False) else Mode.INTEGRAL
    low = _parse_price(_resolve_bound(args, config, "m"), mode)
    high = _parse_price(_resolve_bound(args, config, "M"), mode)
    return make_domain(low, high, mode)


def _metadata(domain, mode: str, budget: EnumerationBudget, seed) -> dict:
    return {
        "domain": str(domain) if domain is not None else "grid",
        "mode": mode,
        "budget": str(budget.max_sequences),
        "seed": None if seed is None else str(seed),
        "version": __version__,
    }


# ---------------------------------------------------------------------------
# verdict rendering


def _detail(verdict: Verdict) -> str:
    w = dict(verdict.witness or {})
    measure = verdict.measure
    if measure in ("competitive", "random-order"):
        if "first_ratio" in w and "second_ratio" in w:
            return f"c={compact_number(w['first_ratio'])} vs c={compact_number(w['second_ratio'])}"
        if "second_ratio" in w:
            return f"second-variant ratio c={compact_number(w['second_ratio'])}"
        return f"bound {w['product_bound']} vs pair {w['pair_product']}"
    if measure in ("average", "expected"):
        if "threshold_length" in w:
            return f"n0={w['threshold_length']}, strict from n={w['first_strict_length']}"
        if "strict_from_length" in w:
            return f"strict from n={w['strict_from_length']}"
        if "shared_mean" in w:
            return f"shared mean {compact_number(w['shared_mean'])}"
        return "identical totals"
    if measure == "bijective":
        if "rule" in w:
            return "continuum pairing"
        if "empirical" in w:
            return f"rule verdict; enumerated dominance agrees for n={w['lengths'][0]}..{w['lengths'][1]}"
        return f"empirical over n={w['lengths'][0]}..{w['lengths'][1]}"
    if measure == "rwo":
        if "worst_order_ratio" in w:
            return f"WR={compact_number(w['worst_order_ratio'])}"
        if verdict.related is not None:
            first, second = verdict.related
            return f"related ({compact_number(first)}, {compact_number(second)})"
        return f"floor={compact_number(w['floor'])} ceiling={compact_number(w['ceiling'])}"
    return ""


def _interval_verdict_parts(interval) -> tuple[str, str]:
    if interval.hi > abs(interval.lo):
        relation = Relation.FIRST_BETTER
    elif abs(interval.lo) > interval.hi:
        relation = Relation.SECOND_BETTER
    else:
        relation = Relation.EQUIVALENT
    return relation.value, f"interval=[{compact_number(interval.lo)}, {compact_number(interval.hi)}]"


def _exact_fields(verdict: Verdict) -> dict:
    # Machine-readable companions to the human detail string: exact num/den
    # for every rational witness value, decimal strings for counts/lengths.
    fields = {}
    for key, value in (verdict.witness or {}).items():
        if isinstance(value, bool):
            continue
        if isinstance(value, Fraction):
            fields[key] = fraction_str(value)
            fields[key + "_approx"] = approx_str(value)
        elif isinstance(value, int):
            fields[key] = str(value)
        elif isinstance(value, tuple):
            fields[key] = ";".join(str(item) for item in value)
    if verdict.related is not None:
        fields["ceiling_first_over_second"] = fraction_str(verdict.related[0])
        fields["ceiling_second_over_first"] = fraction_str(verdict.related[1])
    return fields


def _interval_fields(interval) -> dict:
    fields = {
        "lo": fraction_str(interval.lo),
        "lo_approx": approx_str(interval.lo),
        "hi": fraction_str(interval.hi),
        "hi_approx": approx_str(interval.hi),
    }
    if interval.sweep is not None:
        fields["sweep"] = ";".join(
            f"{point.size}:{fraction_str(point.lo_rate)}:{fraction_str(point.hi_rate)}"
            for point in interval.sweep
        )
    return fields


# ---------------------------------------------------------------------------
# compare


def _compare_pair_rows(args, domain, budget) -> list:
    measure = args.measure
    first = reservation(args.p_price)
    if args.rp2:
        second = reservation_second(args.p_price)
    else:
        second = reservation(args.q_price)
    extra = {}

    if measure == "competitive":
        if args.rp2:
            verdict = measures.compare_second_variant("competitive", args.p_price, domain)
        else:
            verdict = measures.compare_competitive(args.p_price, args.q_price, domain)
        relation, detail, extra = verdict.relation.value, _detail(verdict), _exact_fields(verdict)
    elif measure == "random-order":
        if args.rp2:
            verdict = measures.compare_second_variant("random-order", args.p_price, domain)
        else:
            verdict = measures.compare_random_order(args.p_price, args.q_price, domain)
        relation, detail, extra = verdict.relation.value, _detail(verdict), _exact_fields(verdict)
    elif measure == "average":
        if args.rp2:
            verdict = measures.compare_average(second, first, domain).flipped()
        else:
            verdict = measures.compare_average(first, second, domain)
        relation, detail, extra = verdict.relation.value, _detail(verdict), _exact_fields(verdict)
    elif measure == "expected":
        if args.rp2:
            raise UsageError("the expected measure compares two first-hit thresholds")
        verdict = measures.compare_expected(args.p_price, args.q_price, domain)
        relation, detail, extra = verdict.relation.value, _detail(verdict), _exact_fields(verdict)
    elif measure == "bijective":
        lengths = args.lengths if args.lengths is not None else (2, 4)
        verdict = measures.compare_bijective(first, second, domain, lengths, budget)
        relation, detail = verdict.relation.value, _detail(verdict)
    elif measure == "rwo":
        verdict = measures.rwo_bounds(first, second, domain)
        relation, detail, extra = verdict.relation.value, _detail(verdict), _exact_fields(verdict)
    elif measure == "finite-relative-interval":
        interval = measures.relative_interval(first, second, domain, IntervalVariant.FINITE)
        relation, detail = _interval_verdict_parts(interval)
        extra = _interval_fields(interval)
    elif measure == "relative-interval":
        interval = measures.relative_interval(
            first, second, domain, IntervalVariant.ASYMPTOTIC_OVER_SIZE, budget=budget
        )
        relation, detail = _interval_verdict_parts(interval)
        detail += f"; sweep to size {interval.sweep[-1].size}"
        extra = _interval_fields(interval)
    else:
        raise UsageError(f"unknown measure {measure!r}")

    row = {
        "measure": measure,
        "first": first.label(),
        "second": second.label(),
        "relation": relation,
        "detail": detail,
    }
    row.update(extra)
    return [row]


def cmd_compare(args) -> int:
    config = load_config(args.config) if args.config else {}
    budget = _resolve_budget(args, config)
    fmt = _resolve_format(args, config)

    measure = args.measure
    if measure not in PAIR_MEASURES + SINGLE_MEASURES:
        raise UsageError(f"unknown measure {measure!r}")
    if args.real and measure not in REAL_CAPABLE:
        raise UsageError(f"measure {measure!r} is integral-only")
    if not args.real and measure == "expected":
        raise UsageError("the expected measure needs --real")
    if args.real and args.n is not None:
        raise UsageError("--n has no meaning in real mode (no enumeration)")
    if args.q is not None and args.rp2:
        raise UsageError("--q and --rp2 are mutually exclusive")

    domain = _make_domain(args, config)
    args.p_price = _parse_price(args.p, domain.mode) if args.p is not None else None
    args.q_price = _parse_price(args.q, domain.mode) if args.q is not None else None
    args.lengths = _parse_lengths(args.n) if args.n is not None else None
    if args.p_price is None:
        raise UsageError("--p is required")

    if measure in SINGLE_MEASURES:
        if args.q is not None:
            raise UsageError(f"measure {measure!r} takes a single algorithm")
        alg = reservation_second(args.p_price) if args.rp2 else reservation(args.p_price)
        value = measures.minmin_ratio(alg, domain)
        rows = [{
            "measure": measure,
            "first": alg.label(),
            "second": "",
            "relation": "-",
            "detail": f"ratio {fraction_str(value)}",
            "value": fraction_str(value),
            "value_approx": approx_str(value),
        }]
    else:
        if args.q_price is None and not args.rp2:
            raise UsageError("pair measures need --q or --rp2")
        rows = _compare_pair_rows(args, domain, budget)

    doc = ReportDocument(
        command={
            "name": "compare",
            "args": {"measure": measure, "m": str(domain.low), "M": str(domain.high),
                     "p": args.p, "q": args.q, "rp2": args.rp2,
                     "real": args.real, "n": args.n},
            "columns": ["measure", "first", "second", "relation", "detail"],
        },
        results=rows,
        metadata=_metadata(domain, domain.mode.value, budget, None),
    )
    print(doc.render(fmt), end="")
    return EXIT_OK


# ---------------------------------------------------------------------------
# matrix


def _matrix_verdict(measure: str, p: int, q: int, domain, lengths, budget) -> tuple[str, str]:
    if measure == "competitive":
        verdict = measures.compare_competitive(p, q, domain)
    elif measure == "average":
        verdict = measures.compare_average(reservation(p), reservation(q), domain)
    elif measure == "random-order":
        verdict = measures.compare_random_order(p, q, domain)
    elif measure == "rwo":
        # Rows are ordered (p, q); the bounds engine wants the higher
        # threshold first, so compute there and flip back.
        verdict = measures.rwo_bounds(reservation(q), reservation(p), domain).flipped()
    elif measure == "bijective":
        verdict = measures.compare_bijective(reservation(p), reservation(q), domain, lengths, budget)
    elif measure == "finite-relative-interval":
        interval = measures.relative_interval(
            reservation(p), reservation(q), domain, IntervalVariant.FINITE
        )
        return _interval_verdict_parts(interval)
    elif measure == "minmin":
        one = measures.minmin_ratio(reservation(p), domain)
        other = measures.minmin_ratio(reservation(q), domain)
        return Relation.EQUIVALENT.value, f"ratio {fraction_str(one)} vs {fraction_str(other)}"
    else:
        raise UsageError(f"measure {measure!r} is not a matrix measure")
    return verdict.relation.value, _detail(verdict)


def cmd_matrix(args) -> int:
    config = load_config(args.config) if args.config else {}
    budget = _resolve_budget(args, config)
    fmt = _resolve_format(args, config)
    if args.real:
        raise UsageError("the verdict matrix is integral-only")
    domain = _make_domain(args, config)
    lengths = _parse_lengths(args.n) if args.n is not None else (2, 4)

    wanted = [item.strip() for item in args.measures.split(",") if item.strip()]
    if not wanted:
        raise UsageError("--measures must name at least one measure")
    for measure in wanted:
        if measure not in MATRIX_MEASURES:
            raise UsageError(f"measure {measure!r} is not a matrix measure")

    rows = []
    for measure in wanted:
        for p in domain.prices():
            for q in domain.prices():
                if p >= q:
                    continue
                relation, detail = _matrix_verdict(measure, p, q, domain, lengths, budget)
                rows.append({
                    "measure": measure,
                    "p": str(p),
                    "q": str(q),
                    "relation": relation,
                    "detail": detail,
                })

    doc = ReportDocument(
        command={
            "name": "matrix",
            "args": {"m": str(domain.low), "M": str(domain.high), "measures": ",".join(wanted)},
            "columns": ["measure", "p", "q", "relation", "detail"],
        },
        results=rows,
        metadata=_metadata(domain, domain.mode.value, budget, None),
    )
    print(doc.render(fmt), end="")
    return EXIT_OK


# ---------------------------------------------------------------------------
# best


def cmd_best(args) -> int:
    config = load_config(args.config) if args.config else {}
    budget = _resolve_budget(args, config)
    fmt = _resolve_format(args, config)
    domain = _make_domain(args, config)
    if args.measure not in BEST_MEASURES:
        raise UsageError(f"no best-threshold scan for measure {args.measure!r}")

    best = measures.best_reservation(args.measure, domain)
    rows = [{
        "measure": best.measure,
        "best_set": ";".join(str(p) for p in sorted(best.prices)),
        "witness": "" if best.witness is None else str(best.witness),
    }]
    doc = ReportDocument(
        command={
            "name": "best",
            "args": {"measure": args.measure, "m": str(domain.low), "M": str(domain.high)},
            "columns": ["measure", "best_set", "witness"],
        },
        results=rows,
        metadata=_metadata(domain, domain.mode.value, budget, None),
    )
    print(doc.render(fmt), end="")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    config = load_config(args.config) if args.config else {}
    budget = _resolve_budget(args, config)
    fmt = _resolve_format(args, config)
    if args.max_N < 2 or args.max_n < 2:
        raise UsageError("the grid needs --max-N >= 2 and --max-n >= 2")
    if args.seed is not None and args.mc_samples < 2:
        raise UsageError("--mc-samples must be at least 2")

    reports = verify.run_verification(
        max_size=args.max_N,
        max_len=args.max_n,
        budget=budget,
        seed=args.seed,
        mc_samples=args.mc_samples,
    )
    rows = [{
        "check": report.quantity,
        "instances": str(report.instances_checked),
        "match": "ok" if report.match else "FAIL",
        "detail": report.detail,
    } for report in reports]

    doc = ReportDocument(
        command={
            "name": "verify",
            "args": {"max_N": str(args.max_N), "max_n": str(args.max_n),
                     "seed": None if args.seed is None else str(args.seed)},
            "columns": ["check", "instances", "match", "detail"],
        },
        results=rows,
        metadata=_metadata(None, "integral+real", budget, args.seed),
    )
    print(doc.render(fmt), end="")
    if verify.all_passed(reports):
        return EXIT_OK
    failing = next(r for r in reports if not r.match)
    print(f"verification failed: {failing.quantity}: {failing.detail}", file=sys.stderr)
    return EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser plumbing


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json", "md"), default=None,
                        help="output format (default md)")
    parser.add_argument("--budget", type=int, default=None,
                        help=f"enumeration budget (default {DEFAULT_MAX_SEQUENCES}, "
                             f"env {BUDGET_ENV_VAR})")
    parser.add_argument("--config", default=None, help="key = value preset file")


def _add_domain_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", dest="m", default=None, help="lower price bound")
    parser.add_argument("--M", dest="M", default=None, help="upper price bound")
    parser.add_argument("--real", action="store_true", help="real-valued price interval")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onlinesearch",
        description="Reservation policies for online price search, compared under "
                    "seven performance measures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    compare = commands.add_parser("compare", help="one pairwise verdict or ratio")
    _add_domain_flags(compare)
    compare.add_argument("--measure", required=True)
    compare.add_argument("--p", default=None, help="first reservation price")
    compare.add_argument("--q", default=None, help="second reservation price")
    compare.add_argument("--rp2", action="store_true",
                         help="compare against the second-hit variant of --p")
    compare.add_argument("--n", default=None, help="length range for enumeration (N or A..B)")
    _add_common(compare)
    compare.set_defaults(handler=cmd_compare)

    matrix = commands.add_parser("matrix", help="full pairwise verdict matrix")
    _add_domain_flags(matrix)
    matrix.add_argument("--measures", required=True, help="comma-separated measure list")
    matrix.add_argument("--n", default=None, help="length range for enumeration measures")
    _add_common(matrix)
    matrix.set_defaults(handler=cmd_matrix)

    best = commands.add_parser("best", help="unbeaten reservation prices under a measure")
    _add_domain_flags(best)
    best.add_argument("--measure", required=True)
    _add_common(best)
    best.set_defaults(handler=cmd_best)

    verify_cmd = commands.add_parser("verify", help="closed forms against brute-force oracles")
    verify_cmd.add_argument("--max-N", dest="max_N", type=int, default=4,
                            help="largest domain size in the grid")
    verify_cmd.add_argument("--max-n", dest="max_n", type=int, default=6,
                            help="largest sequence length in the grid")
    verify_cmd.add_argument("--seed", type=int, default=None,
                            help="seed for the Monte Carlo checks (omitted: skip them)")
    verify_cmd.add_argument("--mc-samples", dest="mc_samples", type=int, default=1_000_000,
                            help="samples per Monte Carlo check")
    _add_common(verify_cmd)
    verify_cmd.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.handler(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OnlineSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
