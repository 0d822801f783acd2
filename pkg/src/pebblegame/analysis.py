"""Derived quantities: marginal-cost thresholds, binomial bounds, entropy,
and the exact minimum time-space product.

All logarithms are base 2.  Binomial work uses exact integer arithmetic
(math.comb) with an explicit 64-bit cap on results, matching the cost type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import config, dp
from .cost import INFINITE, MAX_FINITE_COST
from .errors import CostOverflowError, TableRangeError, UnsolvableError


class BeyondTable:
    """Marker: the threshold was not witnessed within the table extents."""

    __slots__ = ()
    _instance: "BeyondTable | None" = None

    def __new__(cls) -> "BeyondTable":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "beyond-table"


BEYOND_TABLE = BeyondTable()


def _checked(value: int, what: str) -> int:
    if value > MAX_FINITE_COST:
        raise CostOverflowError(f"{what} exceeds the 64-bit cap")
    return value


def _validate_ks(k: int, s: int, min_s: int = 2) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"k must be an integer >= 0, got {k!r}")
    if not isinstance(s, int) or isinstance(s, bool) or s < min_s:
        raise ValueError(f"S must be an integer >= {min_s}, got {s!r}")


@dataclass(frozen=True)
class ThresholdRecord:
    """Least n whose marginal cost exceeds 2**k, with its closed-form bounds."""

    k: int
    s: int
    x: object  # int, or BEYOND_TABLE when the table is too small
    x_lower: int
    x_upper: int


@dataclass(frozen=True)
class TsRecord:
    """Exact minimizer of F(n, S) * S over pebble budgets."""

    n: int
    best_s: int
    best_f: int
    product: int
    ratio: float  # log2(product / n) / (2 * sqrt(log2 n)); nan for n = 1


def x_threshold(k: int, s: int, tables: dp.DpTables):
    """Least n with delta(n, s) > 2**k, scanning the built table.

    Returns BEYOND_TABLE when no n within the table witnesses the threshold.
    """
    _validate_ks(k, s, min_s=1)
    bound = 2**k
    for n in range(1, tables.nmax):
        if dp.table_delta(tables, n, s) > bound:
            return n
    return BEYOND_TABLE


def x_lower(k: int, s: int) -> int:
    """Closed-form lower bound on the threshold: sum of C(s-1, i) for i <= k."""
    _validate_ks(k, s)
    total = sum(math.comb(s - 1, i) for i in range(k + 1))
    return _checked(total, f"x_lower(k={k}, S={s})")


def x_upper(k: int, s: int) -> int:
    """Closed-form upper bound: min(C(s+k-1, k), 2**(s-1))."""
    _validate_ks(k, s)
    value = min(math.comb(s + k - 1, k), 2 ** (s - 1))
    return _checked(value, f"x_upper(k={k}, S={s})")


def f_bound_lower_sum(k: int, s: int) -> int:
    """Upper bound on F at the lower threshold: sum of C(s-1, i) * 2**(i+1).

    Defined for any k >= 0; it bounds F(x_lower(k, s), s) when k <= s - 1.
    """
    _validate_ks(k, s)
    total = sum(math.comb(s - 1, i) * 2 ** (i + 1) for i in range(k + 1))
    return _checked(total, f"f_bound_lower_sum(k={k}, S={s})")


def f_bound_upper_sum(k: int, s: int) -> int:
    """Companion sum at the upper threshold: sum of C(s+i-2, i) * (2**i + 1)."""
    _validate_ks(k, s)
    total = sum(math.comb(s + i - 2, i) * (2**i + 1) for i in range(k + 1))
    return _checked(total, f"f_bound_upper_sum(k={k}, S={s})")


def threshold_record(k: int, s: int, tables: dp.DpTables) -> ThresholdRecord:
    return ThresholdRecord(
        k=k, s=s, x=x_threshold(k, s, tables), x_lower=x_lower(k, s), x_upper=x_upper(k, s)
    )


def entropy(gamma: float) -> float:
    """Binary entropy H(gamma), with H(0) = H(1) = 0."""
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"entropy needs 0 <= gamma <= 1, got {gamma!r}")
    if gamma == 0.0 or gamma == 1.0:
        return 0.0
    return -gamma * math.log2(gamma) - (1.0 - gamma) * math.log2(1.0 - gamma)


def f_gamma(gamma: float, s: int, tables: dp.DpTables) -> float:
    """Normalized log-cost (1/s) * log2 F(floor(2**(gamma*s)), s)."""
    if not isinstance(s, int) or isinstance(s, bool) or s < 1:
        raise ValueError(f"S must be an integer >= 1, got {s!r}")
    n = math.floor(2 ** (gamma * s))
    if n < 1:
        raise ValueError(f"gamma={gamma} gives an empty board (floor 2**(gamma*S) = {n})")
    if n > tables.nmax:
        raise TableRangeError(
            f"f_gamma(gamma={gamma}, S={s}) needs F({n}, {s}); table stops at nmax={tables.nmax}"
        )
    value = tables.cost(n, s)
    if value is INFINITE:
        raise UnsolvableError(f"f_gamma(gamma={gamma}, S={s}): F({n}, {s}) is infinite")
    return math.log2(value) / s


@dataclass(frozen=True)
class FGammaRow:
    gamma: float
    h: float
    n: int
    f_value: float | None  # None when the point is infeasible
    gap: float | None  # f(H(gamma), s) - (gamma + H(gamma))


def f_gamma_report(s: int, tables: dp.DpTables, gammas) -> list:
    """Evaluate f at H(gamma) across a grid; infeasible points carry None."""
    rows = []
    for gamma in gammas:
        h = entropy(gamma)
        n = math.floor(2 ** (h * s))
        if n < 1 or n > tables.nmax or not dp.is_solvable(n, s):
            rows.append(FGammaRow(gamma=gamma, h=h, n=n, f_value=None, gap=None))
            continue
        value = f_gamma(h, s, tables)
        rows.append(
            FGammaRow(gamma=gamma, h=h, n=n, f_value=value, gap=value - (gamma + h))
        )
    return rows


def min_ts(n: int, tables: dp.DpTables) -> TsRecord:
    """Exact minimum of F(n, S) * S over S, with the smallest minimizer.

    The scan starts at the least solvable budget and stops once it can prove
    no larger budget helps: either F has reached its floor of 2n - 1 (more
    pebbles cannot shrink it, so the product only grows), or the floor alone
    already prices every later candidate above the best found.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    if n > tables.nmax:
        raise TableRangeError(f"min_ts needs row n={n}; table stops at nmax={tables.nmax}")
    floor_f = 2 * n - 1
    s_start = (n - 1).bit_length() + 1
    best_product = None
    best_s = 0
    best_f = 0
    certified = False
    for s in range(s_start, tables.smax + 1):
        value = tables.f[n][s]
        if value is INFINITE:
            raise TableRangeError(f"F({n}, {s}) is infinite; solvability bound violated")
        product = _checked(value * s, f"F({n},{s}) * {s}")
        if best_product is None or product < best_product:
            best_product = product
            best_s = s
            best_f = value
        if value == floor_f or floor_f * (s + 1) >= best_product:
            certified = True
            break
    if not certified and tables.smax < n:
        raise TableRangeError(
            f"min_ts({n}) needs budgets beyond smax={tables.smax} to certify the minimum"
        )
    if n == 1:
        ratio = float("nan")
    else:
        ratio = math.log2(best_product / n) / (2.0 * math.sqrt(math.log2(n)))
    return TsRecord(n=n, best_s=best_s, best_f=best_f, product=best_product, ratio=ratio)


def min_ts_auto(n: int, *, cell_budget: int | None = None) -> TsRecord:
    """Build tables just large enough for an exact min_ts(n)."""
    budget = config.DEFAULT_CELL_BUDGET if cell_budget is None else cell_budget
    smax = min(n, max((n - 1).bit_length() + 9, 16))
    while True:
        tables = dp.build_table(n, smax, cell_budget=budget)
        try:
            return min_ts(n, tables)
        except TableRangeError:
            if smax >= n:
                raise
            smax = min(n, smax * 2)
