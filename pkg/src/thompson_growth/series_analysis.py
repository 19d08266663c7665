"""Growth-rate bounds and estimates from an exact growth series.

Element and geodesic counts are submultiplicative, so by Fekete's lemma every
f(n)^(1/n) is an upper bound on the growth rate.  Roots are taken on exact
integers and truncated, never rounded up past the true value: the returned
decimal d with q fractional digits satisfies d^n <= f(n) < (d + 10^-q)^n.
"""
from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Optional, Sequence

DEFAULT_PRECISION = 20
MAX_PRECISION = 5000


class PrecisionError(ValueError):
    pass


class NotSubmultiplicativeError(ValueError):
    pass


def iroot(x: int, n: int) -> int:
    """Largest integer r with r**n <= x (Newton iteration from above)."""
    if x < 0 or n < 1:
        raise ValueError("need x >= 0 and n >= 1")
    if x < 2 or n == 1:
        return x
    r = 1 << -(-x.bit_length() // n)  # 2^ceil(bits/n) >= true root
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def _check_precision(precision: int) -> None:
    if precision < 1:
        raise PrecisionError("precision must be >= 1")
    if precision > MAX_PRECISION:
        raise PrecisionError(f"precision {precision} exceeds the cap {MAX_PRECISION}")


def _root_of_fraction(num: int, den: int, n: int, precision: int) -> Decimal:
    """(num/den)^(1/n) truncated to ``precision`` significant digits."""
    _check_precision(precision)
    whole = iroot(num // den, n)
    int_digits = len(str(whole)) if whole else 1
    q = max(precision - int_digits, 0)
    r = iroot(num * 10 ** (q * n) // den, n)
    return Decimal(r).scaleb(-q)


def root_decimal(x: int, n: int, precision: int = DEFAULT_PRECISION) -> Decimal:
    return _root_of_fraction(x, 1, n, precision)


def fraction_decimal(x: Fraction, precision: int = DEFAULT_PRECISION) -> Decimal:
    """A nonnegative rational truncated to ``precision`` significant digits."""
    _check_precision(precision)
    whole = x.numerator // x.denominator
    int_digits = len(str(whole)) if whole else 1
    q = max(precision - int_digits, 0)
    return Decimal(x.numerator * 10 ** q // x.denominator).scaleb(-q)


def lower_bound_rate(precision: int = DEFAULT_PRECISION) -> Decimal:
    """(3 + sqrt 5) / 2 to ``precision`` significant digits."""
    with decimal.localcontext() as ctx:
        ctx.prec = precision + 5
        v = (3 + Decimal(5).sqrt()) / 2
        ctx.prec = precision
        return +v


def _values(f) -> list[int]:
    return list(getattr(f, "values", f))


def check_submultiplicative(f) -> list[tuple[int, int]]:
    """Index pairs (n, m), 1 <= n <= m, with f(n + m) > f(n) f(m)."""
    v = _values(f)
    bad = []
    for n in range(1, len(v)):
        for m in range(n, len(v) - n):
            if v[n + m] > v[n] * v[m]:
                bad.append((n, m))
    return bad


@dataclass(frozen=True)
class BoundsReport:
    n: int
    upper: Decimal
    lower: Decimal
    ratio: Optional[Decimal]
    doubling: Optional[Decimal]


def fekete_bounds(f, precision: int = DEFAULT_PRECISION, check: bool = True) -> list[BoundsReport]:
    """One report per n >= 1: truncated f(n)^(1/n), ratio, and doubling estimate."""
    _check_precision(precision)
    v = _values(f)
    if check and check_submultiplicative(v):
        raise NotSubmultiplicativeError("series is not submultiplicative")
    lower = lower_bound_rate(precision)
    out = []
    for n in range(1, len(v)):
        upper = root_decimal(v[n], n, precision)
        ratio = fraction_decimal(Fraction(v[n], v[n - 1]), precision) if v[n - 1] else None
        doubling = None
        if n % 2 == 0 and v[n // 2]:
            doubling = _root_of_fraction(v[n], v[n // 2], n // 2, precision)
        out.append(BoundsReport(n, upper, lower, ratio, doubling))
    return out


def successive_ratios(f, precision: int = DEFAULT_PRECISION) -> dict[int, Decimal]:
    """f(n) / f(n - 1) for n >= 1, truncated to ``precision`` significant digits."""
    v = _values(f)
    if len(v) < 2:
        raise ValueError("need at least two terms")
    return {n: fraction_decimal(Fraction(v[n], v[n - 1]), precision)
            for n in range(1, len(v)) if v[n - 1]}


def distance_to_lower_bound(x: Decimal, precision: int = DEFAULT_PRECISION) -> Decimal:
    with decimal.localcontext() as ctx:
        ctx.prec = precision + 10
        return abs(x - lower_bound_rate(precision + 10))


def doubling_estimates(f, precision: int = DEFAULT_PRECISION) -> dict[int, Decimal]:
    """(f(2n) / f(n))^(1/n) for every n with 2n in range."""
    v = _values(f)
    return {n: _root_of_fraction(v[2 * n], v[n], n, precision)
            for n in range(1, (len(v) - 1) // 2 + 1) if v[n]}


@dataclass(frozen=True)
class AmplitudeFit:
    """Estimate of A in f(n) ~ A * rate^n, read off the last available term."""

    amplitude: Decimal
    n: int
    trend: tuple[tuple[int, Decimal], ...]


def amplitude_fit(f, rate, precision: int = 30, min_terms: int = 50) -> AmplitudeFit:
    v = _values(f)
    if len(v) < min_terms:
        raise ValueError(f"need at least {min_terms} terms, got {len(v)}")
    with decimal.localcontext() as ctx:
        ctx.prec = precision + 10
        r = Decimal(rate) if not isinstance(rate, Decimal) else rate
        if r <= 1:
            raise ValueError("rate must exceed 1")
        trend = []
        for n in range(max(0, len(v) - 10), len(v)):
            trend.append((n, Decimal(v[n]) / r ** n))
        ctx.prec = precision
        trend = tuple((n, +a) for n, a in trend)
    n, amp = trend[-1]
    return AmplitudeFit(amp, n, trend)


def correction_coefficients(f) -> list[int]:
    """Coefficients of (1 - 3z + z^2) F(z), which removes the dominant pole."""
    v = _values(f)
    return [v[n] - 3 * (v[n - 1] if n >= 1 else 0) + (v[n - 2] if n >= 2 else 0)
            for n in range(len(v))]


def correction_ratio_trend(f, last: int = 10, precision: int = 12) -> list[tuple[int, Optional[Decimal]]]:
    """Ratios of consecutive correction coefficients; a diagnostic only."""
    c = correction_coefficients(f)
    out = []
    for n in range(max(1, len(c) - last), len(c)):
        if c[n - 1]:
            with decimal.localcontext() as ctx:
                ctx.prec = precision
                out.append((n, Decimal(c[n]) / Decimal(c[n - 1])))
        else:
            out.append((n, None))
    return out


def bounds_rows(f, precision: int = DEFAULT_PRECISION) -> list[dict]:
    """Rows for a printed table: n, f, upper bound, ratio, doubling."""
    v = _values(f)
    rows = [{"n": 0, "f": v[0], "fekete_upper": None, "ratio": None, "doubling": None}] if v else []
    for rep in fekete_bounds(v, precision):
        rows.append({"n": rep.n, "f": v[rep.n], "fekete_upper": rep.upper,
                     "ratio": rep.ratio, "doubling": rep.doubling})
    return rows


def as_sequence(f) -> Sequence[int]:
    return _values(f)
