"""How fast does the sphere size grow?

Every f(n)^(1/n) bounds the growth rate from above because the counts are
submultiplicative.  Successive ratios and (f(2n)/f(n))^(1/n) estimate it.
"""
from decimal import Decimal

from thompson_growth.algorithm_b import growth_series
from thompson_growth.series_analysis import (
    amplitude_fit, check_submultiplicative, correction_ratio_trend, distance_to_lower_bound,
    doubling_estimates, fekete_bounds, lower_bound_rate, successive_ratios,
)

N = 240
f = growth_series(N).values
assert not check_submultiplicative(f)

bounds = {r.n: r.upper for r in fekete_bounds(f, precision=12)}
ratios = successive_ratios(f, precision=18)
doubling = doubling_estimates(f, precision=12)
golden = lower_bound_rate(30)

print(f"{'n':>4}  {'f(n)^(1/n)':<14} {'f(n)/f(n-1)':<20} {'doubling':<14}")
for n in (10, 20, 40, 80, 120, 160, 200, 240):
    print(f"{n:>4}  {bounds[n]!s:<14} {ratios[n]!s:<20} {doubling.get(n // 2, '')!s:<14}")

print()
print("best upper bound   ", min(bounds.values()))
print("(3 + sqrt 5) / 2   ", +golden)
print("last ratio misses it by", distance_to_lower_bound(ratios[N]))

# If f(n) ~ A * rate^n, dividing out the rate should level off.
fit = amplitude_fit(f, golden)
print()
for n, a in fit.trend[-4:]:
    print(f"f({n}) / rate^{n} = {a}")

# Multiplying by 1 - 3z + z^2 removes the dominant pole; what is left grows
# at a visibly smaller rate.
print()
for n, r in correction_ratio_trend(f, last=3):
    print(f"correction ratio at {n}: {r}")
assert min(bounds.values()) > Decimal("2.618")
