# Any finite piecewise definition collapses into one closed expression:
# gate each branch with step differences.  The gates form a partition of
# unity (they telescope to exactly 1), so away from the breakpoints the
# composition agrees with plain branch dispatch, and near a breakpoint it
# blends smoothly over a width ~ sqrt(log(2e9)/U).

import math

from heaviforge import (
    PiecewiseSpec,
    compose,
    default_cutoffs,
    dispatch,
    impulse,
    partition_terms,
    transition_width,
)

print("unit impulse I(x, 0, 2): the indicator of [0, 2)")
for x in (-1.0, 0.0, 1.0, 1.999, 2.0, 3.0):
    print(f"  I({x:>6}) = {impulse(x, 0.0, 2.0):.6g}")

spec = PiecewiseSpec(
    breakpoints=(0.0, 1.0),
    branches=(lambda x: x * x, lambda x: x + 3.0, math.sin),
)
fn = compose(spec)
params = default_cutoffs(spec)
print()
print(f"three-branch spec: x^2 below 0, x+3 on [0,1), sin from 1   (U = {params.indicator_scale_U:g})")
print(f"{'x':>6} {'composed':>14} {'dispatch':>14} {'|diff|':>10}")
for x in (-2.0, -0.5, 0.0, 0.5, 0.999, 1.0, 2.0):
    c, d = fn(x), dispatch(spec, x)
    print(f"{x:>6} {c:>14.8g} {d:>14.8g} {abs(c - d):>10.2e}")

print()
w = transition_width(params)
print(f"gate values at x = 0.5 (transition half-width here is {w:.3f})")
terms = partition_terms(spec, 0.5, params)
for label, t in zip(("below first", "[0, 1)", "above last"), terms):
    print(f"  {label:>12}: {t:.8g}")
print(f"  gates sum to {sum(terms)!r}")
