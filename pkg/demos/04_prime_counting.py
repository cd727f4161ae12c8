# Counting divisors analytically: the zero indicator applied to
# sin(pi (n mod i) / i) is exactly 1 on divisors and nearly 0 elsewhere, so
# summing it counts divisors to within a planned margin.  Feeding that count
# through the indicator again flags primes, and gating prime flags with
# steps accumulates the prime-counting function -- all checked against trial
# division and a sieve.

from heaviforge import (
    fes,
    pi_analytic,
    pi_sieve,
    plan_precision,
    sigma0_analytic,
    sigma0_oracle,
    snap,
)

plan = plan_precision(200)
print(f"plan for n <= {plan.n_max}: indicator scale U = {plan.indicator_scale_U:g}, "
      f"rounding margin {plan.round_margin}")

print()
print(f"{'n':>4} {'sigma0 analytic':>18} {'exact':>6} {'fes':>10} {'prime?':>7}")
for n in (1, 2, 6, 7, 12, 97, 199, 200):
    sig = sigma0_analytic(n, plan)
    f_ = fes(n, plan)
    print(f"{n:>4} {sig:>18.12g} {sigma0_oracle(n):>6} {f_:>10.6f} "
          f"{'yes' if snap(f_, plan.round_margin) == 1.0 else 'no':>7}")

print()
print("prime-counting function against the sieve, including half-integer points")
print(f"{'x':>6} {'analytic':>20} {'snapped':>8} {'sieve':>6}")
for x in (1.0, 2.0, 2.5, 10.0, 25.5, 100.0, 200.0):
    raw = pi_analytic(x, plan)
    print(f"{x:>6} {raw:>20.14g} {snap(raw, plan.round_margin):>8g} {pi_sieve(x):>6}")

mismatches = sum(
    snap(pi_analytic(x / 2.0, plan), plan.round_margin) != pi_sieve(x / 2.0)
    for x in range(2, 401)
)
print(f"\nmismatches over x = 1, 1.5, ..., 200: {mismatches}")
