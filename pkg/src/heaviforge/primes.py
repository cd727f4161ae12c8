"""Divisor counts, a prime indicator, and the prime-counting function built
from the step/indicator family, verified against exact combinatorial oracles.

The chain: sigma0(n) sums the zero indicator rt(sin(pi (n mod i) / i)) over
i = 1..n, so divisor terms contribute exactly 1 and the rest leak at most
e^{-U sin^2(pi/n_max)} each; fes(n) = rt(sigma0(n) - 2) flags the primes
(exactly two divisors); pi(x) accumulates fes(i) H1(x - i).

Truncating sigma0's sum at i = n is exact, not an approximation: no divisor
of n exceeds n.  Do NOT extend the sum numerically past n -- sin(pi n / i)
tends to 0 as i grows, so truncated-indicator leakage would diverge.  The
sine argument is always formed from the exact integer remainder n mod i,
because sin(pi k) for integer k is not 0 in floating point.

A :class:`PrecisionPlan` chooses the indicator scale U so that worst-case
leakage summed over a whole sigma0 evaluation stays below the rounding
margin; counts are then recovered by rounding to the nearest integer within
that margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .quadrature import CutoffParams
from .stepfun import StepKind, eval_rt, eval_step

__all__ = [
    "OutOfPlan",
    "PrecisionPlan",
    "plan_precision",
    "sigma0_analytic",
    "sigma0_oracle",
    "fes",
    "pi_analytic",
    "pi_sieve",
]


class OutOfPlan(ValueError):
    """Argument outside the range the precision plan was built for."""


@dataclass(frozen=True)
class PrecisionPlan:
    """Indicator scale valid for all n up to ``n_max``.

    Invariant: e^{-U sin^2(pi/n_max)} < round_margin / n_max, so the summed
    non-divisor leakage of any sigma0(n), n <= n_max, stays below the margin.
    """

    n_max: int
    indicator_scale_U: float
    round_margin: float

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max!r}")
        if not (0.0 < self.round_margin < 0.5):
            raise ValueError(f"round_margin must lie in (0, 0.5), got {self.round_margin!r}")
        if self.indicator_scale_U <= 0.0:
            raise ValueError(f"indicator_scale_U must be positive, got {self.indicator_scale_U!r}")


def plan_precision(n_max: int, round_margin: float = 0.25) -> PrecisionPlan:
    """Smallest power-of-two U satisfying the plan invariant.

    Powers of two keep plans reproducible across platforms.  Admissible
    scales start at 2: a scale of 1 would put the derived tangent margin at
    exactly pi/4, outside the open cutoff range.  For n_max = 1 there are no
    non-divisor terms, so that smallest admissible scale already works.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max!r}")
    if not (0.0 < round_margin < 0.5):
        raise ValueError(f"round_margin must lie in (0, 0.5), got {round_margin!r}")
    U = 2.0
    if n_max > 1:
        s = math.sin(math.pi / n_max) ** 2
        bound = round_margin / n_max
        while math.exp(-U * s) >= bound:
            U *= 2.0
    return PrecisionPlan(n_max=n_max, indicator_scale_U=U, round_margin=round_margin)


@lru_cache(maxsize=None)
def _cutoffs_for_scale(U: float) -> CutoffParams:
    return CutoffParams(indicator_scale_U=U)


def _check_n(n: int, plan: PrecisionPlan) -> None:
    if not 1 <= n <= plan.n_max:
        raise OutOfPlan(f"n={n!r} outside plan range [1, {plan.n_max}]")


@lru_cache(maxsize=None)
def sigma0_analytic(n: int, plan: PrecisionPlan) -> float:
    """Indicator-sum divisor count; within ``plan.round_margin`` of the truth."""
    _check_n(n, plan)
    params = _cutoffs_for_scale(plan.indicator_scale_U)
    total = 0.0
    for i in range(1, n + 1):
        r = n % i  # exact integer remainder: divisor terms are rt(0) = 1 exactly
        total += eval_rt(math.sin(math.pi * r / i), params)
    return total


def sigma0_oracle(n: int) -> int:
    """Exact divisor count by trial division."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n!r}")
    count = 0
    i = 1
    while i * i <= n:
        if n % i == 0:
            count += 1 if i * i == n else 2
        i += 1
    return count


@lru_cache(maxsize=None)
def fes(n: int, plan: PrecisionPlan) -> float:
    """Prime indicator rt(sigma0(n) - 2): near 1 iff n is prime.

    n = 1 has a single divisor, so fes(1) = rt(-1) ~ e^{-U}: 1 is classified
    composite, matching the two-divisor criterion.
    """
    _check_n(n, plan)
    params = _cutoffs_for_scale(plan.indicator_scale_U)
    return eval_rt(sigma0_analytic(n, plan) - 2.0, params)


def pi_analytic(x: float, plan: PrecisionPlan) -> float:
    """Prime count up to x as sum of fes(i) H1(x - i); rounds to the sieve value.

    The sum stops at min(floor(x) + 1, n_max): H1(x - i) vanishes for all
    later i, so the cap loses nothing while keeping every fes argument
    inside the plan.
    """
    if not (0.0 <= x <= plan.n_max):
        raise OutOfPlan(f"x={x!r} outside plan range [0, {plan.n_max}]")
    params = _cutoffs_for_scale(plan.indicator_scale_U)
    upper = min(int(math.floor(x)) + 1, plan.n_max)
    total = 0.0
    for i in range(1, upper + 1):
        total += fes(i, plan) * eval_step(StepKind.H1, x - i, params)
    return total


def pi_sieve(x: float) -> int:
    """Exact count of primes <= x by the sieve of Eratosthenes."""
    if x < 0.0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    limit = int(math.floor(x))
    if limit < 2:
        return 0
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return sum(flags)
