# Step functions without branching: the odd ramp f integrates a logistic
# density over [0, T]; shifting it by 1/2 gives the half-valued step H2, and
# adding half the zero indicator lifts the origin to 1 for H1.  Both a
# closed-form backend and an adaptive-quadrature backend evaluate the same
# truncated integrals, so each row below also reports how far apart the two
# backends land.

from heaviforge import Backend, CutoffParams, StepKind, eval_f, eval_rt, eval_step, snap

params = CutoffParams()  # T = 100, U = 128

print("odd ramp f and zero indicator rt at the three sign regimes")
print(f"{'x':>6} {'f(x)':>12} {'rt(x)':>12}")
for x in (-2.0, -0.5, 0.0, 0.5, 2.0):
    print(f"{x:>6} {eval_f(x, params):>12.6g} {eval_rt(x, params):>12.6g}")

print()
print("the two step conventions, raw and snapped, plus backend spread")
print(f"{'x':>6} {'H1 raw':>22} {'H1 snap':>8} {'H2 raw':>22} {'H2 snap':>8} {'|quad-closed|':>14}")
for x in (-1.0, -0.01, 0.0, 0.01, 1.0):
    h1 = eval_step(StepKind.H1, x, params)
    h2 = eval_step(StepKind.H2, x, params)
    h1q = eval_step(StepKind.H1, x, params, Backend.QUADRATURE)
    print(f"{x:>6} {h1:>22.17g} {snap(h1, 1e-6):>8} {h2:>22.17g} {snap(h2, 1e-6):>8} {abs(h1 - h1q):>14.3g}")

# The truncation error of the step against its discrete limit decays like a
# logistic tail in U|x| plus a Gaussian in U x^2, so doubling the scale
# tightens the transition band:
print()
print("convergence toward the discrete step at x = 0.15 as the scale doubles")
for U in (25.0, 50.0, 100.0, 200.0):
    dev = abs(eval_step(StepKind.H1, 0.15, CutoffParams(indicator_scale_U=U)) - 1.0)
    print(f"  U = {U:>5g}   |H1(0.15) - 1| = {dev:.6g}")
