"""Command-line front end.

    heaviforge <subcommand> [args] [--T <real>] [--U <real>] [--eps <real>]
               [--tol <real>] [--snap-atol <real>] [--out <path>]
               [--format csv|svg]

Subcommands: eval, table, plot, primes, xiset, grandi.  Exit codes: 0 on
success, 1 on a verification mismatch, 2 on usage or parse errors.  CSV uses
comma delimiters, LF line ends, a mandatory header row, and 17 significant
digits for raw values so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from .piecewise import InvalidInterval, InvalidSpec
from .primes import PrecisionPlan, fes, pi_analytic, pi_sieve, plan_precision, sigma0_analytic, sigma0_oracle
from .quadrature import CutoffParams, QuadratureError
from .setexpr import SetExprError, evaluate
from .stepfun import Backend, StepKind, eval_c, eval_delta, eval_f, eval_q, eval_rt, eval_step, eval_u, snap
from .xisets import ChainResult, XiSet, _atom_key, format_finite_set, grandi_demo, membership

USAGE_ERROR = 2
MISMATCH_ERROR = 1

_FUNCTIONS = {
    "f": eval_f,
    "c": eval_c,
    "u": eval_u,
    "q": eval_q,
    "rt": eval_rt,
    "H1": lambda x, params, backend, tol: eval_step(StepKind.H1, x, params, backend, tol),
    "H2": lambda x, params, backend, tol: eval_step(StepKind.H2, x, params, backend, tol),
    "delta": eval_delta,
}


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _usage_fail(message: str) -> int:
    print(f"heaviforge: error: {message}", file=sys.stderr)
    return USAGE_ERROR


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--T", type=float, default=100.0, help="half-line cutoff (default 100)")
    common.add_argument("--U", type=float, default=None, help="indicator scale (default 128)")
    common.add_argument("--eps", type=float, default=None, help="tangent-interval margin before pi/2")
    common.add_argument("--tol", type=float, default=1e-9, help="quadrature tolerance (default 1e-9)")
    common.add_argument("--snap-atol", type=float, default=1e-6, help="snapping tolerance (default 1e-6)")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")
    common.add_argument("--format", choices=["csv", "svg"], default=None, help="output format (svg: plot only)")

    parser = argparse.ArgumentParser(prog="heaviforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one function at one point")
    p.add_argument("function", choices=sorted(_FUNCTIONS))
    p.add_argument("x", type=float)

    for name, help_text in (("table", "CSV table over a grid"), ("plot", "SVG polyline over a grid")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("function", choices=sorted(_FUNCTIONS))
        p.add_argument("start", type=float)
        p.add_argument("stop", type=float)
        p.add_argument("step", type=float)

    p = sub.add_parser("primes", parents=[common], help="divisor/prime chain vs. exact oracles")
    p.add_argument("n_max", type=int)

    p = sub.add_parser("xiset", parents=[common], help="evaluate a xi-set expression")
    p.add_argument("expr", nargs="+")

    p = sub.add_parser("grandi", parents=[common], help="alternating-series partial sums and Cesaro mean")
    p.add_argument("k", type=int)

    return parser


def _resolve_cutoffs(args) -> CutoffParams:
    if args.U is not None and args.eps is not None:
        raise ValueError("--U and --eps are two views of the same cutoff; give only one")
    return CutoffParams(half_line_T=args.T, tan_margin_eps=args.eps, indicator_scale_U=args.U)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)


def _grid(start: float, stop: float, step: float) -> list[float]:
    if start > stop:
        raise ValueError(f"grid start {start!r} exceeds stop {stop!r}")
    if step <= 0.0:
        raise ValueError(f"grid step must be positive, got {step!r}")
    if start == stop:
        return [start]
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + k * step for k in range(count)]


def _cutoff_summary(params: CutoffParams, tol: float, snap_atol: float) -> str:
    return (
        f"cutoffs T={params.half_line_T!r} eps={params.tan_margin_eps!r} "
        f"U={params.indicator_scale_U!r} tol={tol!r} snap_atol={snap_atol!r}"
    )


def _cmd_eval(args, params: CutoffParams) -> int:
    fn = _FUNCTIONS[args.function]
    raw = fn(args.x, params, Backend.CLOSED_FORM, args.tol)
    print(f"{args.function}({_fmt(args.x)}) raw={_fmt(raw)} snapped={_fmt(snap(raw, args.snap_atol))}")
    print(_cutoff_summary(params, args.tol, args.snap_atol))
    return 0


def _table_rows(args, params: CutoffParams) -> list[str]:
    fn = _FUNCTIONS[args.function]
    lines = ["x,raw,snapped,backend_delta"]
    for x in _grid(args.start, args.stop, args.step):
        raw = fn(x, params, Backend.CLOSED_FORM, args.tol)
        quad = fn(x, params, Backend.QUADRATURE, args.tol)
        snapped = snap(raw, args.snap_atol)
        lines.append(f"{_fmt(x)},{_fmt(raw)},{_fmt(snapped)},{_fmt(abs(quad - raw))}")
    return lines


def _cmd_table(args, params: CutoffParams) -> int:
    _emit("\n".join(_table_rows(args, params)) + "\n", args.out)
    return 0


def _render_svg(xs: list[float], ys: list[float], label: str) -> str:
    width, height, margin = 720.0, 480.0, 60.0
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0

    def px(x):
        return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin)

    def py(y):
        return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin)

    points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
        f'<line x1="{margin:.1f}" y1="{height - margin:.1f}" x2="{width - margin:.1f}" '
        f'y2="{height - margin:.1f}" stroke="black"/>',
        f'<line x1="{margin:.1f}" y1="{margin:.1f}" x2="{margin:.1f}" '
        f'y2="{height - margin:.1f}" stroke="black"/>',
        f'<text x="{margin:.1f}" y="{height - margin / 3:.1f}" font-size="12">{_fmt(x_lo)}</text>',
        f'<text x="{width - margin:.1f}" y="{height - margin / 3:.1f}" font-size="12" '
        f'text-anchor="end">{_fmt(x_hi)}</text>',
        f'<text x="{margin / 4:.1f}" y="{height - margin:.1f}" font-size="12">{_fmt(y_lo)}</text>',
        f'<text x="{margin / 4:.1f}" y="{margin:.1f}" font-size="12">{_fmt(y_hi)}</text>',
        f'<text x="{width / 2:.1f}" y="{margin / 2:.1f}" font-size="14" text-anchor="middle">{label}</text>',
        f'<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{points}"/>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


def _cmd_plot(args, params: CutoffParams) -> int:
    fn = _FUNCTIONS[args.function]
    xs = _grid(args.start, args.stop, args.step)
    ys = [fn(x, params, Backend.CLOSED_FORM, args.tol) for x in xs]
    if args.format == "csv":
        lines = ["x,raw"] + [f"{_fmt(x)},{_fmt(y)}" for x, y in zip(xs, ys)]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        label = f"{args.function}  T={_fmt(params.half_line_T)} U={_fmt(params.indicator_scale_U)}"
        _emit(_render_svg(xs, ys, label), args.out)
    return 0


def _cmd_primes(args, params_override_U: float | None) -> int:
    n_max = args.n_max
    if not 1 <= n_max <= 10_000:
        raise ValueError(f"n_max must lie in [1, 10000], got {n_max!r}")
    if params_override_U is not None:
        # explicit scale override, e.g. to explore how an inadequate plan fails
        plan = PrecisionPlan(n_max=n_max, indicator_scale_U=params_override_U, round_margin=0.25)
    else:
        plan = plan_precision(n_max)
    margin = plan.round_margin

    lines = ["n,sigma0_analytic,sigma0_exact,fes_snapped,pi_analytic,pi_sieve,match"]
    mismatches = 0
    for n in range(1, n_max + 1):
        sig = sigma0_analytic(n, plan)
        sig_exact = sigma0_oracle(n)
        fes_snapped = snap(fes(n, plan), margin)
        pi_raw = pi_analytic(float(n), plan)
        pi_exact = pi_sieve(float(n))
        ok = (
            round(sig) == sig_exact
            and fes_snapped == (1.0 if sig_exact == 2 else 0.0)
            and snap(pi_raw, margin) == pi_exact
        )
        if not ok:
            mismatches += 1
        lines.append(
            f"{n},{_fmt(sig)},{sig_exact},{_fmt(fes_snapped)},{_fmt(pi_raw)},{pi_exact},{int(ok)}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    print(f"primes n_max={n_max} U={_fmt(plan.indicator_scale_U)} mismatches={mismatches} of {n_max}",
          file=sys.stderr)
    return MISMATCH_ERROR if mismatches else 0


def _cmd_xiset(args) -> int:
    result = evaluate(" ".join(args.expr))
    if isinstance(result, ChainResult):
        print(f"result {format_finite_set(result.value)}")
        print(f"strategy {result.strategy.value}")
        print(f"groups {result.groups}")
        if result.dangling is None:
            print("dangling-tail none")
        else:
            print(f"dangling-tail {format_finite_set(result.dangling)}")
        return 0
    assert isinstance(result, XiSet)
    print(f"xi_class {result.xi_class}")
    print(f"components {result}")
    atoms = sorted(set().union(*result.components), key=_atom_key)
    for atom in atoms:
        report = membership(atom, result)
        indices = ",".join(str(i) for i in sorted(report.index_set))
        print(f"atom {atom}: mode={report.mode.value} T={{{indices}}}")
    return 0


def _cmd_grandi(args) -> int:
    if args.k < 1:
        raise ValueError(f"k must be >= 1, got {args.k!r}")
    sums, cesaro = grandi_demo(args.k)
    print("partial_sums " + ",".join(str(s) for s in sums))
    print(f"cesaro_mean {cesaro}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.format == "svg" and args.command != "plot":
        return _usage_fail("--format svg is only valid for the plot subcommand")

    try:
        if args.command in ("eval", "table", "plot"):
            params = _resolve_cutoffs(args)
            handler = {"eval": _cmd_eval, "table": _cmd_table, "plot": _cmd_plot}[args.command]
            return handler(args, params)
        if args.command == "primes":
            if args.U is not None and args.eps is not None:
                raise ValueError("--U and --eps are two views of the same cutoff; give only one")
            override = args.U
            if override is None and args.eps is not None:
                override = math.tan(math.pi / 2.0 - args.eps)
            return _cmd_primes(args, override)
        if args.command == "xiset":
            return _cmd_xiset(args)
        if args.command == "grandi":
            return _cmd_grandi(args)
    except (ValueError, InvalidSpec, InvalidInterval, SetExprError) as exc:
        return _usage_fail(str(exc))
    except QuadratureError as exc:
        print(f"heaviforge: quadrature failure: {exc}", file=sys.stderr)
        return MISMATCH_ERROR
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
