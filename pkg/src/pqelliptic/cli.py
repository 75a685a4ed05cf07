"""Batch command-line front end.

Three subcommands: ``eval`` computes one function at one point, ``table``
sweeps up to two parameter grids into a CSV, and ``verify`` runs the named
verification suites.  Exit status: 0 on success, 1 on domain or verification
failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Callable, TextIO

import numpy as np

from .elliptic import E_pq, K_pq
from .gentrig import PQParams, cos_pq, pi_pq, sin_pq, tan_pq
from .means import mean_ag, mean_kp, mean_log, mean_mp, ordering
from .numerics import ConvergenceError, EvalResult, HypSeriesSpec, hyp2f1
from .suites import SUITE_NAMES, run_suite

__all__ = ["main"]

_EPS = 2.220446049250313e-16

# canonical flag order; grid axes iterate in this order, first axis outermost
_AXIS_FLAGS = ("p", "q", "k", "a", "b", "c", "x")


class _UsageError(Exception):
    """Bad invocation that argparse itself cannot catch (exit code 2)."""


@dataclass(frozen=True)
class GridSpec:
    """Affine grid start:stop:count, inclusive of both endpoints."""

    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        if not self.start < self.stop:
            raise _UsageError(f"grid needs start < stop, got {self.start}:{self.stop}")
        if self.count < 2:
            raise _UsageError(f"grid needs count >= 2, got {self.count}")

    def points(self) -> list[float]:
        return [float(v) for v in np.linspace(self.start, self.stop, self.count)]


def _need(args: dict, names: tuple[str, ...], fn: str) -> list[float]:
    vals = []
    for n in names:
        v = args.get(n)
        if v is None:
            raise _UsageError(f"--fn {fn} requires --{n}")
        vals.append(v)
    return vals


def _eval_pi(args: dict) -> EvalResult:
    p, q = _need(args, ("p", "q"), "pi_pq")
    v = pi_pq(PQParams(p, q))
    return EvalResult(v, 4.0 * _EPS * abs(v), "closed_form")


def _eval_trig(fn: Callable, name: str) -> Callable[[dict], EvalResult]:
    def handler(args: dict) -> EvalResult:
        p, q, x = _need(args, ("p", "q", "x"), name)
        v = fn(PQParams(p, q), x)
        return EvalResult(v, 1e-12, "quadrature")

    return handler


def _eval_elliptic(fn: Callable, name: str) -> Callable[[dict], EvalResult]:
    def handler(args: dict) -> EvalResult:
        p, q, k = _need(args, ("p", "q", "k"), name)
        kwargs = {"method": args["method"]} if args.get("method") else {}
        if args.get("tol") is not None:
            kwargs["tol"] = args["tol"]
        return fn(PQParams(p, q), k, **kwargs)

    return handler


def _eval_log(args: dict) -> EvalResult:
    a, b = _need(args, ("a", "b"), "L")
    v = mean_log(a, b)
    return EvalResult(v, 4.0 * _EPS * abs(v), "closed_form")


def _eval_ag(args: dict) -> EvalResult:
    a, b = _need(args, ("a", "b"), "AG")
    v = mean_ag(a, b)
    return EvalResult(v, 4.0 * _EPS * abs(v), "closed_form")


_METHOD_TAG = {
    "auto": "series",
    "hyp_base": "series",
    "hyp_quad": "series",
    "nakamura": "series",
    "elliptic": "quadrature",
    "integral": "quadrature",
    "closed": "closed_form",
}


def _eval_mp(args: dict) -> EvalResult:
    a, b, p = _need(args, ("a", "b", "p"), "Mp")
    method = args.get("method") or "auto"
    v = mean_mp(a, b, p, method=method)
    tag = "closed_form" if p in (0.0, 1.0) or a == b else _METHOD_TAG.get(method, "series")
    return EvalResult(v, 1e-11 * abs(v), tag)


def _eval_kp(args: dict) -> EvalResult:
    a, b, p = _need(args, ("a", "b", "p"), "Kp")
    method = args.get("method") or "closed"
    v = mean_kp(a, b, p, method=method)
    return EvalResult(v, 1e-11 * abs(v), _METHOD_TAG.get(method, "closed_form"))


def _eval_hyp(args: dict) -> EvalResult:
    a, b, c, x = _need(args, ("a", "b", "c", "x"), "hyp2f1")
    if args.get("tol") is not None:
        return hyp2f1(HypSeriesSpec(a, b, c, x, rel_tol=args["tol"]))
    return hyp2f1(HypSeriesSpec(a, b, c, x))


def _eval_ordering(args: dict) -> EvalResult:
    a = args.get("a", 1.0)
    b = args.get("b")
    if b is None:
        if args.get("x") is None:
            raise _UsageError("--fn ordering requires --x (or --a/--b) and --p")
        b = args["x"]
    (p,) = _need(args, ("p",), "ordering")
    v = ordering(a, b, p)
    return EvalResult(v.gap, 1e-11 * max(abs(v.gap), 1.0), "closed_form")


_EVAL_FNS: dict[str, Callable[[dict], EvalResult]] = {
    "pipq": _eval_pi,
    "sinpq": _eval_trig(sin_pq, "sin_pq"),
    "cospq": _eval_trig(cos_pq, "cos_pq"),
    "tanpq": _eval_trig(tan_pq, "tan_pq"),
    "kpq": _eval_elliptic(K_pq, "K_pq"),
    "epq": _eval_elliptic(E_pq, "E_pq"),
    "l": _eval_log,
    "ag": _eval_ag,
    "mp": _eval_mp,
    "kp": _eval_kp,
    "hyp2f1": _eval_hyp,
}

# ordering tabulates the signed gap M_p - K_p; it is table-only
_TABLE_FNS = dict(_EVAL_FNS, ordering=_eval_ordering)


def _canon(fn: str) -> str:
    return fn.lower().replace("_", "").replace("-", "")


def _parse_axis(flag: str, text: str) -> float | GridSpec:
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise _UsageError(f"--{flag}: grid syntax is start:stop:count, got {text!r}")
        try:
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError:
            raise _UsageError(f"--{flag}: cannot parse grid {text!r}") from None
        return GridSpec(start, stop, count)
    try:
        return float(text)
    except ValueError:
        raise _UsageError(f"--{flag}: cannot parse number {text!r}") from None


def _cmd_eval(ns: argparse.Namespace) -> int:
    fn = _canon(ns.fn)
    handler = _EVAL_FNS.get(fn)
    if handler is None:
        raise _UsageError(f"unknown function {ns.fn!r}; expected one of "
                          "pi_pq sin_pq cos_pq tan_pq K_pq E_pq L AG Mp Kp hyp2f1")
    args = {f: getattr(ns, f) for f in _AXIS_FLAGS}
    args["method"] = ns.method
    args["tol"] = ns.tol
    r = handler(args)
    print(f"{r.value:.15g}  abs_err={r.abs_err:.2e}  method={r.method}")
    return 0


def _cmd_table(ns: argparse.Namespace) -> int:
    fn = _canon(ns.fn)
    handler = _TABLE_FNS.get(fn)
    if handler is None:
        raise _UsageError(f"unknown function {ns.fn!r}")
    fixed: dict = {"method": ns.method, "tol": ns.tol}
    axes: list[tuple[str, list[float]]] = []
    for flag in _AXIS_FLAGS:
        text = getattr(ns, flag)
        if text is None:
            continue
        parsed = _parse_axis(flag, text)
        if isinstance(parsed, GridSpec):
            axes.append((flag, parsed.points()))
        else:
            fixed[flag] = parsed
    if not axes:
        raise _UsageError("table needs at least one grid axis (start:stop:count)")
    if len(axes) > 2:
        raise _UsageError(f"table supports at most 2 grid axes, got {len(axes)}")

    rows: list[list[float]] = []
    if len(axes) == 1:
        name0, pts0 = axes[0]
        for v0 in pts0:
            r = handler({**fixed, name0: v0})
            rows.append([v0, r.value])
        header = [name0, "value"]
    else:
        (name0, pts0), (name1, pts1) = axes
        for v0 in pts0:
            for v1 in pts1:
                r = handler({**fixed, name0: v0, name1: v1})
                rows.append([v0, v1, r.value])
        header = [name0, name1, "value"]

    lines = [",".join(header)]
    lines.extend(",".join(f"{v:.17g}" for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if ns.out:
        try:
            with open(ns.out, "w", encoding="ascii", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {ns.out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(ns: argparse.Namespace, err: TextIO) -> int:
    if ns.suite == "all":
        names = SUITE_NAMES
    elif ns.suite in SUITE_NAMES:
        names = (ns.suite,)
    else:
        raise _UsageError(
            f"unknown suite {ns.suite!r}; expected one of {', '.join(SUITE_NAMES)} or all"
        )
    all_passed = True
    for name in names:
        report, cases = run_suite(name)
        if ns.verbose:
            for c in cases:
                mark = "ok  " if c.passed else "FAIL"
                print(f"  {mark} {name}: {c.name}  residual={c.residual:.3e} "
                      f"(bound {c.bound:.1e})", file=err)
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{status} {report.suite}: {report.cases} cases, "
            f"{report.failures} failures, max residual {report.max_residual:.3e}, "
            f"{report.elapsed:.2f} s",
            file=err,
        )
        if not report.passed:
            all_passed = False
            failing = [c for c in cases if not c.passed][:10]
            for c in failing:
                print(f"  failing: {c.name}  residual={c.residual:.3e} "
                      f"(bound {c.bound:.1e})", file=err)
    return 0 if all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqelliptic",
        description="Evaluate, tabulate, and verify the (p,q)-elliptic "
        "integrals, generalized trigonometric functions, and mean families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate one function at one point")
    pe.add_argument("--fn", required=True,
                    help="pi_pq sin_pq cos_pq tan_pq K_pq E_pq L AG Mp Kp hyp2f1")
    for flag in _AXIS_FLAGS:
        pe.add_argument(f"--{flag}", type=float)
    pe.add_argument("--method", help="representation to use where applicable")
    pe.add_argument("--tol", type=float)

    pt = sub.add_parser("table", help="sweep up to two grids into a CSV")
    pt.add_argument("--fn", required=True, help="eval functions plus 'ordering'")
    for flag in _AXIS_FLAGS:
        pt.add_argument(f"--{flag}", help="number, or grid start:stop:count")
    pt.add_argument("--method")
    pt.add_argument("--tol", type=float)
    pt.add_argument("--out", help="CSV output path (default: stdout)")

    pv = sub.add_parser(
        "verify",
        help="run a named verification suite: " + ", ".join(SUITE_NAMES) + ", or all",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "suites and their built-in grids:\n"
            "  legendre       (p,q) in {(2,3),(3,2),(1.5,4),(4,1.5),(2.5,2.5)} x\n"
            "                 k in {0,0.2,0.5,0.8,0.95}, residual bound 1e-9\n"
            "  derivatives    (p,q) in {(2,2),(3,2),(2,3)} x k in {0.1..0.9},\n"
            "                 closed forms vs central differences, bound 1e-5\n"
            "  hypergeo       (p,q) in {(2,2),(3,2),(2,3),(1.5,4)} x k in {0..0.9},\n"
            "                 series vs quadrature for K and E, bound 1e-10\n"
            "  quadtransform  (a,b) in {(1/3,1/3),(1,1/3),(1/2,1/4)} x x in\n"
            "                 {0,0.2,0.5,0.8}, bound 1e-10\n"
            "  means-ordering p in {0.25,0.5,0.75,1.5,2,3,5} x x in {0.05..0.99},\n"
            "                 strict sign of M_p - K_p, plus the p in {0,1} anchors\n"
            "  means-bridge   M_2 = AG on x in {0.01,0.1..0.9} (1e-10) and the\n"
            "                 L-mean identities at p in {0,1,2} (1e-12)\n"
            "  moments        (p,q) in {(2,2),(3,2),(1.5,4)} x n in {0..5},\n"
            "                 closed form vs beta integral, bound 1e-9\n"
            "  nakamura       p in {0.5,1.5,3} x x in {0.2,0.5,0.8}, equal-truncation\n"
            "                 partial sums (1e-12) and full values (1e-10)\n"
        ),
    )
    pv.add_argument("suite", nargs="?", default="all")
    pv.add_argument("--verbose", action="store_true", help="print every case residual")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "eval":
            return _cmd_eval(ns)
        if ns.command == "table":
            return _cmd_table(ns)
        return _cmd_verify(ns, sys.stderr)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
