"""The interpolating mean family M_p and the power-difference means K_p.

M_p is defined through a normalized half-line integral and recovers the
geometric mean at p = 0, the logarithmic mean at p = 1 and the
arithmetic-geometric mean at p = 2.  Both 1/M_p and 1/K_p admit
hypergeometric series in 1 - x^p, and each of those has a second series
produced by the quadratic transformation

    F(a, b; 2a; z) = (1 - z/2)^(-b) F(b/2, (b+1)/2; a + 1/2; (z/(2-z))^2).

Comparing the third parameters of the transformed series decides the strict
ordering between M_p and K_p on either side of p = 1.

Every representation computes the reciprocal 1/mean(1, x) on the normalized
pair first and rescales at the very end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import K_pq
from .gentrig import PQParams, pi_pq
from .numerics import (
    SERIES_ARG_MAX,
    HypSeriesSpec,
    beta,
    hyp2f1,
    integrate_halfline,
    integrate_singular,
)

__all__ = [
    "MeanOrdering",
    "c_p",
    "mean_ag",
    "mean_kp",
    "mean_log",
    "mean_mp",
    "ordering",
    "quad_transform_check",
]

# p values this close to a removable point take the stated limit form
_LIMIT_TOL = 1e-8

_MP_METHODS = ("auto", "elliptic", "hyp_base", "hyp_quad", "integral", "nakamura")
_KP_METHODS = ("closed", "integral", "hyp_base", "hyp_quad")


def _check_pair(a: float, b: float) -> None:
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"means require a positive finite pair, got ({a!r}, {b!r})")


def _normalized(a: float, b: float) -> tuple[float, float]:
    """Scale and ratio (scale, x) with x = min/max in (0, 1]."""
    scale = max(a, b)
    x = min(a, b) / scale
    if x == 0.0:
        raise ValueError(f"pair ratio min/max underflows to zero for ({a!r}, {b!r})")
    return scale, x


def mean_log(a: float, b: float) -> float:
    """Logarithmic mean (a - b) / (ln a - ln b), equal to a when a = b.

    Pairs within 1e-12 relative distance are treated as equal; elsewhere the
    quotient is computed through log1p of the relative difference, which
    keeps it stable for nearby arguments.
    """
    _check_pair(a, b)
    if abs(a - b) <= 1e-12 * max(a, b):
        return a
    return (a - b) / math.log1p((a - b) / b)


def mean_ag(a: float, b: float) -> float:
    """Arithmetic-geometric mean: the common limit of the coupled iteration
    a' = (a+b)/2, b' = sqrt(ab)."""
    _check_pair(a, b)
    while abs(a - b) > 1e-15 * a:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def c_p(p: float) -> float:
    """Normalizing constant of M_p: 1/c_p = integral_0^inf (1+t^p)^(-2/p) dt.

    The integral equals pi_{p*,p}/2 = (1/p) B(1/p, 1/p), so c_p is simply
    p / B(1/p, 1/p); the formula is continuous through p = 1 where it gives
    exactly 1.
    """
    if not (p > 0.0 and math.isfinite(p)):
        raise ValueError(f"c_p requires p > 0, got {p!r}")
    return p / beta(1.0 / p, 1.0 / p)


def _one_minus_xp(x: float, p: float) -> float:
    """1 - x^p without cancellation for x near 1."""
    return -math.expm1(p * math.log(x))


def _recip_mp_integral(x: float, p: float, tol: float) -> float:
    """1/M_p(1, x) as c_p times the half-line integral of
    ((t^p + 1)(t^p + x^p))^(-1/p)."""
    xp = x**p
    inv_p = 1.0 / p

    def f(t: float) -> float:
        if t <= 1.0:
            tp = t**p
            return ((tp + 1.0) * (tp + xp)) ** -inv_p
        # fold large t through s = 1/t to keep t^p from overflowing
        s = 1.0 / t
        sp = s**p
        return s * s * ((1.0 + sp) * (1.0 + xp * sp)) ** -inv_p

    return c_p(p) * integrate_halfline(f, tol).value


def _recip_mp_nakamura(z: float, p: float) -> float:
    """1/M_p(1, x) summed from the product-form series in z = 1 - x^p:
    sum_k [ prod_{i<k} (1/p + i)^2 / (2/p + i) ] z^k / k!."""
    inv_p = 1.0 / p
    two_inv_p = 2.0 / p
    total = 1.0
    term = 1.0
    small = 0
    for k in range(1_000_000):
        ratio = (inv_p + k) * (inv_p + k) / ((two_inv_p + k) * (k + 1.0))
        term *= ratio * z
        if abs(term) <= 1e-14 * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
        total += term
    raise RuntimeError("unreachable: series argument is below the fallback threshold")


def _recip_mp(x: float, p: float, method: str, tol: float) -> float:
    arg = _one_minus_xp(x, p)
    if method == "auto":
        if arg <= 0.9:
            method = "hyp_base"
        elif (arg / (2.0 - arg)) ** 2 <= SERIES_ARG_MAX:
            method = "hyp_quad"
        else:
            method = "integral"
    if method == "hyp_base":
        if arg > SERIES_ARG_MAX:
            return _recip_mp_integral(x, p, tol)
        return hyp2f1(HypSeriesSpec(1.0 / p, 1.0 / p, 2.0 / p, arg)).value
    if method == "hyp_quad":
        y = (arg / (2.0 - arg)) ** 2
        if y > SERIES_ARG_MAX:
            return _recip_mp_integral(x, p, tol)
        pref = (0.5 * (2.0 - arg)) ** (-1.0 / p)
        half_ip = 0.5 / p
        return pref * hyp2f1(HypSeriesSpec(half_ip, half_ip + 0.5, 1.0 / p + 0.5, y)).value
    if method == "elliptic":
        par = PQParams(p / (p - 1.0), p)
        k = arg ** (1.0 / p)
        return 2.0 / pi_pq(par) * K_pq(par, k, tol=tol).value
    if method == "integral":
        return _recip_mp_integral(x, p, tol)
    if method == "nakamura":
        if arg > SERIES_ARG_MAX:
            return _recip_mp_integral(x, p, tol)
        return _recip_mp_nakamura(arg, p)
    raise ValueError(f"unknown method {method!r}; expected one of {_MP_METHODS}")


def mean_mp(a: float, b: float, p: float, method: str = "auto", tol: float = 1e-12) -> float:
    """Interpolating mean M_p for p >= 0.

    p = 0 gives sqrt(ab) and p = 1 the logarithmic mean, both as stated
    limits; elsewhere the pair is normalized to (1, x), the reciprocal
    1/M_p(1, x) is evaluated by the selected representation and the result is
    rescaled.  Series representations whose argument exceeds 0.99 fall back
    to the half-line integral.
    """
    _check_pair(a, b)
    if method not in _MP_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {_MP_METHODS}")
    if not p >= 0.0:
        raise ValueError(f"mean_mp requires p >= 0, got {p!r}")
    if a == b:
        return a  # exact fixed point for every p, no representation evaluated
    if p <= _LIMIT_TOL:
        return math.sqrt(a * b)
    if p == 1.0:
        return mean_log(a, b)
    scale, x = _normalized(a, b)
    if x == 1.0:  # distinct pair whose ratio still rounds to 1
        return scale
    return scale / _recip_mp(x, p, method, tol)


def _recip_kp_integral(x: float, p: float, tol: float) -> float:
    """1/K_p(1, x) = integral_0^1 ((1-s) + x^p s)^(-1/p) ds."""
    xp = x**p
    neg_inv_p = -1.0 / p

    def f(s: float, sc: float) -> float:
        return (sc + xp * s) ** neg_inv_p

    return integrate_singular(f, tol, complement=True).value


def mean_kp(a: float, b: float, p: float, method: str = "closed", tol: float = 1e-12) -> float:
    """Power-difference mean K_p = ((p-1)/p) (a^p - b^p) / (a^(p-1) - b^(p-1)).

    The closed form is valid for every real p, with the stated limits
    K_0 = ab/L(a, b) and K_1 = L(a, b) taking over within 1e-8 of the
    removable points.  The integral and hypergeometric representations
    require p > 0.
    """
    _check_pair(a, b)
    if method not in _KP_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {_KP_METHODS}")
    if method != "closed" and not p > 0.0:
        raise ValueError(f"the {method} representation requires p > 0, got {p!r}")
    if a == b:
        return a  # exact fixed point for every p, no representation evaluated
    if abs(p) <= _LIMIT_TOL:
        return a * b / mean_log(a, b)
    if abs(p - 1.0) <= _LIMIT_TOL:
        return mean_log(a, b)
    scale, x = _normalized(a, b)
    if x == 1.0:  # distinct pair whose ratio still rounds to 1
        return scale
    if method == "closed":
        num = _one_minus_xp(x, p)
        den = _one_minus_xp(x, p - 1.0)
        return scale * ((p - 1.0) / p) * (num / den)
    arg = _one_minus_xp(x, p)
    if method == "hyp_base":
        if arg > SERIES_ARG_MAX:
            recip = _recip_kp_integral(x, p, tol)
        else:
            recip = hyp2f1(HypSeriesSpec(1.0, 1.0 / p, 2.0, arg)).value
    elif method == "hyp_quad":
        y = (arg / (2.0 - arg)) ** 2
        if y > SERIES_ARG_MAX:
            recip = _recip_kp_integral(x, p, tol)
        else:
            pref = (0.5 * (2.0 - arg)) ** (-1.0 / p)
            half_ip = 0.5 / p
            recip = pref * hyp2f1(HypSeriesSpec(half_ip, half_ip + 0.5, 1.5, y)).value
    else:
        recip = _recip_kp_integral(x, p, tol)
    return scale / recip


def quad_transform_check(a: float, b: float, x: float) -> float:
    """Absolute residual of the quadratic transformation at (a, b, x):
    |F(a, b; 2a; x) - (1 - x/2)^(-b) F(b/2, (b+1)/2; a + 1/2; (x/(2-x))^2)|."""
    lhs = hyp2f1(HypSeriesSpec(a, b, 2.0 * a, x)).value
    y = (x / (2.0 - x)) ** 2
    rhs = (1.0 - 0.5 * x) ** (-b) * hyp2f1(
        HypSeriesSpec(0.5 * b, 0.5 * (b + 1.0), a + 0.5, y)
    ).value
    return abs(lhs - rhs)


@dataclass(frozen=True)
class MeanOrdering:
    """Sign verdict for M_p versus K_p on one pair, with the raw gap M_p - K_p."""

    verdict: str  # "Mp_greater" | "equal" | "Kp_greater"
    p: float
    a: float
    b: float
    gap: float


def ordering(a: float, b: float, p: float) -> MeanOrdering:
    """Compare M_p(a, b) with K_p(a, b).

    For distinct arguments the verdict is strict: M_p wins for 0 <= p < 1,
    the two agree at p = 1, and K_p wins for p > 1.  Gaps within
    1e-12 * max(a, b) are reported as equal since both means are computed to
    roughly that accuracy.
    """
    _check_pair(a, b)
    if not p >= 0.0:
        raise ValueError(f"ordering requires p >= 0, got {p!r}")
    if a == b:
        return MeanOrdering("equal", p, a, b, 0.0)
    gap = mean_mp(a, b, p) - mean_kp(a, b, p)
    tol = 1e-12 * max(a, b)
    if gap > tol:
        verdict = "Mp_greater"
    elif gap < -tol:
        verdict = "Kp_greater"
    else:
        verdict = "equal"
    return MeanOrdering(verdict, p, a, b, gap)
