"""Complete (p, q)-elliptic integrals of the first and second kind.

Each integral has two independent evaluation routes that serve as mutual
checks: a hypergeometric series in k^q and a tanh-sinh quadrature of the
t-form integral over (0, 1).  The pair (K, E) satisfies a first-order
differential system in k, and a Legendre-type product relation ties the
(p, q) and (q, p) integrals together for p, q > 1.
"""

from __future__ import annotations

import math

from .gentrig import PQParams, pi_pq
from .numerics import (
    SERIES_ARG_MAX,
    EvalResult,
    HypSeriesSpec,
    _one_minus_pow,
    hyp2f1,
    integrate_singular,
    pochhammer,
)

__all__ = ["E_pq", "K_pq", "dE_dk", "dK_dk", "legendre_residual", "moment_sin_pq"]

_EPS = 2.220446049250313e-16


def _check_modulus(k: float) -> None:
    if not 0.0 <= k < 1.0:
        raise ValueError(f"modulus k must lie in [0, 1), got {k!r}")


def _series_result(params: PQParams, first_index: float, kq: float) -> EvalResult:
    half = 0.5 * pi_pq(params)
    r = hyp2f1(
        HypSeriesSpec(first_index, 1.0 / params.q, 1.0 / params.p_star + 1.0 / params.q, kq)
    )
    value = half * r.value
    return EvalResult(value, half * r.abs_err + 4.0 * _EPS * abs(value), "series")


def K_pq(params: PQParams, k: float, method: str = "auto", tol: float = 1e-12) -> EvalResult:
    """Complete (p, q)-elliptic integral of the first kind.

    Series route: (pi_pq/2) F(1/p*, 1/q; 1/p* + 1/q; k^q).  Quadrature route:
    integral_0^1 (1 - t^q)^(-1/p) (1 - k^q t^q)^(-1/p*) dt.  ``auto`` takes
    the series while k^q <= 0.99 and the integral beyond, where the series
    nears its logarithmic singularity.  K equals pi_pq/2 at k = 0 and grows
    without bound as k -> 1.
    """
    _check_modulus(k)
    kq = k ** params.q
    if method == "auto":
        method = "series" if kq <= SERIES_ARG_MAX else "quadrature"
    if method == "series":
        if kq > SERIES_ARG_MAX:
            raise ValueError(f"series route requires k^q <= {SERIES_ARG_MAX}, got {kq:g}")
        return _series_result(params, 1.0 / params.p_star, kq)
    if method == "quadrature":
        q = params.q
        neg_inv_p = -1.0 / params.p
        neg_inv_ps = -1.0 / params.p_star
        kc = 1.0 - k

        def integrand(t: float, tc: float) -> float:
            omt = _one_minus_pow(t, tc, q)
            omkt = _one_minus_pow(k * t, kc + k * tc, q)
            return omt**neg_inv_p * omkt**neg_inv_ps

        return integrate_singular(integrand, tol, complement=True)
    raise ValueError(f"unknown method {method!r}; expected auto, series, or quadrature")


def E_pq(params: PQParams, k: float, method: str = "auto", tol: float = 1e-12) -> EvalResult:
    """Complete (p, q)-elliptic integral of the second kind.

    Series route: (pi_pq/2) F(-1/p, 1/q; 1/p* + 1/q; k^q).  Quadrature route:
    integral_0^1 ((1 - k^q t^q) / (1 - t^q))^(1/p) dt.  E equals pi_pq/2 at
    k = 0 and tends to 1 as k -> 1.
    """
    _check_modulus(k)
    kq = k ** params.q
    if method == "auto":
        method = "series" if kq <= SERIES_ARG_MAX else "quadrature"
    if method == "series":
        if kq > SERIES_ARG_MAX:
            raise ValueError(f"series route requires k^q <= {SERIES_ARG_MAX}, got {kq:g}")
        return _series_result(params, -1.0 / params.p, kq)
    if method == "quadrature":
        q = params.q
        inv_p = 1.0 / params.p
        kc = 1.0 - k

        def integrand(t: float, tc: float) -> float:
            omt = _one_minus_pow(t, tc, q)
            omkt = _one_minus_pow(k * t, kc + k * tc, q)
            return omkt**inv_p * omt**-inv_p

        return integrate_singular(integrand, tol, complement=True)
    raise ValueError(f"unknown method {method!r}; expected auto, series, or quadrature")


def dK_dk(params: PQParams, k: float) -> float:
    """dK/dk = (E - (1 - k^q) K) / (k (1 - k^q)).

    The closed form has k in the denominator; at k = 0 the limit is 0
    provided q > 1, and the point is rejected otherwise.
    """
    _check_modulus(k)
    if k == 0.0:
        if params.q > 1.0:
            return 0.0
        raise ValueError("dK_dk at k = 0 requires q > 1")
    kq = k ** params.q
    kc = K_pq(params, k).value
    ec = E_pq(params, k).value
    return (ec - (1.0 - kq) * kc) / (k * (1.0 - kq))


def dE_dk(params: PQParams, k: float) -> float:
    """dE/dk = q (E - K) / (p k); negative on (0, 1) whenever p > 0."""
    _check_modulus(k)
    if k == 0.0:
        raise ValueError("dE_dk formula is singular at k = 0")
    kc = K_pq(params, k).value
    ec = E_pq(params, k).value
    return params.q * (ec - kc) / (params.p * k)


def legendre_residual(p: float, q: float, k: float) -> float:
    """Residual of the Legendre-type relation tying (p,q) to (q,p).

    Returns  p E_{p,q}(k^{1/q}) K_{q,p}(k^{1/p})
           - q K_{p,q}(k^{1/q}) E_{q,p}(k^{1/p})
           - (p - q) pi_{p,q} pi_{q,p} / 4,
    which vanishes identically for p, q in (1, inf) and k in [0, 1).
    """
    if not (p > 1.0 and q > 1.0 and math.isfinite(p) and math.isfinite(q)):
        raise ValueError(f"the relation requires p, q in (1, inf), got ({p!r}, {q!r})")
    _check_modulus(k)
    par_pq = PQParams(p, q)
    par_qp = PQParams(q, p)
    m_q = k ** (1.0 / q)
    m_p = k ** (1.0 / p)
    bracket = p * E_pq(par_pq, m_q).value * K_pq(par_qp, m_p).value - q * K_pq(
        par_pq, m_q
    ).value * E_pq(par_qp, m_p).value
    return bracket - 0.25 * (p - q) * pi_pq(par_pq) * pi_pq(par_qp)


def moment_sin_pq(params: PQParams, n: int) -> float:
    """integral_0^{pi_pq/2} sin_pq^{q n} theta dtheta in closed form.

    Substituting t = sin_pq^q theta turns the moment into a beta integral,
    giving (pi_pq/2) (1/q)_n / (1/p* + 1/q)_n.
    """
    if n != int(n) or n < 0:
        raise ValueError(f"moment order must be a nonnegative integer, got {n!r}")
    inv_q = 1.0 / params.q
    ratio = pochhammer(inv_q, int(n)) / pochhammer(1.0 / params.p_star + inv_q, int(n))
    return 0.5 * pi_pq(params) * ratio
