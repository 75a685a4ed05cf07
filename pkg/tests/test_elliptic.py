"""Complete (p, q)-elliptic integrals: classical degeneration against an AGM
oracle, series/quadrature duality, the derivative system, the Legendre-type
relation, and the sin_pq moment formula."""

import math

import pytest

from pqelliptic.elliptic import E_pq, K_pq, dE_dk, dK_dk, legendre_residual, moment_sin_pq
from pqelliptic.gentrig import PQParams, pi_pq
from pqelliptic.numerics import integrate_singular

DUALITY_PAIRS = (PQParams(2, 2), PQParams(3, 2), PQParams(2, 3), PQParams(1.5, 4))


def agm_KE(k):
    """Classical K and E via the arithmetic-geometric mean orbit."""
    a, b = 1.0, math.sqrt(1.0 - k * k)
    c = k
    s = 0.5 * c * c
    for n in range(1, 40):  # c may stall at the 1-ulp level, so cap the orbit
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        s += 2.0 ** (n - 1) * c * c
        if abs(c) < 1e-17:
            break
    K = math.pi / (2.0 * a)
    return K, K * (1.0 - s)


# ----------------------------------------------------------------- at k = 0


def test_k_zero_is_half_period():
    for par in DUALITY_PAIRS:
        half = 0.5 * pi_pq(par)
        for method in ("series", "quadrature"):
            assert abs(K_pq(par, 0.0, method).value - half) <= 1e-12
            assert abs(E_pq(par, 0.0, method).value - half) <= 1e-12


# ------------------------------------------------------ classical (2,2) case


def test_classical_against_agm_oracle():
    par = PQParams(2, 2)
    for i in range(10):
        k = i / 10.0
        K_exact, E_exact = agm_KE(k)
        for method in ("series", "quadrature"):
            assert abs(K_pq(par, k, method).value - K_exact) <= 1e-11
            assert abs(E_pq(par, k, method).value - E_exact) <= 1e-11


# ------------------------------------------------------------------- duality


def test_series_quadrature_duality():
    for par in DUALITY_PAIRS:
        for i in range(10):
            k = i / 10.0
            dk = abs(K_pq(par, k, "series").value - K_pq(par, k, "quadrature").value)
            de = abs(E_pq(par, k, "series").value - E_pq(par, k, "quadrature").value)
            assert dk <= 1e-10, (par.p, par.q, k)
            assert de <= 1e-10, (par.p, par.q, k)


def test_duality_negative_first_index():
    # params (p*, p) with p = 0.5, i.e. (-1, 0.5): the parameter pair behind
    # the mean family for p in (0, 1)
    par = PQParams(-1.0, 0.5)
    for k in (0.0, 0.3, 0.6, 0.9):
        dk = abs(K_pq(par, k, "series").value - K_pq(par, k, "quadrature").value)
        de = abs(E_pq(par, k, "series").value - E_pq(par, k, "quadrature").value)
        assert dk <= 1e-10
        assert de <= 1e-10


def test_auto_matches_explicit_methods():
    par = PQParams(3, 2)
    r = K_pq(par, 0.5)
    assert r.method == "series"
    assert r.value == K_pq(par, 0.5, "series").value
    r = K_pq(par, 0.9999)
    assert r.method == "quadrature"


def test_series_refuses_near_boundary():
    par = PQParams(2, 2)
    with pytest.raises(ValueError):
        K_pq(par, 0.9999, "series")


# ------------------------------------------------------- monotonicity in k


def test_K_increasing_E_decreasing():
    for par in DUALITY_PAIRS:
        ks = [K_pq(par, i / 10.0).value for i in range(10)]
        es = [E_pq(par, i / 10.0).value for i in range(10)]
        assert all(u < v for u, v in zip(ks, ks[1:])), (par.p, par.q)
        assert all(u > v for u, v in zip(es, es[1:])), (par.p, par.q)


def test_E_at_most_K():
    for par in DUALITY_PAIRS:
        assert K_pq(par, 0.0).value == E_pq(par, 0.0).value
        for i in range(1, 10):
            k = i / 10.0
            assert E_pq(par, k).value < K_pq(par, k).value


def test_K_grows_without_bound_and_E_tends_to_one():
    par = PQParams(2, 2)
    assert K_pq(par, 0.999).value > K_pq(par, 0.99).value > K_pq(par, 0.9).value
    assert abs(E_pq(par, 0.9999).value - 1.0) <= 5e-3


# ------------------------------------------------------- derivative system


def test_dK_matches_finite_difference():
    h = 1e-6
    for p, q in ((2, 2), (3, 2), (2, 3)):
        par = PQParams(p, q)
        for i in range(1, 10):
            k = i / 10.0
            fd = (K_pq(par, k + h).value - K_pq(par, k - h).value) / (2.0 * h)
            assert abs(dK_dk(par, k) - fd) <= 1e-5, (p, q, k)


def test_dE_matches_finite_difference():
    h = 1e-6
    for p, q in ((2, 2), (3, 2), (2, 3)):
        par = PQParams(p, q)
        for i in range(1, 10):
            k = i / 10.0
            fd = (E_pq(par, k + h).value - E_pq(par, k - h).value) / (2.0 * h)
            assert abs(dE_dk(par, k) - fd) <= 1e-5, (p, q, k)


def test_dK_limit_at_zero():
    assert dK_dk(PQParams(2, 2), 0.0) == 0.0
    assert dK_dk(PQParams(-2, 3), 0.0) == 0.0
    with pytest.raises(ValueError):
        dK_dk(PQParams(2, 0.5), 0.0)  # q <= 1: the limit is not defined


def test_dE_rejects_zero_and_is_negative():
    with pytest.raises(ValueError):
        dE_dk(PQParams(2, 2), 0.0)
    for par in (PQParams(2, 2), PQParams(2, 3)):
        for i in range(1, 10):
            assert dE_dk(par, i / 10.0) < 0.0


def test_dK_small_k_tends_to_zero():
    par = PQParams(2, 2)
    assert abs(dK_dk(par, 1e-4)) < 1e-3


# -------------------------------------------------- Legendre-type relation


def test_legendre_zero_for_equal_exponents():
    for k in (0.0, 0.3, 0.7):
        assert abs(legendre_residual(2.5, 2.5, k)) <= 1e-12


def test_legendre_grid():
    # 30 points across unequal and equal exponent pairs
    for p, q in ((2, 3), (3, 2), (1.5, 4), (4, 1.5), (2.5, 2.5), (2, 4)):
        for k in (0.0, 0.2, 0.5, 0.8, 0.95):
            assert abs(legendre_residual(p, q, k)) <= 1e-9, (p, q, k)


def test_legendre_at_zero_is_bracket_identity():
    # at k = 0 the bracket collapses to (p - q) pi_pq pi_qp / 4 exactly
    assert abs(legendre_residual(3, 2, 0.0)) <= 1e-12


def test_legendre_domain():
    for p, q in ((1.0, 2.0), (0.5, 2.0), (2.0, 1.0)):
        with pytest.raises(ValueError):
            legendre_residual(p, q, 0.5)
    with pytest.raises(ValueError):
        legendre_residual(2.0, 3.0, 1.0)


# -------------------------------------------------------------- moments


def test_moment_order_zero_is_half_period():
    for par in DUALITY_PAIRS:
        assert moment_sin_pq(par, 0) == 0.5 * pi_pq(par)


def test_moment_classical_sin_squared():
    # integral_0^{pi/2} sin^2 = pi/4
    assert abs(moment_sin_pq(PQParams(2, 2), 1) - math.pi / 4.0) <= 1e-13


def test_moments_match_beta_integral():
    for p, q in ((2, 2), (3, 2), (1.5, 4)):
        par = PQParams(p, q)
        inv_q, inv_p = 1.0 / q, 1.0 / p
        for n in range(6):
            expo = n + inv_q - 1.0

            def f(t, tc, expo=expo, inv_p=inv_p):
                return t**expo * tc**-inv_p

            oracle = inv_q * integrate_singular(f, 1e-12, complement=True).value
            assert abs(moment_sin_pq(par, n) - oracle) <= 1e-9, (p, q, n)


def test_moment_rejects_negative_order():
    with pytest.raises(ValueError):
        moment_sin_pq(PQParams(2, 2), -1)


# ------------------------------------------------------------- validation


def test_modulus_validation():
    par = PQParams(2, 2)
    for bad in (-0.1, 1.0, 1.5, math.nan):
        with pytest.raises(ValueError):
            K_pq(par, bad)
        with pytest.raises(ValueError):
            E_pq(par, bad)


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        K_pq(PQParams(2, 2), 0.5, "tables")
