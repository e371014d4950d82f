"""Special-function layer: series/product oracles and identities."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xxz_overlap.errors import DomainError, PoleProximityError
from xxz_overlap.specialfns import (
    Nome,
    TruncationPolicy,
    fn_g,
    fn_g_prime,
    fn_p,
    fn_p_prime,
    fn_theta,
    fn_theta_prime,
    kernel_K,
    kernel_t,
    qpoch,
    qpoch2,
    theta,
    theta1_prime0,
    varphi,
)
from xxz_overlap.model import boundary_param

NOME15 = Nome.from_zeta(1.5)


# ─────────────────────────────────────────────────────────────────────
# Theta functions
# ─────────────────────────────────────────────────────────────────────

def brute_theta(i, lam, q, terms=200):
    """Direct series sum, the independent oracle."""
    total = 0j
    if i == 1:
        for n in range(terms):
            total += 2 * (-1) ** n * q ** ((n + 0.5) ** 2) * cmath.sin((2 * n + 1) * lam)
    elif i == 2:
        for n in range(terms):
            total += 2 * q ** ((n + 0.5) ** 2) * cmath.cos((2 * n + 1) * lam)
    elif i == 3:
        total = 1 + 0j
        for n in range(1, terms):
            total += 2 * q ** (n * n) * cmath.cos(2 * n * lam)
    else:
        total = 1 + 0j
        for n in range(1, terms):
            total += 2 * (-1) ** n * q ** (n * n) * cmath.cos(2 * n * lam)
    return total


def test_theta1_odd_at_zero():
    assert theta(1, 0.0, Nome.from_q(0.3)) == 0


def test_theta1_quasi_periodicity():
    nome = Nome.from_q(0.22)
    lam = 0.37 + 0.1j
    assert abs(theta(1, lam + math.pi, nome) + theta(1, lam, nome)) < 1e-13
    assert abs(theta(4, lam + math.pi, nome) - theta(4, lam, nome)) < 1e-13


def test_theta3_vs_brute_series():
    val = theta(3, 0.5, NOME15)
    ref = brute_theta(3, 0.5, NOME15.q)
    assert abs(val - ref) < 1e-14


@pytest.mark.parametrize("i,parity", [(1, -1), (2, 1), (3, 1), (4, 1)])
def test_theta_parity_grid(i, parity):
    rng = np.random.default_rng(0)
    for _ in range(20):
        lam = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.2, 1.2))
        assert abs(theta(i, -lam, NOME15) - parity * theta(i, lam, NOME15)) < 1e-13


def test_theta1_prime0_product_identity():
    # theta1'(0) = 2 q^{1/4} prod (1-q^{2n})^3
    q = NOME15.q
    prod = 2 * q ** 0.25
    for n in range(1, 200):
        prod *= (1 - q ** (2 * n)) ** 3
    assert abs(theta1_prime0(NOME15) - prod) < 1e-14


def test_theta_rejects_bad_nome_and_index():
    with pytest.raises(DomainError):
        Nome.from_q(1.2)
    with pytest.raises(DomainError):
        theta(5, 0.1, NOME15)


def test_theta_deterministic():
    vals = {theta(3, 0.7 + 0.2j, NOME15) for _ in range(5)}
    assert len(vals) == 1


# ─────────────────────────────────────────────────────────────────────
# q-Pochhammer symbols
# ─────────────────────────────────────────────────────────────────────

def test_qpoch_empty_product():
    assert qpoch(0.0, 0.5) == 1.0


def test_qpoch_vs_direct_product():
    ref = 1.0
    for n in range(60):
        ref *= 1 - 0.5 * 0.25 ** n
    assert abs(qpoch(0.5, 0.25) - ref) < 1e-15


@settings(max_examples=60, deadline=None)
@given(st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False),
       st.floats(min_value=0.05, max_value=0.9))
def test_qpoch_recursion(x, alpha):
    lhs = qpoch(x, alpha)
    rhs = (1 - x) * qpoch(x * alpha, alpha)
    assert abs(lhs - rhs) <= 1e-13 * max(1.0, abs(lhs))


def test_qpoch_domain_error():
    with pytest.raises(DomainError):
        qpoch(0.3, 1.0)


def test_qpoch2_trivial_and_symmetry():
    assert qpoch2(0.0, 0.5, 0.5) == 1.0
    a = qpoch2(0.3, 0.2, 0.5)
    b = qpoch2(0.3, 0.5, 0.2)
    assert abs(a - b) < 1e-14


def test_qpoch2_vs_double_product():
    ref = 1.0
    for n1 in range(50):
        for n2 in range(50):
            ref *= 1 - 0.1 * 0.3 ** n1 * 0.3 ** n2
    assert abs(qpoch2(0.1, 0.3, 0.3) - ref) < 1e-14


def test_qpoch2_factorization_either_index():
    # expanding over n1 first or n2 first agrees
    x, q1, q2 = 0.25 + 0.1j, 0.35, 0.45
    via_q1 = 1.0 + 0j
    z = complex(x)
    for _ in range(120):
        via_q1 *= qpoch(z, q2)
        z *= q1
        if abs(z) < 1e-17:
            break
    assert abs(qpoch2(x, q1, q2) - via_q1) < 1e-13


# ─────────────────────────────────────────────────────────────────────
# Regularised theta
# ─────────────────────────────────────────────────────────────────────

def test_varphi_zero_limit_equals_theta1_prime():
    assert abs(varphi(0.0, NOME15) - theta1_prime0(NOME15)) < 1e-13


def test_varphi_times_sin_is_theta1():
    nome = Nome.from_q(0.25)
    lam = 0.8
    assert abs(varphi(lam, nome) * math.sin(lam) - theta(1, lam, nome)) < 1e-13


def test_varphi_vs_truncated_product():
    nome = Nome.from_zeta(1.8)
    lam = 0.3 + 0.2j
    q = nome.q
    ref = 2 * q ** 0.25
    for n in range(1, 100):
        ref *= (1 - q ** (2 * n) * cmath.exp(2j * lam))
        ref *= (1 - q ** (2 * n) * cmath.exp(-2j * lam))
        ref *= (1 - q ** (2 * n))
    assert abs(varphi(lam, nome) - ref) < 1e-13


def test_varphi_strip_domain():
    with pytest.raises(DomainError):
        varphi(0.1 + 2.0j, NOME15)


# ─────────────────────────────────────────────────────────────────────
# Kernels
# ─────────────────────────────────────────────────────────────────────

def test_kernel_identity():
    lam, zeta = 0.4, 1.5
    lhs = kernel_K(lam, zeta)
    rhs = (kernel_t(lam, zeta) + kernel_t(-lam, zeta)) / (2 * math.pi)
    assert abs(lhs - rhs) < 1e-13


def test_kernel_K_even():
    assert abs(kernel_K(-0.7, 1.2) - kernel_K(0.7, 1.2)) < 1e-14


def test_kernel_t_two_arrangements():
    # sinh z / (sin nu sin(nu - iz)) == -i [cot(nu - iz) - cot(nu)]
    nu, zeta = 0.5, 1.5
    direct = kernel_t(nu, zeta)
    alt = -1j * (cmath.cos(nu - 1j * zeta) / cmath.sin(nu - 1j * zeta)
                 - cmath.cos(nu) / cmath.sin(nu))
    assert abs(direct - alt) < 1e-13


def test_kernel_pole_guard():
    with pytest.raises(PoleProximityError):
        kernel_t(0.0, 1.5)


def test_kernel_K_grid_identity():
    rng = np.random.default_rng(1)
    for _ in range(15):
        lam = rng.uniform(0.05, 1.5)
        zeta = rng.uniform(1.1, 2.0)
        gap = kernel_K(lam, zeta) - (kernel_t(lam, zeta) + kernel_t(-lam, zeta)) / (2 * math.pi)
        assert abs(gap) < 1e-12


# ─────────────────────────────────────────────────────────────────────
# Phases p, theta, g
# ─────────────────────────────────────────────────────────────────────

def test_fn_theta_zero():
    assert fn_theta(0.0, 1.5) == 0.0


def test_fn_p_derivative_matches_kernel():
    zeta, lam, h = 1.5, 0.3, 1e-6
    fd = (fn_p(lam + h, zeta) - fn_p(lam - h, zeta)) / (2 * h)
    an = fn_p_prime(lam, zeta)
    assert abs(fd - an) / abs(an) < 1e-8
    assert abs(an - kernel_t(lam + 0.5j * zeta, zeta)) < 1e-15


def test_fn_theta_derivative_matches_kernel():
    zeta, lam, h = 1.2, 0.45, 1e-6
    fd = (fn_theta(lam + h, zeta) - fn_theta(lam - h, zeta)) / (2 * h)
    assert abs(fd - fn_theta_prime(lam, zeta)) < 1e-7
    assert abs(fn_theta_prime(lam, zeta) + 2 * math.pi * kernel_K(lam, zeta)) < 1e-14


def test_phase_oddness_and_winding():
    zeta = 1.5
    for x in (0.2, 0.6, 1.1):
        assert abs(fn_p(-x, zeta) + fn_p(x, zeta)) < 1e-13
        assert abs(fn_theta(-x, zeta) + fn_theta(x, zeta)) < 1e-13
    assert abs(fn_p(0.3 + math.pi, zeta) - fn_p(0.3, zeta) - 2 * math.pi) < 1e-12
    assert abs(fn_theta(0.3 + math.pi, zeta) - fn_theta(0.3, zeta) + 2 * math.pi) < 1e-12


def _g_branch_tracked(lam, xi_minus, xi_plus, zeta, steps=4000):
    """Independent oracle: accumulate the phase of the defining product
    continuously along the real axis from 0, with explicit unwinding."""
    def raw(x):
        val = 1 + 0j
        for xi in (xi_minus, xi_plus):
            val *= cmath.sin(x - 1j * xi - 0.5j * zeta) / cmath.sin(x + 1j * xi + 0.5j * zeta)
        return val
    total = 0.0
    prev = cmath.phase(raw(0.0))
    acc = 0.0
    for k in range(1, steps + 1):
        x = lam * k / steps
        cur = cmath.phase(raw(x))
        d = cur - prev
        if d > math.pi:
            d -= 2 * math.pi
        elif d < -math.pi:
            d += 2 * math.pi
        acc += d
        prev = cur
    # g = i log(prod): continuous value minus the (0-point) phase offset
    total = -(acc)
    return total


def test_fn_g_branch_tracked_oracle():
    zeta = 1.5
    bm = boundary_param(-1.0, zeta)
    bp = boundary_param(2.0, zeta)
    lam = 0.5
    got = fn_g(lam, bm.xi, bp.xi, zeta)
    ref = _g_branch_tracked(lam, bm.xi, bp.xi, zeta)
    assert abs(got - ref) < 1e-9


def test_fn_g_odd_and_zero():
    zeta = 1.8
    bm = boundary_param(0.5, zeta)
    bp = boundary_param(-3.0, zeta)
    assert fn_g(0.0, bm.xi, bp.xi, zeta) == 0.0
    for x in (0.2, 0.9, 1.4):
        assert abs(fn_g(-x, bm.xi, bp.xi, zeta) + fn_g(x, bm.xi, bp.xi, zeta)) < 1e-12


def test_fn_g_prime_matches_finite_difference():
    zeta = 1.5
    bm = boundary_param(-1.0, zeta)
    bp = boundary_param(2.0, zeta)
    lam, h = 0.4, 1e-6
    fd = (fn_g(lam + h, bm.xi, bp.xi, zeta) - fn_g(lam - h, bm.xi, bp.xi, zeta)) / (2 * h)
    an = fn_g_prime(lam, bm.xi, bp.xi, zeta)
    assert abs(fd - an.real) < 1e-7
    assert abs(an.imag) < 1e-12


def test_truncation_policy_validation():
    with pytest.raises(DomainError):
        TruncationPolicy(tail_tol=-1.0)
