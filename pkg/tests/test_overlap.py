"""Determinant overlaps, scalar products, Cauchy identity, product formula."""

import cmath
import math
import warnings

import numpy as np
import pytest

from xxz_overlap.bethe import BetheRoots, BoundaryRootInfo, solve_ground_state
from xxz_overlap.ed import ed_overlap
from xxz_overlap.errors import PoleProximityError
from xxz_overlap.model import ChainParams, exp_counting, exp_counting_prime
from xxz_overlap.overlap import (
    cauchy_det_product_identity,
    cauchy_kernel_rho_bar,
    gaudin_matrix,
    norm_determinant,
    norm_log,
    overlap_normalized,
    overlap_product_form,
    slavnov_scalar_product,
    solve_pair,
)
from xxz_overlap.specialfns import Nome, kernel_K
from xxz_overlap.bethe import density_rho

warnings.filterwarnings("ignore", message="ground-state root")

NOME15 = Nome.from_zeta(1.5)


@pytest.fixture(scope="module")
def pair_b():
    p1 = ChainParams(L=10, zeta=1.5, h_minus=-1.0, h_plus=2.0)
    p2 = ChainParams(L=10, zeta=1.5, h_minus=0.0, h_plus=2.0)
    s1, s2 = solve_pair(p1, p2)
    return p1, p2, s1, s2


# ─────────────────────────────────────────────────────────────────────
# Gaudin matrix and norm
# ─────────────────────────────────────────────────────────────────────

def test_gaudin_offdiagonal_vs_finite_differences(pair_b):
    p1, _, s1, _ = pair_b
    roots = list(s1.all_roots)
    M = gaudin_matrix(s1, p1)
    j, k, h = 1, 3, 1e-6
    # i d a(lam_j)/d lam_k ~ off-diagonal entry (a = 1 on shell)
    bumped_up = list(roots)
    bumped_dn = list(roots)
    bumped_up[k] = roots[k] + h
    bumped_dn[k] = roots[k] - h
    fd = (exp_counting(roots[j], bumped_up, p1)
          - exp_counting(roots[j], bumped_dn, p1)) / (2 * h)
    expected = -2 * math.pi * (kernel_K(roots[j] - roots[k], 1.5)
                               - kernel_K(roots[j] + roots[k], 1.5))
    assert abs(1j * fd - expected) < 1e-6
    assert abs(M[j, k] - expected) < 1e-13


def test_norm_positive_finite(pair_b):
    p1, _, s1, _ = pair_b
    val = norm_determinant(s1, p1)
    assert val > 0 and math.isfinite(math.log(val))


def test_norm_clamped_limit_consistency():
    # force the clamped path and compare with the eps-resolved evaluation;
    # the analytic limit is accurate to O(L * eps)
    for (hm, hp) in ((-1.0, 0.2), (0.2, -1.0)):
        params = ChainParams(L=16, zeta=1.8, h_minus=hm, h_plus=hp)
        s = solve_ground_state(params)
        eps = abs(s.br_info.epsilon_corr)
        forced = BetheRoots(
            real_roots=s.real_roots, boundary_root=s.br_info.asymptote,
            br_info=BoundaryRootInfo(side=s.br_info.side, epsilon_corr=0j,
                                     clamped=True, pinned=True,
                                     asymptote=s.br_info.asymptote),
            residual_max=s.residual_max, quantum_numbers=s.quantum_numbers)
        rel = abs(norm_determinant(forced, params) / norm_determinant(s, params) - 1)
        assert rel < 50 * params.L * eps


# ─────────────────────────────────────────────────────────────────────
# Slavnov-type scalar product
# ─────────────────────────────────────────────────────────────────────

def test_slavnov_richardson_limit_is_norm():
    params = ChainParams(L=6, zeta=1.5, h_minus=-1.0, h_plus=2.0)
    s = solve_ground_state(params)
    lams = np.array(s.real_roots)
    delta = 0.01 * np.arange(1, len(lams) + 1)
    vals = [slavnov_scalar_product(s, list((lams + t * delta).astype(complex)), params)
            for t in (0.02, 0.01, 0.005, 0.0025)]
    for k in range(1, len(vals)):
        for i in range(len(vals) - k):
            vals[i] = (2 ** k * vals[i + 1] - vals[i]) / (2 ** k - 1)
    ref = cmath.exp(norm_log(s, params))
    assert abs(vals[0] - ref) / abs(ref) < 1e-6


def test_slavnov_squared_matches_ed_overlap():
    p1 = ChainParams(L=6, zeta=1.5, h_minus=-1.0, h_plus=2.0)
    p2 = ChainParams(L=6, zeta=1.5, h_minus=0.0, h_plus=2.0)
    s1, s2 = solve_ground_state(p1), solve_ground_state(p2)
    num = slavnov_scalar_product(s1, s2, p1) * slavnov_scalar_product(s2, s1, p2)
    den = cmath.exp(norm_log(s1, p1)) * cmath.exp(norm_log(s2, p2))
    s_raw = num / den
    assert abs(s_raw.imag) < 1e-10
    assert abs(s_raw.real - ed_overlap(p1, p2)) < 1e-8


def test_slavnov_n1_closed_form():
    from xxz_overlap.model import sfac
    params = ChainParams(L=2, zeta=1.5, h_minus=-1.0, h_plus=2.0)
    s = solve_ground_state(params)
    lam = complex(s.real_roots[0])
    mu = 0.8 + 0j
    z = params.zeta

    def thick_a(v):
        return (cmath.sin(v - 0.5j * z) ** (2 * params.L)
                * cmath.sin(v + 1j * params.xi_plus + 0.5j * z)
                * cmath.sin(v + 1j * params.xi_minus + 0.5j * z))

    h11 = cmath.sin(-1j * z) / sfac(mu, lam) * (thick_a(mu) - thick_a(-mu))
    direct = (cmath.sin(lam - 0.5j * z) ** (2 * params.L)
              * cmath.sin(2 * lam - 1j * z)
              * cmath.sin(2 * mu - 1j * z) / cmath.sin(2 * mu)
              * cmath.sin(lam + 1j * params.xi_plus + 0.5j * z)
              / cmath.sin(lam - 1j * params.xi_minus - 0.5j * z) * h11)
    got = slavnov_scalar_product(s, [mu], params)
    assert abs(got - direct) / abs(direct) < 1e-13


# ─────────────────────────────────────────────────────────────────────
# Normalized overlap
# ─────────────────────────────────────────────────────────────────────

def test_overlap_identical_params_is_one(pair_b):
    p1, _, s1, _ = pair_b
    assert overlap_normalized(s1, s1, p1, p1) == 1.0


def test_overlap_matches_ed(pair_b):
    p1, p2, s1, s2 = pair_b
    s_fin = overlap_normalized(s1, s2, p1, p2)
    assert abs(s_fin - ed_overlap(p1, p2)) < 1e-8


def test_overlap_sector_mismatch_zero():
    p1 = ChainParams(L=11, zeta=1.8, h_minus=0.0, h_plus=-1.0)
    p2 = ChainParams(L=11, zeta=1.8, h_minus=1.5, h_plus=-1.0)
    s1, s2 = solve_pair(p1, p2)
    assert s1 is None and s2 is None


def test_overlap_symmetric_in_states(pair_b):
    p1, p2, s1, s2 = pair_b
    a = overlap_normalized(s1, s2, p1, p2)
    b = overlap_normalized(s2, s1, p2, p1)
    assert abs(a - b) < 1e-12


def test_overlap_range(pair_b):
    p1, p2, s1, s2 = pair_b
    val = overlap_normalized(s1, s2, p1, p2)
    assert -1e-9 <= val <= 1 + 1e-9


def test_overlap_boundary_root_pairs_vs_ed():
    cases = [
        (10, 1.8, -1.0, 0.3, 0.8),    # minus/minus, distinct asymptotes
        (10, 1.5, 0.5, -1.0, -0.3),   # plus/plus, shared asymptote
        (10, 1.5, -1.0, 0.5, 2.0),    # boundary root against real roots
        (10, 1.8, -1.0, 0.0, 0.5),    # free-boundary state in the pair
    ]
    for (L, zeta, hp, h1, h2) in cases:
        p1 = ChainParams(L=L, zeta=zeta, h_minus=h1, h_plus=hp)
        p2 = ChainParams(L=L, zeta=zeta, h_minus=h2, h_plus=hp)
        s1, s2 = solve_pair(p1, p2)
        gap = abs(overlap_normalized(s1, s2, p1, p2) - ed_overlap(p1, p2))
        assert gap < 1e-8, (L, zeta, hp, h1, h2, gap)


def test_overlap_stable_under_root_permutation(pair_b):
    p1, p2, s1, s2 = pair_b
    base = overlap_normalized(s1, s2, p1, p2)
    perm = BetheRoots(real_roots=tuple(reversed(s1.real_roots)),
                      boundary_root=None, br_info=None,
                      residual_max=s1.residual_max,
                      quantum_numbers=s1.quantum_numbers)
    val = overlap_normalized(perm, s2, p1, p2)
    assert abs(val - base) < 1e-11


# ─────────────────────────────────────────────────────────────────────
# Elliptic Cauchy kernel and determinant identity
# ─────────────────────────────────────────────────────────────────────

def test_rho_bar_odd():
    a = cauchy_kernel_rho_bar(-0.4, 0.9, NOME15)
    b = cauchy_kernel_rho_bar(0.4, 0.9, NOME15)
    assert abs(a + b) < 1e-13


def test_rho_bar_density_continuation():
    u, w = 0.5, 0.95
    lhs = cauchy_kernel_rho_bar(u, w, NOME15)
    rhs = -1j * math.pi * (
        _rho_cont(u - w - 0.75j) + _rho_cont(u + w - 0.75j))
    assert abs(lhs - rhs) < 1e-11


def _rho_cont(lam):
    from xxz_overlap.specialfns import theta, theta1_prime0
    pref = theta1_prime0(NOME15) / theta(2, 0.0, NOME15).real
    return pref * theta(3, lam, NOME15) / theta(4, lam, NOME15) / math.pi


def test_rho_bar_residue():
    w = 0.9
    u = w + 1e-6
    val = (u - w) * cauchy_kernel_rho_bar(u, w, NOME15)
    assert abs(val - 1.0) < 1e-5


def test_rho_bar_pole_guard():
    with pytest.raises(PoleProximityError):
        cauchy_kernel_rho_bar(0.7, 0.7, NOME15)


def test_cauchy_identity_n1():
    det, prod = cauchy_det_product_identity([0.5], [0.9], NOME15)
    assert abs(det - cauchy_kernel_rho_bar(0.5, 0.9, NOME15)) < 1e-13
    assert abs(det - prod) < 1e-12 * abs(det)


def test_cauchy_identity_n3():
    det, prod = cauchy_det_product_identity(
        [0.3, 0.7, 1.1], [0.2, 0.9, 1.3], NOME15)
    assert abs(det - prod) < 1e-11 * abs(det)


def test_cauchy_identity_random_n6():
    rng = np.random.default_rng(9)
    nus = np.sort(rng.uniform(0.1, 1.4, 6))
    oms = nus + rng.uniform(0.04, 0.1, 6)
    det, prod = cauchy_det_product_identity(nus, oms, NOME15)
    assert abs(det - prod) < 1e-10 * abs(det)


# ─────────────────────────────────────────────────────────────────────
# Product formula
# ─────────────────────────────────────────────────────────────────────

def test_product_form_identical_is_one(pair_b):
    p1, _, s1, _ = pair_b
    assert overlap_product_form(s1, s1, p1, p1) == 1.0


def test_product_form_close_to_determinant(pair_b):
    p1, p2, s1, s2 = pair_b
    det = overlap_normalized(s1, s2, p1, p2)
    prod = overlap_product_form(s1, s2, p1, p2)
    assert abs(det - prod) < 2e-5


def test_product_form_gap_decays_with_length():
    gaps = []
    for L in (8, 10, 12):
        p1 = ChainParams(L=L, zeta=1.5, h_minus=-1.0, h_plus=2.0)
        p2 = ChainParams(L=L, zeta=1.5, h_minus=0.0, h_plus=2.0)
        s1, s2 = solve_pair(p1, p2)
        gaps.append(abs(overlap_normalized(s1, s2, p1, p2)
                        - overlap_product_form(s1, s2, p1, p2)))
    assert gaps[2] < gaps[1] < gaps[0]
    assert gaps[2] < 2e-5


def test_psi_pole_identity_at_finite_size(pair_b):
    # sum_a 2pi [K(mu-l_a) - K(mu+l_a)] / phi'(l_a)
    #   = i [1/phi(mu+i z) - 1/phi(mu-i z)]
    p1, p2, s1, s2 = pair_b
    lams, mus = s1.all_roots, s2.all_roots
    z = p1.zeta

    def phi(nu):
        val = 1.0 + 0j
        for lam, mu in zip(lams, mus):
            val *= cmath.sin(nu - lam) * cmath.sin(nu + lam)
            val /= cmath.sin(nu - mu) * cmath.sin(nu + mu)
        return val

    def phi_prime_at_root(a):
        # phi has a simple zero at lam_a; derivative = reduced product
        val = cmath.sin(2 * lams[a])
        for k, lam in enumerate(lams):
            if k != a:
                val *= cmath.sin(lams[a] - lam) * cmath.sin(lams[a] + lam)
        for mu in mus:
            val /= cmath.sin(lams[a] - mu) * cmath.sin(lams[a] + mu)
        return val

    for mu_pt in (0.3, 0.77, 1.31):
        lhs = sum(2 * math.pi * (kernel_K(mu_pt - lams[a], z)
                                 - kernel_K(mu_pt + lams[a], z))
                  / phi_prime_at_root(a) for a in range(len(lams)))
        rhs = 1j * (1 / phi(mu_pt + 1j * z) - 1 / phi(mu_pt - 1j * z))
        assert abs(lhs - rhs) < 1e-10
