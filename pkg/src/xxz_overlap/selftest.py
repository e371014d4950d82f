"""Bundled invariant suite behind `xxz-overlap selftest`.

A curated subset of the pytest suite that exercises every layer without
needing a source checkout: special-function identities, solver-vs-ED
energies, determinant-vs-ED overlaps, functional equations, and the
closed-form symmetries.  Prints one line per check.
"""

from __future__ import annotations

import cmath
import math
import warnings

import numpy as np

from .bethe import density_rho, energy, solve_ground_state
from .ed import ed_overlap, ground_state
from .model import ChainParams, classify, counting_xi, exp_counting
from .overlap import (
    cauchy_det_product_identity,
    overlap_normalized,
    overlap_product_form,
    solve_pair,
)
from .specialfns import (
    Nome,
    fn_p_prime,
    kernel_K,
    kernel_t,
    qpoch,
    theta,
)
from .thermo import QSeriesParams, a_plus, a_plus_shift_rhs, overlap_thermo


def _lieb_residual(zeta: float, lam: float, n_nodes: int = 256) -> float:
    nome = Nome.from_zeta(zeta)
    nodes = -0.5 * math.pi + math.pi * np.arange(n_nodes) / n_nodes
    integral = sum(kernel_K(lam - b, zeta).real * density_rho(b, nome)
                   for b in nodes) * math.pi / n_nodes
    return abs(density_rho(lam, nome) + integral
               - fn_p_prime(lam, zeta).real / math.pi)


def checks():
    yield "theta parity", lambda: max(
        abs(theta(1, -l, Nome.from_zeta(1.5)) + theta(1, l, Nome.from_zeta(1.5)))
        + abs(theta(3, -l, Nome.from_zeta(1.5)) - theta(3, l, Nome.from_zeta(1.5)))
        for l in (0.3, 0.7 + 0.2j, 1.1)) < 1e-13

    yield "qpoch recursion", lambda: abs(
        qpoch(0.4 + 0.2j, 0.3) - (1 - (0.4 + 0.2j)) * qpoch((0.4 + 0.2j) * 0.3, 0.3)
    ) < 1e-14

    yield "kernel identity K=(t(x)+t(-x))/2pi", lambda: abs(
        kernel_K(0.4, 1.5) - (kernel_t(0.4, 1.5) + kernel_t(-0.4, 1.5))
        / (2 * math.pi)) < 1e-13

    def a_reflection():
        p = ChainParams(L=8, zeta=1.5, h_minus=-1.0, h_plus=2.0)
        r = solve_ground_state(p)
        nu = 0.3 + 0.1j
        return abs(exp_counting(nu, r.all_roots, p)
                   * exp_counting(-nu, r.all_roots, p) - 1.0) < 1e-12
    yield "counting-function reflection", a_reflection

    yield "Lieb equation residual", lambda: max(
        _lieb_residual(z, l) for z in (1.2, 1.5, 1.8) for l in (0.0, 0.3, 1.2)
    ) < 1e-9

    def cauchy():
        rng = np.random.default_rng(5)
        nome = Nome.from_zeta(1.5)
        worst = 0.0
        for _ in range(6):
            n = int(rng.integers(2, 7))
            nus = np.sort(rng.uniform(0.1, 1.4, n))
            oms = nus + rng.uniform(0.05, 0.12, n)
            det, prod = cauchy_det_product_identity(nus, oms, nome)
            worst = max(worst, abs(det - prod) / abs(prod))
        return worst < 1e-10
    yield "Cauchy determinant identity", cauchy

    def energies():
        for (L, z, hm, hp) in ((8, 1.5, -1.0, 2.0), (8, 1.5, -1.0, 0.5),
                               (9, 1.8, 0.0, -1.0), (9, 1.8, 0.0, 1.0)):
            p = ChainParams(L=L, zeta=z, h_minus=hm, h_plus=hp)
            roots = solve_ground_state(p)
            if abs(energy(roots, p) - ground_state(p).energy) > 1e-8:
                return False
        return True
    yield "Bethe vs ED energies", energies

    def overlaps():
        for (L, z, hp, h1, h2) in ((8, 1.5, 2.0, -1.0, 0.0),
                                   (8, 1.8, -1.0, 0.3, 0.8),
                                   (9, 1.8, -1.0, 0.0, 0.5)):
            p1 = ChainParams(L=L, zeta=z, h_minus=h1, h_plus=hp)
            p2 = ChainParams(L=L, zeta=z, h_minus=h2, h_plus=hp)
            s1, s2 = solve_pair(p1, p2)
            if abs(overlap_normalized(s1, s2, p1, p2) - ed_overlap(p1, p2)) > 1e-7:
                return False
        return True
    yield "determinant overlap vs ED", overlaps

    def product_vs_det():
        p1 = ChainParams(L=10, zeta=1.8, h_minus=-1.0, h_plus=3.0)
        p2 = ChainParams(L=10, zeta=1.8, h_minus=0.0, h_plus=3.0)
        s1, s2 = solve_pair(p1, p2)
        return abs(overlap_product_form(s1, s2, p1, p2)
                   - overlap_normalized(s1, s2, p1, p2)) < 1e-5
    yield "product form vs determinant", product_vs_det

    def functional_equations():
        us = [0.1, 0.5 * cmath.exp(0.3j), 0.9, -0.4, 0.7j, 0.2 + 0.1j]
        cfgs = [((8, 1.5, -1.0, 2.0), (8, 1.5, 0.0, 2.0)),
                ((8, 1.5, 0.3, -2.0), (8, 1.5, 0.8, -2.0)),
                ((8, 1.5, 0.5, -1.0), (8, 1.5, 2.0, -1.0))]
        from .thermo import pair_variant
        for c1, c2 in cfgs:
            p1 = ChainParams(L=c1[0], zeta=c1[1], h_minus=c1[2], h_plus=c1[3])
            p2 = ChainParams(L=c2[0], zeta=c2[1], h_minus=c2[2], h_plus=c2[3])
            qp = pair_variant(p1, p2)
            for u in us:
                res = abs(a_plus(u, qp) * a_plus(u * qp.q ** 2, qp)
                          - a_plus_shift_rhs(u, qp))
                if res > 1e-12:
                    return False
        return True
    yield "shift-equation residuals", functional_equations

    def thermo_symmetries():
        p1 = ChainParams(L=8, zeta=1.5, h_minus=-1.0, h_plus=2.0)
        p2 = ChainParams(L=8, zeta=1.5, h_minus=0.0, h_plus=2.0)
        v = overlap_thermo(p1, p2).value
        if abs(v - overlap_thermo(p2, p1).value) > 1e-13:
            return False
        rev1 = ChainParams(L=8, zeta=1.5, h_minus=1.0, h_plus=-2.0)
        rev2 = ChainParams(L=8, zeta=1.5, h_minus=0.0, h_plus=-2.0)
        return abs(v - overlap_thermo(rev1, rev2).value) < 1e-12
    yield "closed-form symmetries", thermo_symmetries

    def quantum_numbers():
        p = ChainParams(L=10, zeta=1.5, h_minus=-1.0, h_plus=2.0)
        roots = solve_ground_state(p)
        for j, lam in enumerate(roots.real_roots):
            n_eff = counting_xi(lam, roots.all_roots, p) * p.L / math.pi
            if abs(n_eff - (j + 1)) > 1e-9:
                return False
        return True
    yield "adjacent quantum numbers", quantum_numbers


def run(verbose: bool = True) -> int:
    failures = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for name, fn in checks():
            try:
                ok = fn()
            except Exception as exc:
                ok = False
                if verbose:
                    print(f"FAIL {name}: {type(exc).__name__}: {exc}")
            if ok:
                if verbose:
                    print(f"ok   {name}")
            else:
                failures += 1
                if verbose and ok is False:
                    print(f"FAIL {name}")
    if verbose:
        print(f"{failures} failure(s)")
    return failures
