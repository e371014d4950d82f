"""Independent exact-diagonalization oracle.

Builds the open-chain Hamiltonian

    H = Σ_{i<L} [σᵢˣσᵢ₊₁ˣ + σᵢʸσᵢ₊₁ʸ + Δ(σᵢᶻσᵢ₊₁ᶻ − 1)] + h⁻σ₁ᶻ + h⁺σ_Lᶻ

in the σᶻ product basis, block-diagonal in the number of down spins.
Basis states are bit patterns (bit i set = down spin at site i+1), sorted
ascending, with binary-search index lookup.  Everything is real symmetric,
so ground states are real vectors and the squared normalized overlap
(v₁·v₂)²/(‖v₁‖²‖v₂‖²) matches the Bethe-state overlap directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DegenerateGroundStateError, DomainError, SizeCapError
from .model import ChainParams

ED_CAP_DEFAULT = 16
DEGENERACY_TOL = 1e-10
# above this block size, LAPACK dense subset solver (lowest two pairs) is used
FULL_SPECTRUM_DIM = 512


@dataclass(frozen=True)
class SectorBasis:
    """Sᶻ sector basis: all length-L bit patterns with n_down bits set."""

    L: int
    n_down: int
    states: np.ndarray  # sorted uint64 bit patterns

    @property
    def dim(self) -> int:
        return len(self.states)

    def index(self, state: int) -> int:
        i = int(np.searchsorted(self.states, state))
        if i >= len(self.states) or self.states[i] != state:
            raise DomainError(f"state {state:b} not in sector (L={self.L}, n={self.n_down})")
        return i


def sector_basis(L: int, n_down: int) -> SectorBasis:
    if not (0 <= n_down <= L):
        raise DomainError(f"n_down={n_down} outside 0..{L}")
    states = np.array([s for s in range(1 << L) if bin(s).count("1") == n_down],
                      dtype=np.uint64)
    return SectorBasis(L=L, n_down=n_down, states=states)


@dataclass(frozen=True)
class GroundStateVector:
    energy: float
    vector: np.ndarray
    sector: int


def build_hamiltonian_block(params: ChainParams, n_down: int,
                            cap: int = ED_CAP_DEFAULT) -> np.ndarray:
    """Dense symmetric H restricted to the n_down sector."""
    L = params.L
    if L > cap:
        raise SizeCapError(f"L={L} exceeds ED cap {cap}")
    basis = sector_basis(L, n_down)
    delta = params.delta_aniso
    dim = basis.dim
    H = np.zeros((dim, dim))
    states = basis.states.astype(np.int64)
    for idx, s in enumerate(states):
        diag = 0.0
        for i in range(L - 1):
            bi = (s >> i) & 1
            bj = (s >> (i + 1)) & 1
            if bi != bj:
                diag += -2.0 * delta
                flipped = s ^ (0b11 << i)
                H[idx, basis.index(int(flipped))] += 2.0
        sz1 = 1.0 - 2.0 * ((s >> 0) & 1)
        szL = 1.0 - 2.0 * ((s >> (L - 1)) & 1)
        diag += params.h_minus * sz1 + params.h_plus * szL
        H[idx, idx] = diag
    return H


def _lowest_two(H: np.ndarray):
    """Lowest two eigenvalues and the ground vector of a symmetric block."""
    dim = H.shape[0]
    if dim == 1:
        return np.array([H[0, 0], math.inf]), np.ones((1, 1))
    if dim <= FULL_SPECTRUM_DIM:
        w, v = scipy.linalg.eigh(H)
        return w[:2], v[:, :1]
    w, v = scipy.linalg.eigh(H, subset_by_index=(0, 1))
    return w, v[:, :1]


def ground_state(params: ChainParams, cap: int = ED_CAP_DEFAULT,
                 sector: int | None = None) -> GroundStateVector:
    """Global ground state over all Sᶻ sectors (or one requested sector)."""
    L = params.L
    if L > cap:
        raise SizeCapError(f"L={L} exceeds ED cap {cap}")
    sectors = range(L + 1) if sector is None else (sector,)
    found = []  # (energy, second_energy, vector, n_down)
    for n in sectors:
        H = build_hamiltonian_block(params, n, cap=cap)
        w, v = _lowest_two(H)
        found.append((float(w[0]), float(w[1]), v[:, 0], n))
    found.sort(key=lambda t: t[0])
    e0, _, vec, n0 = found[0]
    runner = found[0][1] if len(found) == 1 else min(found[0][1], found[1][0])
    if runner - e0 < DEGENERACY_TOL:
        raise DegenerateGroundStateError(
            f"two lowest levels within {DEGENERACY_TOL}: {e0} vs {runner}")
    vec = vec / np.linalg.norm(vec)
    return GroundStateVector(energy=e0, vector=vec, sector=n0)


def ed_overlap(params1: ChainParams, params2: ChainParams,
               cap: int = ED_CAP_DEFAULT) -> float:
    """S = (v₁·v₂)² / (‖v₁‖²‖v₂‖²); exactly 0 when the sectors differ."""
    if params1.L != params2.L:
        raise DomainError("ed_overlap needs equal chain lengths")
    g1 = ground_state(params1, cap=cap)
    g2 = ground_state(params2, cap=cap)
    if g1.sector != g2.sector:
        return 0.0
    num = float(np.dot(g1.vector, g2.vector))
    return num * num / (float(np.dot(g1.vector, g1.vector)) *
                        float(np.dot(g2.vector, g2.vector)))
