"""Scalar special functions shared by every other module.

Jacobi theta functions ϑ₁..ϑ₄ of nome q (Gradshteyn–Ryzhik 8.180 series
normalization, pinned here once):

    ϑ₁(z) = 2 Σ_{n≥0} (−1)ⁿ q^{(n+1/2)²} sin((2n+1)z)
    ϑ₂(z) = 2 Σ_{n≥0} q^{(n+1/2)²} cos((2n+1)z)
    ϑ₃(z) = 1 + 2 Σ_{n≥1} q^{n²} cos(2nz)
    ϑ₄(z) = 1 + 2 Σ_{n≥1} (−1)ⁿ q^{n²} cos(2nz)

plus single/double q-Pochhammer products, the regularised theta
φ(λ) = ϑ₁(λ)/sin λ in infinite-product form, the kernels

    t(ν) = sinh ζ / (sin ν · sin(ν − iζ)),
    K(λ) = sinh 2ζ / (2π sin(λ+iζ) sin(λ−iζ)) = [t(λ) + t(−λ)]/(2π),

and the bare/scattering/boundary phases p, θ, g with branches fixed by
continuity along the real axis and p(0) = θ(0) = g(0) = 0 (all odd).
Their derivatives satisfy p′(λ) = t(λ + iζ/2) and θ′(λ) = −2πK(λ).

Everything here is a pure function; q ≤ e⁻¹ in all supported regimes so
series/products converge geometrically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, PoleProximityError

POLE_GUARD = 1e-12

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Nome:
    """Elliptic nome q = e^(−ζ) for anisotropy ζ > 0."""

    q: float
    zeta: float

    def __post_init__(self):
        if not (0.0 < self.q < 1.0):
            raise DomainError(f"nome q={self.q} outside (0, 1)")

    @classmethod
    def from_zeta(cls, zeta: float) -> "Nome":
        if zeta <= 0.0:
            raise DomainError(f"zeta={zeta} must be > 0")
        return cls(q=math.exp(-zeta), zeta=zeta)

    @classmethod
    def from_q(cls, q: float) -> "Nome":
        if not (0.0 < q < 1.0):
            raise DomainError(f"nome q={q} outside (0, 1)")
        return cls(q=q, zeta=-math.log(q))

    @property
    def q2(self) -> "Nome":
        """Nome squared (needed by the elliptic Cauchy product formula)."""
        return Nome(q=self.q * self.q, zeta=2.0 * self.zeta)


@dataclass(frozen=True)
class TruncationPolicy:
    """Stop a product/series once the next factor is within tail_tol of 1
    (next term within tail_tol of 0), with a hard cap on the term count."""

    tail_tol: float = 1e-16
    max_terms: int = 400

    def __post_init__(self):
        if self.tail_tol <= 0 or self.max_terms < 1:
            raise DomainError("invalid truncation policy")


DEFAULT_POLICY = TruncationPolicy()


# ─────────────────────────────────────────────────────────────────────
# Theta functions
# ─────────────────────────────────────────────────────────────────────

def theta(i: int, lam: complex, nome: Nome,
          policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """ϑᵢ(λ, q), i ∈ {1,2,3,4}, by direct Fourier series."""
    if i not in (1, 2, 3, 4):
        raise DomainError(f"theta index {i} not in 1..4")
    q = nome.q
    lam = complex(lam)
    acc = 0.0 + 0.0j if i in (1, 2) else 1.0 + 0.0j
    small_streak = 0
    for n in range(policy.max_terms):
        if i == 1:
            term = 2.0 * (-1) ** n * q ** ((n + 0.5) ** 2) * cmath.sin((2 * n + 1) * lam)
        elif i == 2:
            term = 2.0 * q ** ((n + 0.5) ** 2) * cmath.cos((2 * n + 1) * lam)
        elif i == 3:
            m = n + 1
            term = 2.0 * q ** (m * m) * cmath.cos(2 * m * lam)
        else:
            m = n + 1
            term = 2.0 * (-1) ** m * q ** (m * m) * cmath.cos(2 * m * lam)
        acc += term
        # two consecutive small terms, in case sin/cos vanished by accident
        if abs(term) < policy.tail_tol * max(1.0, abs(acc)):
            small_streak += 1
            if small_streak >= 2:
                break
        else:
            small_streak = 0
    return acc


def theta1_prime0(nome: Nome, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """ϑ₁′(0) = 2 Σ (−1)ⁿ (2n+1) q^{(n+1/2)²}."""
    q = nome.q
    acc = 0.0
    for n in range(policy.max_terms):
        term = 2.0 * (-1) ** n * (2 * n + 1) * q ** ((n + 0.5) ** 2)
        acc += term
        if abs(term) < policy.tail_tol * max(1.0, abs(acc)):
            break
    return acc


# ─────────────────────────────────────────────────────────────────────
# q-Pochhammer symbols
# ─────────────────────────────────────────────────────────────────────

def qpoch(x: complex, alpha: float,
          policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """(x; α)_∞ = ∏_{n≥0} (1 − x αⁿ)."""
    if abs(alpha) >= 1.0:
        raise DomainError(f"|alpha|={abs(alpha)} >= 1: infinite product diverges")
    if x == 0:
        return 1.0 + 0.0j
    acc = 1.0 + 0.0j
    z = complex(x)
    for _ in range(policy.max_terms):
        acc *= (1.0 - z)
        z *= alpha
        if abs(z) < policy.tail_tol:
            break
    return acc


def qpoch2(x: complex, q1: float, q2: float,
           policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """(x; q₁, q₂)_∞ = ∏_{n₁,n₂≥0} (1 − x q₁^{n₁} q₂^{n₂}),
    evaluated as ∏_{n₂≥0} (x q₂^{n₂}; q₁)_∞."""
    if abs(q1) >= 1.0 or abs(q2) >= 1.0:
        raise DomainError("double q-Pochhammer needs |q1| < 1 and |q2| < 1")
    if x == 0:
        return 1.0 + 0.0j
    acc = 1.0 + 0.0j
    z = complex(x)
    for _ in range(policy.max_terms):
        acc *= qpoch(z, q1, policy)
        z *= q2
        if abs(z) < policy.tail_tol:
            break
    return acc


# ─────────────────────────────────────────────────────────────────────
# Regularised theta φ(λ) = ϑ₁(λ)/sin λ
# ─────────────────────────────────────────────────────────────────────

def varphi(lam: complex, nome: Nome,
           policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """φ(λ) = 2 q^{1/4} ∏_{n≥1} (1 − q^{2n}e^{2iλ})(1 − q^{2n}e^{−2iλ})(1 − q^{2n}).

    Entire and zero-free on the real axis; product valid for |Im λ| < ζ.
    """
    q = nome.q
    if abs(lam.imag if isinstance(lam, complex) else 0.0) >= nome.zeta:
        raise DomainError("varphi product form needs |Im lam| < zeta")
    lam = complex(lam)
    q2 = q * q
    ep = cmath.exp(2j * lam)
    em = 1.0 / ep
    acc = 2.0 * q ** 0.25
    fp, fm, fq = q2 * ep, q2 * em, q2
    bound = max(abs(fp), abs(fm), fq)
    for _ in range(policy.max_terms):
        acc *= (1.0 - fp) * (1.0 - fm) * (1.0 - fq)
        fp *= q2
        fm *= q2
        fq *= q2
        bound *= q2
        if bound < policy.tail_tol:
            break
    return acc


# ─────────────────────────────────────────────────────────────────────
# Kernels
# ─────────────────────────────────────────────────────────────────────

def _guarded_sin(z: complex) -> complex:
    s = cmath.sin(z)
    if abs(s) < POLE_GUARD:
        raise PoleProximityError(f"sin({z}) = {s}: within pole guard")
    return s


def kernel_t(nu: complex, zeta: float) -> complex:
    """t(ν) = sinh ζ / (sin ν · sin(ν − iζ))."""
    return math.sinh(zeta) / (_guarded_sin(nu) * _guarded_sin(nu - 1j * zeta))


def kernel_K(lam: complex, zeta: float) -> complex:
    """K(λ) = sinh 2ζ / (2π sin(λ+iζ) sin(λ−iζ))."""
    return math.sinh(2.0 * zeta) / (
        _TWO_PI * _guarded_sin(lam + 1j * zeta) * _guarded_sin(lam - 1j * zeta)
    )


# ─────────────────────────────────────────────────────────────────────
# Bare / scattering / boundary phases with continuous branches
# ─────────────────────────────────────────────────────────────────────

def _reduce_half_period(x: float) -> tuple[float, int]:
    """x = x0 + kπ with x0 ∈ [−π/2, π/2)."""
    k = math.floor(x / math.pi + 0.5)
    return x - k * math.pi, k


def _fn_p_real(x: float, zeta: float) -> float:
    x0, k = _reduce_half_period(x)
    val = math.pi - 2.0 * math.atan2(math.cos(x0) * math.sinh(0.5 * zeta),
                                     math.sin(x0) * math.cosh(0.5 * zeta))
    return val + _TWO_PI * k


def _fn_theta_real(x: float, zeta: float) -> float:
    x0, k = _reduce_half_period(x)
    val = -math.pi + 2.0 * math.atan2(math.cos(x0) * math.sinh(zeta),
                                      math.sin(x0) * math.cosh(zeta))
    return val - _TWO_PI * k


def _continue_from_real(principal, real_anchor, lam: complex, steps: int = 8) -> complex:
    """Analytic continuation off the real axis: march Im λ in steps, choosing
    the 2π branch of the principal value nearest the previous point."""
    x, y = lam.real, lam.imag
    val = complex(real_anchor(x))
    for s in range(1, steps + 1):
        z = complex(x, y * s / steps)
        pv = principal(z)
        m = round((val - pv).real / _TWO_PI)
        val = pv + _TWO_PI * m
    return val


def fn_p(lam: complex, zeta: float) -> complex:
    """Bare phase p(λ) = i log[sin(iζ/2+λ)/sin(iζ/2−λ)], p(0)=0, odd,
    branch continuous along ℝ; p(λ+π) = p(λ) + 2π."""
    if isinstance(lam, complex) and lam.imag != 0.0:
        if abs(lam.imag) >= 0.5 * zeta:
            raise DomainError("fn_p needs |Im lam| < zeta/2")

        def principal(z):
            return 1j * cmath.log(cmath.sin(0.5j * zeta + z) / cmath.sin(0.5j * zeta - z))

        return _continue_from_real(principal, lambda x: _fn_p_real(x, zeta), lam)
    return _fn_p_real(float(lam.real if isinstance(lam, complex) else lam), zeta)


def fn_theta(lam: complex, zeta: float) -> complex:
    """Scattering phase θ(λ) = i log[sin(iζ−λ)/sin(iζ+λ)], θ(0)=0, odd,
    branch continuous along ℝ; θ(λ+π) = θ(λ) − 2π."""
    if isinstance(lam, complex) and lam.imag != 0.0:
        if abs(lam.imag) >= zeta:
            raise DomainError("fn_theta needs |Im lam| < zeta")

        def principal(z):
            return 1j * cmath.log(cmath.sin(1j * zeta - z) / cmath.sin(1j * zeta + z))

        return _continue_from_real(principal, lambda x: _fn_theta_real(x, zeta), lam,
                                   steps=16)
    return _fn_theta_real(float(lam.real if isinstance(lam, complex) else lam), zeta)


def _xi_split(xi: complex) -> tuple[float, int]:
    """Recover (ξ̃, δ) from ξ = −ξ̃ + iδπ/2."""
    delta = round(xi.imag / (0.5 * math.pi))
    if delta not in (0, 1) or abs(xi.imag - delta * 0.5 * math.pi) > 1e-12:
        raise DomainError(f"boundary parameter xi={xi} not of the form -xi~ + i*delta*pi/2")
    return -xi.real, delta


def fn_g(lam: float, xi_minus: complex, xi_plus: complex, zeta: float) -> float:
    """Boundary phase g(λ) = i log ∏_σ sin(λ−iξ^σ−iζ/2)/sin(λ+iξ^σ+iζ/2),
    odd branch with g(0) = 0.  Real λ with |λ| ≤ π/2 only."""
    lam = float(lam)
    if abs(lam) > 0.5 * math.pi + 1e-12:
        raise DomainError("fn_g implemented on [-pi/2, pi/2]")
    total = 0.0
    for xi in (xi_minus, xi_plus):
        xit, delta = _xi_split(xi)
        a = xit - 0.5 * zeta
        if delta == 0:
            # sin(λ+ia)/sin(λ−ia): odd arg-part of w = sin(λ+ia)
            arg = math.atan2(math.cos(lam) * math.sinh(a), math.sin(lam) * math.cosh(a))
            arg -= math.copysign(0.5 * math.pi, a)
        else:
            # −cos(λ+ia)/cos(λ−ia): odd arg-part of v = cos(λ+ia)
            arg = math.atan2(-math.sin(lam) * math.sinh(a), math.cos(lam) * math.cosh(a))
        total += -2.0 * arg
    return total


def fn_p_prime(lam: complex, zeta: float) -> complex:
    """p′(λ) = t(λ + iζ/2)."""
    return kernel_t(lam + 0.5j * zeta, zeta)


def fn_theta_prime(lam: complex, zeta: float) -> complex:
    """θ′(λ) = −2π K(λ)."""
    return -_TWO_PI * kernel_K(lam, zeta)


def fn_g_prime(lam: complex, xi_minus: complex, xi_plus: complex, zeta: float) -> complex:
    """g′(λ) = Σ_σ i[cot(λ−iξ^σ−iζ/2) − cot(λ+iξ^σ+iζ/2)]."""
    total = 0.0 + 0.0j
    for xi in (xi_minus, xi_plus):
        w = 1j * xi + 0.5j * zeta
        total += 1j * (_cot(lam - w) - _cot(lam + w))
    return total


def _cot(z: complex) -> complex:
    return cmath.cos(z) / _guarded_sin(z)
