"""Physical parameters, boundary parametrization, ground-state regime
classification, and the exponential counting function 𝔞.

Open XXZ spin-1/2 chain with longitudinal boundary fields,

    H = Σ_{i<L} [σᵢˣσᵢ₊₁ˣ + σᵢʸσᵢ₊₁ʸ + Δ(σᵢᶻσᵢ₊₁ᶻ − 1)] + h⁻σ₁ᶻ + h⁺σ_Lᶻ,

in the massive antiferromagnetic regime Δ = cosh ζ > 1, q = e^(−ζ).
Boundary fields are parametrized as h = −sinh ζ · coth ξ with
ξ = −ξ̃ + iδπ/2, δ = 1 for |h| < sinh ζ and δ = 0 for |h| > sinh ζ,
so that p = e^(−2ξ) = (−1)^δ e^{2ξ̃} is a signed real.

Only the homogeneous chain is supported (inhomogeneities fixed at −iζ/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    AmbiguousSectorError,
    CriticalFieldError,
    DegenerateBoundaryError,
    DomainError,
    GaplessRegimeError,
    PoleProximityError,
)
from .specialfns import Nome, fn_g, fn_p, fn_theta, _guarded_sin, _cot


@dataclass(frozen=True)
class BoundaryParam:
    """One boundary field in the (ξ̃, δ) parametrization."""

    h: float
    xi_tilde: float
    delta: int

    @property
    def xi(self) -> complex:
        """ξ = −ξ̃ + iδπ/2."""
        return complex(-self.xi_tilde, self.delta * 0.5 * math.pi)

    @property
    def p(self) -> float:
        """p = e^(−2ξ) = (−1)^δ e^{2ξ̃}, stored as a signed real."""
        return (-1.0) ** self.delta * math.exp(2.0 * self.xi_tilde)


def boundary_param(h: float, zeta: float) -> BoundaryParam:
    """Solve h = −sinh ζ coth(−ξ̃ + iδπ/2) for real ξ̃ and δ ∈ {0,1}."""
    sh = math.sinh(zeta)
    if h == 0.0:
        return BoundaryParam(h=h, xi_tilde=0.0, delta=1)
    r = h / sh
    if abs(abs(r) - 1.0) < 1e-14:
        raise DegenerateBoundaryError(
            f"|h|={abs(h)} equals sinh(zeta)={sh}: delta ambiguous, |p| = 1")
    if abs(r) < 1.0:
        return BoundaryParam(h=h, xi_tilde=math.atanh(r), delta=1)
    return BoundaryParam(h=h, xi_tilde=math.atanh(1.0 / r), delta=0)


@dataclass(frozen=True)
class ChainParams:
    """All physical inputs: length, anisotropy, and the two boundary fields."""

    L: int
    zeta: float
    h_minus: float
    h_plus: float

    def __post_init__(self):
        if self.L < 2:
            raise DomainError(f"L={self.L} must be >= 2")
        if self.zeta <= 0.0:
            raise DomainError(f"zeta={self.zeta} must be > 0 (massive regime)")
        for h in (self.h_minus, self.h_plus):
            if not math.isfinite(h):
                raise DomainError("boundary fields must be finite")

    @cached_property
    def nome(self) -> Nome:
        return Nome.from_zeta(self.zeta)

    @property
    def delta_aniso(self) -> float:
        """Δ = cosh ζ."""
        return math.cosh(self.zeta)

    @cached_property
    def bp_minus(self) -> BoundaryParam:
        return boundary_param(self.h_minus, self.zeta)

    @cached_property
    def bp_plus(self) -> BoundaryParam:
        return boundary_param(self.h_plus, self.zeta)

    @property
    def xi_minus(self) -> complex:
        return self.bp_minus.xi

    @property
    def xi_plus(self) -> complex:
        return self.bp_plus.xi

    def boundary(self, side: str) -> BoundaryParam:
        return self.bp_plus if side == "plus" else self.bp_minus

    def with_h_minus(self, h: float) -> "ChainParams":
        return ChainParams(self.L, self.zeta, h, self.h_plus)


def critical_fields(zeta: float) -> tuple[float, float]:
    """(h_cr1, h_cr2) = (Δ − 1, Δ + 1)."""
    d = math.cosh(zeta)
    return d - 1.0, d + 1.0


@dataclass(frozen=True)
class Regime:
    """Ground-state classification: sector size, case label, boundary root."""

    N: int
    case_label: str                  # A, B, C, A_prime, B_prime
    boundary_root_side: str          # none, plus, minus
    epsilon_sign: int                # +1 iff |p(h_minus) q| < 1
    gapless: bool = False

    @property
    def n_real(self) -> int:
        return self.N - (0 if self.boundary_root_side == "none" else 1)


def _check_regular_fields(params: ChainParams) -> None:
    hc1, hc2 = critical_fields(params.zeta)
    for h in (params.h_minus, params.h_plus):
        if abs(abs(h) - hc1) < 1e-14 or abs(abs(h) - hc2) < 1e-14:
            raise CriticalFieldError(
                f"field h={h} sits on a critical value (h_cr1={hc1}, h_cr2={hc2})")
    # force the delta decomposition, which rejects |h| = sinh(zeta)
    params.bp_minus, params.bp_plus


def _epsilon_sign(params: ChainParams) -> int:
    # +1 iff |p q| < 1 for the left field, i.e. h_minus below h_cr1 or above h_cr2
    return 1 if abs(params.bp_minus.p) * params.nome.q < 1.0 else -1


def classify(params: ChainParams) -> Regime:
    """Ground-state case table.

    L even: (A) largest field subcritical → boundary root on that side;
    (B) largest field between h_cr1 and h_cr2 → all roots real;
    (C) largest field above h_cr2 → boundary root on that side; N = L/2 always.
    L odd: (A′) both fields < h_cr1, h⁺+h⁻ < 0, N = (L−1)/2;
    (B′) both fields > −h_cr1, h⁺+h⁻ > 0, N = (L+1)/2.
    """
    _check_regular_fields(params)
    hc1, hc2 = critical_fields(params.zeta)
    hm, hp = params.h_minus, params.h_plus
    eps = _epsilon_sign(params)

    if params.L % 2 == 0:
        if (hm > hc1 and hp > hc1) or (-hm > hc1 and -hp > hc1):
            raise GaplessRegimeError(
                f"h-='{hm}', h+='{hp}': both fields beyond h_cr1={hc1} on the same "
                "side (even-L gapless condition)")
        n = params.L // 2
        if hm == hp:
            raise AmbiguousSectorError(
                "equal subcritical boundary fields: boundary-root side undetermined")
        side = "plus" if hp > hm else "minus"
        h1 = max(hm, hp)
        if abs(h1) < hc1:
            return Regime(N=n, case_label="A", boundary_root_side=side, epsilon_sign=eps)
        if hc1 < h1 < hc2:
            return Regime(N=n, case_label="B", boundary_root_side="none", epsilon_sign=eps)
        return Regime(N=n, case_label="C", boundary_root_side=side, epsilon_sign=eps)

    if (hm > hc1 and -hp > hc1) or (-hm > hc1 and hp > hc1):
        raise GaplessRegimeError(
            f"h-='{hm}', h+='{hp}': fields beyond h_cr1={hc1} on opposite sides "
            "(odd-L gapless condition)")
    if hm < hc1 and hp < hc1 and hm + hp < 0.0:
        return Regime(N=(params.L - 1) // 2, case_label="A_prime",
                      boundary_root_side="none", epsilon_sign=eps)
    if hm > -hc1 and hp > -hc1 and hm + hp > 0.0:
        return Regime(N=(params.L + 1) // 2, case_label="B_prime",
                      boundary_root_side="none", epsilon_sign=eps)
    raise AmbiguousSectorError(
        f"h-='{hm}', h+='{hp}': h⁺+h⁻ = 0 with subcritical fields leaves the "
        "odd-L sector degenerate")


def boundary_root_asymptote(params: ChainParams, side: str) -> complex:
    """Large-L boundary-root position −i(ζ/2 + ξ^σ) = δ^σ π/2 − i(ζ/2 − ξ̃^σ)."""
    bp = params.boundary(side)
    return complex(bp.delta * 0.5 * math.pi, -(0.5 * params.zeta - bp.xi_tilde))


# ─────────────────────────────────────────────────────────────────────
# Exponential counting function 𝔞
# ─────────────────────────────────────────────────────────────────────
#
# 𝔞(ν|{λ}) = [𝐚(ν)/𝐚(−ν)] · sin(iζ−2ν)/sin(iζ+2ν) · ∏_ℓ 𝔰(ν+iζ,λ_ℓ)/𝔰(ν−iζ,λ_ℓ)
#
# with 𝔰(λ,μ) = sin(λ+μ)sin(λ−μ) and, in the homogeneous limit,
# 𝐚(ν)/𝐚(−ν) = [sin(ν−iζ/2)/sin(ν+iζ/2)]^{2L}
#              × ∏_σ sin(ν+iξ^σ+iζ/2)/sin(ν−iξ^σ−iζ/2).
#
# At a boundary root ν = −i(ζ/2+ξ^σ) − iε the σ-numerator is sin(−iε);
# passing br_eps/br_side evaluates that factor directly from ε so that it
# keeps full relative precision when ε is exponentially small.


def sfac(lam: complex, mu: complex) -> complex:
    """𝔰(λ, μ) = sin(λ+μ) sin(λ−μ)."""
    return cmath.sin(lam + mu) * cmath.sin(lam - mu)


def _a_pieces(nu: complex, roots, params: ChainParams,
              br_side: str | None = None, br_eps: complex | None = None,
              skip_br_sigma: bool = False):
    """Multiplicative factors of 𝔞(ν|{λ}) as a list (value domain)."""
    z = params.zeta
    pieces = [(cmath.sin(nu - 0.5j * z) / _guarded_sin(nu + 0.5j * z)) ** (2 * params.L)]
    for side in ("minus", "plus"):
        xi = params.boundary(side).xi
        if side == br_side:
            if skip_br_sigma:
                num = 1.0 + 0.0j
            elif br_eps is not None:
                num = cmath.sin(-1j * br_eps)
            else:
                num = cmath.sin(nu + 1j * xi + 0.5j * z)
        else:
            num = cmath.sin(nu + 1j * xi + 0.5j * z)
        pieces.append(num / _guarded_sin(nu - 1j * xi - 0.5j * z))
    pieces.append(cmath.sin(1j * z - 2 * nu) / _guarded_sin(1j * z + 2 * nu))
    for lam in roots:
        pieces.append(sfac(nu + 1j * z, lam) / _sfac_guarded(nu - 1j * z, lam))
    return pieces


def _sfac_guarded(lam: complex, mu: complex) -> complex:
    return _guarded_sin(lam + mu) * _guarded_sin(lam - mu)


def exp_counting(nu: complex, roots, params: ChainParams,
                 br_side: str | None = None, br_eps: complex | None = None) -> complex:
    """𝔞(ν|{λ}); equals 1 at every Bethe root."""
    val = 1.0 + 0.0j
    for piece in _a_pieces(nu, roots, params, br_side, br_eps):
        val *= piece
    return val


def exp_counting_reg(nu: complex, roots, params: ChainParams, br_side: str) -> complex:
    """𝔞(ν)/sin(ν+iξ^σ+iζ/2): the counting function with its vanishing
    boundary factor struck out.  At the boundary-root asymptote this is the
    analytic limit of 𝔞′ (and equals i/ε up to O(Lε))."""
    val = 1.0 + 0.0j
    for piece in _a_pieces(nu, roots, params, br_side, None, skip_br_sigma=True):
        val *= piece
    return val


def exp_counting_log_deriv(nu: complex, roots, params: ChainParams,
                           br_side: str | None = None,
                           br_eps: complex | None = None) -> complex:
    """(log 𝔞)′(ν|{λ}), term-wise cotangent sum."""
    z = params.zeta
    total = 2 * params.L * (_cot(nu - 0.5j * z) - _cot(nu + 0.5j * z))
    for side in ("minus", "plus"):
        xi = params.boundary(side).xi
        if side == br_side and br_eps is not None:
            total += cmath.cos(-1j * br_eps) / _guarded_sin(-1j * br_eps)
        else:
            total += _cot(nu + 1j * xi + 0.5j * z)
        total -= _cot(nu - 1j * xi - 0.5j * z)
    total += -2.0 * _cot(1j * z - 2 * nu) - 2.0 * _cot(1j * z + 2 * nu)
    for lam in roots:
        total += _cot(nu + 1j * z + lam) + _cot(nu + 1j * z - lam)
        total -= _cot(nu - 1j * z + lam) + _cot(nu - 1j * z - lam)
    return total


def exp_counting_prime(nu: complex, roots, params: ChainParams,
                       br_side: str | None = None,
                       br_eps: complex | None = None) -> complex:
    """𝔞′(ν|{λ}) = 𝔞 · (log 𝔞)′ by term-wise differentiation."""
    return (exp_counting(nu, roots, params, br_side, br_eps)
            * exp_counting_log_deriv(nu, roots, params, br_side, br_eps))


def counting_xi(mu: float, roots, params: ChainParams) -> float:
    """ξ̂(μ|{λ}) = p(μ) + [g(μ) − θ(2μ)]/(2L) + (1/2L) Σ_k [θ(μ−λ_k) + θ(μ+λ_k)].

    Real μ; complex boundary roots in {λ} contribute a conjugation-symmetric
    pair, so the value stays real (asserted).
    """
    z, L2 = params.zeta, 2.0 * params.L
    val = complex(fn_p(mu, z))
    val += (fn_g(mu, params.xi_minus, params.xi_plus, z) - fn_theta(2.0 * mu, z)) / L2
    for lam in roots:
        val += (fn_theta(mu - lam, z) + fn_theta(mu + lam, z)) / L2
    if abs(val.imag) > 1e-9:
        raise PoleProximityError(
            f"counting function at mu={mu} has imaginary part {val.imag}")
    return val.real


def spin_reversed(params: ChainParams) -> ChainParams:
    """Image of the parameters under global spin reversal: both fields negate."""
    return ChainParams(params.L, params.zeta, -params.h_minus, -params.h_plus)
