"""Thermodynamic-limit overlaps in closed form.

The half-infinite-chain overlap after a change of the left boundary field
depends only on q = e^(−ζ) and the two signed boundary parameters
p_i = e^(−2ξ_i⁻) = (−1)^{δ_i} e^{2ξ̃_i}.  The final expression is a ratio of
double q-Pochhammer symbols,

    S = (p₁^{2ε}q²; q⁴,q⁴) (p₂^{2ε}q²; q⁴,q⁴) ((p₁p₂)^ε q⁴; q⁴,q⁴)²
        ─────────────────────────────────────────────────────────────
        (p₁^{2ε}q⁴; q⁴,q⁴) (p₂^{2ε}q⁴; q⁴,q⁴) ((p₁p₂)^ε q²; q⁴,q⁴)²

with ε = +1 when both left fields lie below the h⁺-reference of the case
table and ε = −1 (equivalently p_i → 1/p_i) when both lie above; when they
straddle it the two ground states disagree macroscopically and the overlap
vanishes (identically for odd L, to all orders in 1/L for even L).

The auxiliary function 𝔞₊ solving the shift equation
𝔞₊(u)·𝔞₊(uq²) = RHS(u) is provided for every regime variant, together with
the transfer-eigenvalue ratio χ it determines at the real roots.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DomainError, UnclassifiedConfigurationError
from .model import ChainParams, classify, spin_reversed
from .specialfns import qpoch, qpoch2

VARIANTS = ("real_roots", "br_plus_plus", "br_minus_minus", "br_minus_single")


@dataclass(frozen=True)
class QSeriesParams:
    """Inputs of the q-series layer: nome and signed boundary parameters."""

    q: float
    p1: float
    p2: float
    epsilon_sign: int = 1
    variant: str = "real_roots"

    def __post_init__(self):
        if not (0.0 < self.q < 1.0):
            raise DomainError(f"nome q={self.q} outside (0,1)")
        if self.epsilon_sign not in (-1, 1):
            raise DomainError("epsilon_sign must be +-1")
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown variant {self.variant}")

    @classmethod
    def from_pair(cls, params1: ChainParams, params2: ChainParams,
                  epsilon_sign: int = 1, variant: str = "real_roots"):
        return cls(q=params1.nome.q, p1=params1.bp_minus.p, p2=params2.bp_minus.p,
                   epsilon_sign=epsilon_sign, variant=variant)


def _check_disc(x: complex, what: str) -> complex:
    if abs(x) >= 1.0:
        raise DomainError(f"{what}: |{x}| >= 1 leaves the convergence domain")
    return x


def a_plus(u: complex, qp: QSeriesParams) -> complex:
    """𝔞₊(u) for the regime variant, built from q-Pochhammer ratios.

    real_roots / br_plus_plus (same closed form, ε fixed to +1 for the
    latter):

        [ (u(p₂q)^ε; q⁴)(uq²(p₁q)^ε; q⁴) / (uq²(p₂q)^ε; q⁴)(u(p₁q)^ε; q⁴) ]^ε

    br_minus_minus:

        (uq/p₂; q⁴)(uq³/p₁; q⁴) / (uq/p₁; q⁴)(uq³/p₂; q⁴) · (1−up₂q)/(1−up₁q)

    br_minus_single (boundary root in state 1 only):

        (uq/p₂; q⁴)(uq³/p₁; q⁴) / (u/(p₂q); q⁴)(uq/p₁; q⁴) · 1/(1−up₁q)
    """
    q, p1, p2 = qp.q, qp.p1, qp.p2
    q4 = q ** 4
    u = complex(u)
    if qp.variant in ("real_roots", "br_plus_plus"):
        eps = qp.epsilon_sign if qp.variant == "real_roots" else 1
        a1 = _check_disc(u * (p2 * q) ** eps, "u(p2 q)^eps")
        a2 = _check_disc(u * (p1 * q) ** eps, "u(p1 q)^eps")
        val = (qpoch(a1, q4) * qpoch(a2 * q * q, q4)
               / (qpoch(a1 * q * q, q4) * qpoch(a2, q4)))
        return val if eps == 1 else 1.0 / val
    if qp.variant == "br_minus_minus":
        b1 = _check_disc(u * q / p2, "u q/p2")
        b2 = _check_disc(u * q / p1, "u q/p1")
        val = qpoch(b1, q4) / qpoch(b2, q4)
        val *= qpoch(b2 * q * q, q4) / qpoch(b1 * q * q, q4)
        val *= (1.0 - _check_disc(u * p2 * q, "u p2 q")) / (1.0 - u * p1 * q)
        return val
    b1 = _check_disc(u * q / p2, "u q/p2")
    b2 = _check_disc(u * q / p1, "u q/p1")
    c1 = _check_disc(u / (p2 * q), "u/(p2 q)")
    val = qpoch(b1, q4) / qpoch(c1, q4)
    val *= qpoch(b2 * q * q, q4) / qpoch(b2, q4)
    val /= (1.0 - _check_disc(u * p1 * q, "u p1 q"))
    return val


def a_plus_radius(qp: QSeriesParams) -> float:
    """Largest |u| keeping every q-Pochhammer argument of 𝔞₊(u) and of the
    shift equation 𝔞₊(u)𝔞₊(uq²) inside the unit disk (with 5% headroom)."""
    q, p1, p2 = qp.q, abs(qp.p1), abs(qp.p2)
    if qp.variant in ("real_roots", "br_plus_plus"):
        eps = qp.epsilon_sign if qp.variant == "real_roots" else 1
        bound = min((p1 * q) ** -eps, (p2 * q) ** -eps)
    elif qp.variant == "br_minus_minus":
        bound = min(p1 / q, p2 / q, 1.0 / (p1 * q), 1.0 / (p2 * q),
                    1.0 / (p1 * q ** 3), 1.0 / (p2 * q ** 3))
    else:
        bound = min(p1 / q, p2 / q, p2 * q, 1.0 / (p1 * q), 1.0 / (p1 * q ** 3))
    # the shifted argument uq² is strictly inside whenever u is
    return 0.95 * bound


def a_plus_shift_rhs(u: complex, qp: QSeriesParams) -> complex:
    """Right-hand side of the shift equation 𝔞₊(u)·𝔞₊(uq²) = RHS(u)."""
    q, p1, p2 = qp.q, qp.p1, qp.p2
    u = complex(u)
    if qp.variant in ("real_roots", "br_plus_plus"):
        eps = qp.epsilon_sign if qp.variant == "real_roots" else 1
        r = (1.0 - u * (p2 * q) ** eps) / (1.0 - u * (p1 * q) ** eps)
        return r if eps == 1 else 1.0 / r
    if qp.variant == "br_minus_minus":
        return ((1.0 - u * p2 * q) / (1.0 - u * p1 * q)
                * (1.0 - u * q / p2) / (1.0 - u * q / p1)
                * (1.0 - u * p2 * q ** 3) / (1.0 - u * p1 * q ** 3))
    return 1.0 / ((1.0 - u * p1 * q) * (1.0 - u / (p2 * q))
                  * (1.0 - u * q / p1) * (1.0 - u * p1 * q ** 3))


def chi_thermo(u_j: complex, qp: QSeriesParams) -> complex:
    """χ(λ_j) = (p₁/p₂)^{ε/2} [𝔞₊(q^{1−ε}u_j) 𝔞₊(q^{1−ε}/u_j)]^ε for a real
    root λ_j with u_j = e^{2iλ_j}."""
    eps = qp.epsilon_sign
    u = complex(u_j)
    shift = qp.q ** (1 - eps)
    val = a_plus(shift * u, qp) * a_plus(shift / u, qp)
    if eps == -1:
        val = 1.0 / val
    return cmath.exp(0.5 * eps * cmath.log(complex(qp.p1 / qp.p2))) * val


@dataclass(frozen=True)
class ThermoOverlap:
    """Thermodynamic-limit overlap with its case provenance."""

    value: float
    case_path: str
    vanishing: bool = False


def _qpoch_ratio(p1: float, p2: float, q: float) -> float:
    """The closed-form double q-Pochhammer ratio at signed p₁, p₂."""
    q2, q4 = q * q, q ** 4
    for x in (p1 * p1 * q2, p2 * p2 * q2, p1 * p2 * q2):
        if abs(x) >= 1.0:
            raise DomainError(f"double q-Pochhammer argument |{x}| >= 1")
    num = qpoch2(p1 * p1 * q2, q4, q4) * qpoch2(p2 * p2 * q2, q4, q4) \
        * qpoch2(p1 * p2 * q4, q4, q4) ** 2
    den = qpoch2(p1 * p1 * q4, q4, q4) * qpoch2(p2 * p2 * q4, q4, q4) \
        * qpoch2(p1 * p2 * q2, q4, q4) ** 2
    return float((num / den).real)


def overlap_thermo(params1: ChainParams, params2: ChainParams) -> ThermoOverlap:
    """Dispatch the final case table on the boundary-field pattern.

    Both parameter sets must share L parity, ζ and h⁺ and classify to gapped
    ground states.  The comparison field is h⁺ for even L and −h⁺ for odd L
    (the two parities coincide under h⁺ → −h⁺).
    """
    if params1.zeta != params2.zeta:
        raise UnclassifiedConfigurationError("pair must share the anisotropy")
    if params1.h_plus != params2.h_plus:
        raise UnclassifiedConfigurationError("pair must share the right field h+")
    if params1.L % 2 != params2.L % 2:
        raise UnclassifiedConfigurationError("pair must share the length parity")
    classify(params1)
    classify(params2)

    q = params1.nome.q
    p1, p2 = params1.bp_minus.p, params2.bp_minus.p
    odd = params1.L % 2 == 1
    href = -params1.h_plus if odd else params1.h_plus
    tag = "odd" if odd else "even"
    h1, h2 = params1.h_minus, params2.h_minus

    if h1 == h2:
        # identical left fields: every numerator/denominator factor cancels
        return ThermoOverlap(value=1.0,
                             case_path=f"{tag}_case_{1 if h1 < href else 3}")
    if h1 < href and h2 < href:
        return ThermoOverlap(value=_qpoch_ratio(p1, p2, q),
                             case_path=f"{tag}_case_1")
    if h1 > href and h2 > href:
        return ThermoOverlap(value=_qpoch_ratio(1.0 / p1, 1.0 / p2, q),
                             case_path=f"{tag}_case_3")
    if h1 == href or h2 == href:
        raise UnclassifiedConfigurationError(
            "a left field sits exactly on the comparison field")
    return ThermoOverlap(value=0.0, case_path=f"{tag}_case_2", vanishing=True)


def spin_reversal_image(params: ChainParams) -> ChainParams:
    """Negate both boundary fields; overlap_thermo is invariant under
    applying this map to both arguments."""
    return spin_reversed(params)


def pair_variant(params1: ChainParams, params2: ChainParams) -> QSeriesParams:
    """QSeriesParams describing the root content of a non-vanishing pair."""
    r1, r2 = classify(params1), classify(params2)
    sides = (r1.boundary_root_side, r2.boundary_root_side)
    if sides == ("none", "none"):
        eps = r1.epsilon_sign
        if r2.epsilon_sign != eps:
            raise UnclassifiedConfigurationError(
                "real-root pair with mixed shift-equation branches")
        return QSeriesParams.from_pair(params1, params2, eps, "real_roots")
    if sides == ("plus", "plus"):
        return QSeriesParams.from_pair(params1, params2, 1, "br_plus_plus")
    if sides == ("minus", "minus"):
        return QSeriesParams.from_pair(params1, params2, -1, "br_minus_minus")
    if sides[0] == "minus" and sides[1] == "none":
        return QSeriesParams.from_pair(params1, params2, -1, "br_minus_single")
    raise UnclassifiedConfigurationError(
        f"no q-series variant for boundary-root pattern {sides}")
