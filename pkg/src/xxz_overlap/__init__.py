"""Ground-state overlaps of the open XXZ spin-1/2 chain under a change of
one boundary magnetic field: finite-size Bethe-ansatz determinants, an
exact-diagonalization oracle, and thermodynamic-limit q-series closed forms.
"""

from .model import ChainParams, Regime, boundary_param, classify, critical_fields
from .bethe import BetheRoots, solve_ground_state, energy, density_rho
from .ed import ed_overlap, ground_state
from .thermo import ThermoOverlap, overlap_thermo, spin_reversal_image
from .overlap import overlap_normalized, overlap_product_form, norm_determinant

__all__ = [
    "ChainParams", "Regime", "boundary_param", "classify", "critical_fields",
    "BetheRoots", "solve_ground_state", "energy", "density_rho",
    "ed_overlap", "ground_state",
    "ThermoOverlap", "overlap_thermo", "spin_reversal_image",
    "overlap_normalized", "overlap_product_form", "norm_determinant",
]

__version__ = "0.1.0"
