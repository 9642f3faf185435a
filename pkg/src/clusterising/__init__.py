"""Exact results for the one-dimensional cluster-Ising chain.

``H = -sum X_{j-1} Z_j X_{j+1} + lam sum Y_j Y_{j+1}``, solved by a
Jordan-Wigner mapping to free fermions, with an exact-diagonalization
oracle for finite rings.
"""

from .correlations import (
    KernelTable,
    correlator_x,
    correlator_y,
    correlator_z,
    kernel_D,
    magnetization_z,
    selection_rule_allows,
)
from .entanglement import (
    MajoranaCorrMatrix,
    OneSpinState,
    TwoSpinState,
    block_entropies,
    block_entropy,
    central_charge_fit,
    concurrence,
    majorana_corr_matrix,
    self_dual_intercept,
    tangle_broken,
    tangle_thermal,
    two_spin_state,
)
from .errors import CIMError, DomainError, EigensolverError, FitError, QuadratureError
from .exact_diag import (
    GroundManifold,
    SpinHamiltonian,
    build_hamiltonian,
    ed_block_entropy,
    ed_concurrence,
    ed_correlator,
    ed_magnetization_z,
    finite_size_scaling,
    ground_manifold,
    solve,
)
from .model_core import (
    THERMODYNAMIC,
    Boundary,
    Dispersion,
    ModelParams,
    ModeSpectrum,
    dispersion_at,
    energy_gap,
    finite_spectrum,
    free_majorana_count,
    triple_ising_split,
)
from .order_params import beta_exponent_fit, staggered_my, string_order_Oz, szego_sum
from .sweep import Quantity, ResultRecord, SweepConfig, emit, figure_recipes, run_sweep
from .thermodynamics import (
    EllipticPair,
    FreeEnergyResult,
    d2f_closed_form,
    elliptic_KE,
    free_energy,
    ising_free_energy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
