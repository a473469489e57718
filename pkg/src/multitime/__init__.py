"""Multi-time Schroedinger evolution vs. ultrahyperbolic evolution on periodic lattices."""

from .clifford import GammaSet, MetricSignature, build_gamma_set, slash, verify_clifford
from .detection import Hypersurface, born_density, hypersurface_density, total_probability
from .dirac import ParticleKind, evolve_free, hamiltonian_symbol, propagator_symbol
from .lattice import ComplexField, SpatialGrid, forward_dft, inverse_dft, l2_norm, make_grid
from .lorentz import Boost, MultiTimeEvaluator, covariance_residual, transform_state
from .mtd import (
    OverflowGuardError,
    UltrahyperbolicData,
    classify_mode,
    craig_weinstein_filter,
    dirac_mtd_dispersion_check,
    evolve_ultrahyperbolic,
    nonuniqueness_witness,
)
from .mts import (
    MultiTimeState,
    consistency_commutator_norm,
    diagonal_restriction,
    evolve_to,
    initial_state,
    is_spacelike_config,
    single_time_evolve,
)

__version__ = "0.1.0"
