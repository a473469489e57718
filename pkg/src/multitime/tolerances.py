"""Pass/fail thresholds shared by the scenario runner and the test suite."""

TOLERANCES = {
    # multi-time evolution
    "norm_ratio": 1e-10,
    "path_residual": 1e-10,
    "flow_residual": 1e-10,
    "commutator_relative": 1e-11,
    "diagonal_max": 1e-10,
    # second-order identities
    "order_target": 2.0,
    "order_halfwidth": 0.1,
    "identity_residual_h1e-2": 2e-3,
    "zero_mode_abs": 1e-10,
    # ultrahyperbolic equation
    "growth_rate_relative": 0.02,
    "mode_energy_relative": 1e-10,
    "cw_bound_slack": 1e-8,
    "unfiltered_exponent_fraction": 0.9,
    "reversibility": 1e-10,
    "filter_idempotence": 1e-12,
    "witness_residual_h1e-3": 1e-5,
    # algebra
    "clifford_deviation": 0.0,
    "slash_square": 1e-14,
    # detection
    "flat_density": 1e-12,
    "flat_probability": 1e-9,
    "tilted_probability": 1e-4,
    "density_floor": -1e-10,
    "boundary_density": 1e-12,
    # frames
    "group_identity": 1e-12,
    "plane_wave_covariance": 1e-6,
}
