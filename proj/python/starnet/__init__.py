"""Sequential sharing of n-local chain nonlocality in star networks."""

from ._core import (
    CapacityResult,
    CorrelationReport,
    SharingMode,
    UsageError,
    __version__,
    alice_angles,
    anticommutator_table,
    beta_value,
    bob_angles,
    capacity,
    classical_bound,
    classical_bound_enumerate,
    conservative_capacity_bound,
    critical_bisection,
    critical_sequence,
    degradation_factor,
    degradation_predict,
    initial_threshold,
    omega_values,
    optimize_angles,
    pauli_plane_observable,
    quantum_optimum,
    required_parties,
    run_json,
    simulate_sequence,
    sos_residual,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
