"""No-signaling bounds for phase-covariant cloning, unitary replication,
and Bayesian phase estimation."""

from ._core import (
    ChoiPhaseState,
    CircularDistribution,
    Ensemble,
    MpOperator,
    PhaseAmplitudes,
    SignalVerdict,
    StationarityWindow,
    SteeringProbabilities,
    SymmetricBlockDensity,
    alignment_fidelity,
    apply_phase,
    berry_wiseman_state,
    choi_state,
    clone_map,
    coherence_decay,
    covariant_likelihood,
    default_steering_readout,
    det_1toM,
    det_NtoM_asymptotic,
    diffusion_prior,
    ensemble_density,
    filter_success_prob,
    fourier_component,
    gaussian_state,
    global_clone_fidelity,
    jacobi_theta4,
    max_likelihood_ratio,
    mixture_outcome_density,
    ml_state,
    mp_asymptotic,
    mp_fidelity,
    mp_fidelity_general,
    mp_operator,
    naive_mp_fidelity,
    ns_alignment_fidelity_exact,
    ns_bound_erf,
    ns_compatible,
    ns_diffused_bound,
    ns_global_bound,
    ns_replication_bound,
    ns_step_distribution,
    optimal_input_state,
    prior_error,
    process_fidelity,
    qubit_steering,
    quantum_alignment_fidelity,
    remote_prepare,
    sinc_signal,
    stationarity_window,
    twirl_u1,
    twirl_zn,
    uhlmann_fidelity,
    verify_ns_mixture,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
