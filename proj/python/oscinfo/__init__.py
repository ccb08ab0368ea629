"""Information and energy densities of the harmonic-oscillator coherent state."""

from ._oscinfo import (
    CheckResult,
    Coordinate,
    EnergyGapTerms,
    MasslessDualReport,
    NumberStateInfo,
    OscillatorConfig,
    all_passed,
    classical_energy,
    coherent_state,
    density_curve,
    differential_entropy,
    energy_density,
    energy_per_info,
    evolve_coherent_state,
    info_constant,
    info_density,
    info_density_fwhm,
    massless_dual_residuals,
    mean_occupation,
    number_info_density,
    number_information,
    on_trajectory_energy_gap,
    probability_density,
    run_verification_suite,
    total_information,
    viscosity_fit_random,
)

__all__ = [name for name in dir() if not name.startswith("_")]
