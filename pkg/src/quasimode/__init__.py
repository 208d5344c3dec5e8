"""Exactly solvable charge + single-mode-field model: quasimode dispersion,
plasma optics, velocities, energy spectrum, zero-point plate force, and a
number-basis verification oracle."""

from .dispersion import (
    Branch,
    ComplexWavenumber,
    CriticalPoints,
    DispersionPoint,
    Regime,
    classify_regime,
    critical_points,
    k_branches,
    omega_of_k,
    omega_physical,
)
from .errors import DomainError
from .fock import (
    FockHamiltonian,
    HamiltonianVariant,
    VerificationReport,
    build_dipole_hamiltonian,
    build_planewave_hamiltonian,
    default_verification_cases,
    hermitian_eigenvalues,
    lowest_eigenvalues,
    verify_spectrum,
)
from .kinematics import (
    VelocityPoint,
    group_velocity,
    phase_velocity,
    superluminal_backward_threshold,
)
from .optics import (
    OpticalResponse,
    dielectric,
    optical_response,
    reflectivity,
    refractive_index,
)
from .params import (
    ATOMIC_C,
    DerivedConstants,
    ModelParams,
    derived_constants,
    ellipticity_kappa,
    plasma_frequency_from_volume,
    polarization_weight,
)
from .plates import (
    PlateGeometry,
    force_at_minimum,
    force_general,
    force_minimum_bohr_form,
    force_minimum_plasma_form,
    plasma_frequency_plates,
)
from .spectrum import (
    EnergyLevel,
    Momentum,
    bogoliubov_theta,
    displacement_sigma_sq,
    effective_frequency,
    energy_cp,
    energy_level,
    energy_lp,
    zero_point_minimum,
)

__version__ = "0.1.0"

__all__ = [
    "ATOMIC_C",
    "Branch",
    "ComplexWavenumber",
    "CriticalPoints",
    "DerivedConstants",
    "DispersionPoint",
    "DomainError",
    "EnergyLevel",
    "FockHamiltonian",
    "HamiltonianVariant",
    "ModelParams",
    "Momentum",
    "OpticalResponse",
    "PlateGeometry",
    "Regime",
    "VelocityPoint",
    "VerificationReport",
    "bogoliubov_theta",
    "build_dipole_hamiltonian",
    "build_planewave_hamiltonian",
    "classify_regime",
    "critical_points",
    "default_verification_cases",
    "derived_constants",
    "dielectric",
    "displacement_sigma_sq",
    "effective_frequency",
    "ellipticity_kappa",
    "energy_cp",
    "energy_level",
    "energy_lp",
    "force_at_minimum",
    "force_general",
    "force_minimum_bohr_form",
    "force_minimum_plasma_form",
    "hermitian_eigenvalues",
    "k_branches",
    "lowest_eigenvalues",
    "omega_of_k",
    "omega_physical",
    "optical_response",
    "phase_velocity",
    "plasma_frequency_from_volume",
    "plasma_frequency_plates",
    "polarization_weight",
    "reflectivity",
    "refractive_index",
    "superluminal_backward_threshold",
    "verify_spectrum",
    "zero_point_minimum",
]
