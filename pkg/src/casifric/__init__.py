"""casifric: zero-temperature Casimir friction on a polarizable particle
near a Drude half-space, with every closed form verified against an
independent quadrature oracle."""

from .errors import (
    CasifricError,
    ConvergenceError,
    DomainError,
    MaterialError,
    PoleError,
    QuadratureError,
    UnitError,
    ValidityError,
    ValidityWarning,
)
from .friction import (
    CrossoverResult,
    ForceExponents,
    ForceProvenance,
    ForceResult,
    FrictionScenario,
    LiteratureComparison,
    Mechanism,
    NONRELATIVISTIC_GUARD,
    ParticleHalfspace,
    PlatePlate,
    angular_moment,
    crossover_velocity,
    evaluate_force,
    force_particle_induced,
    force_particle_radiation,
    force_plate_plate,
    literature_comparison,
    overlap_integral_coefficient,
    radial_moment,
)
from .materials import (
    DrudeMetal,
    SurfaceResponse,
    drude_permittivity,
    halfspace_spectral_coefficient,
    im_surface_response_lowfreq,
    load_materials,
    surface_response,
)
from .oracle import (
    QuadratureResult,
    QuadratureSpec,
    Scheme,
    force_numeric,
    integrate,
    j_numeric,
)
from .response import (
    IMAGE_AVERAGE_FACTOR,
    IMAGE_AXIS_FACTORS,
    ImagePolarizability,
    OscillatorParticle,
    PairCoupling,
    Provenance,
    RUBIDIUM,
    SpectralDensity,
    alpha_radiation_damped,
    alpha_undamped,
    image_effective_polarizability,
    induced_spectral_coefficient,
    pair_coupling,
    radiation_spectral_coefficient,
    reconstruct_f,
)
from .units import (
    CONSTANTS,
    PhysicalConstants,
    Quantity,
    Unit,
    atomic_polarizability_from_spectroscopic,
    convert,
    convert_polarizability,
    energy_to_angular_frequency,
    resistivity_to_damping_ratio,
)

__version__ = "0.1.0"
