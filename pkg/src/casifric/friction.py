"""Closed-form zero-temperature friction forces.

Geometries: a single particle a distance z0 above a half-space, or a dilute
plate of particles facing a metal half-space at gap d.  Mechanisms: the
particle's own radiation-reaction damping (force ~ v^5) or the image-lag
damping induced by the metal (force ~ v^3, dominant at low velocity).

Everything here is evaluated in Gaussian-CGS and converted at the output
boundary.  For each mechanism the force exists in several algebraically
independent encodings (collapsed constant, assembly from spectral
coefficients and moments, rationalized-unit form); they are kept separate
precisely so unit slips show up as test failures instead of silent factors
of 4*pi.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from scipy.special import beta as _beta_function

from .errors import DomainError, ValidityError, ValidityWarning
from .materials import DrudeMetal
from .response import (
    OscillatorParticle,
    Provenance,
    SpectralDensity,
    induced_spectral_coefficient,
    radiation_spectral_coefficient,
)
from .units import C_CGS, HBAR_CGS, Quantity, Unit

#: Velocities above this fraction of c are outside the nonrelativistic
#: treatment; strict evaluations refuse them, non-strict ones warn.
NONRELATIVISTIC_GUARD = 1e-3


class Mechanism(Enum):
    RADIATION = "radiation_reaction"
    INDUCED = "induced_image"


class ForceProvenance(Enum):
    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"


@dataclass(frozen=True)
class ParticleHalfspace:
    """Single particle at height z0 (cm) above the half-space."""

    z0: float

    def __post_init__(self):
        if not self.z0 > 0:
            raise DomainError("z0 must be > 0")

    @property
    def gap(self) -> float:
        return self.z0


@dataclass(frozen=True)
class PlatePlate:
    """Dilute particle plate (density rho1, cm^-3) facing the metal at gap d.

    rho2 is the metal's number density; it cancels identically in every
    force (the half-space density coefficient carries 1/rho2), so it may be
    omitted, in which case the metal record's density or 1.0 is used.
    """

    d: float
    rho1: float
    rho2: float | None = None

    def __post_init__(self):
        if not self.d > 0:
            raise DomainError("gap d must be > 0")
        if not self.rho1 > 0:
            raise DomainError("rho1 must be > 0")
        if self.rho2 is not None and not self.rho2 > 0:
            raise DomainError("rho2 must be > 0 when given")

    @property
    def gap(self) -> float:
        return self.d


@dataclass(frozen=True)
class FrictionScenario:
    """One force evaluation: geometry + velocity (cm/s) + mechanism + bodies."""

    geometry: ParticleHalfspace | PlatePlate
    velocity: float
    mechanism: Mechanism
    particle: OscillatorParticle
    metal: DrudeMetal

    def __post_init__(self):
        if self.velocity < 0:
            raise DomainError("velocity must be >= 0 (the force is odd in v at formula level)")
        if self.velocity >= C_CGS:
            raise DomainError("superluminal velocity")


@dataclass(frozen=True)
class ForceExponents:
    """F ~ v^velocity_power / gap^gap_power for this configuration."""

    velocity_power: int
    gap_power: int


@dataclass(frozen=True)
class ForceResult:
    force: Quantity
    mechanism: Mechanism
    provenance: ForceProvenance
    exponents: ForceExponents

    @property
    def per_area(self) -> bool:
        return self.force.unit in (Unit.NEWTON_PER_M2, Unit.DYNE_PER_CM2)

    @property
    def newtons(self) -> float:
        """SI value: N for a particle force, N/m^2 for a plate force."""
        target = Unit.NEWTON_PER_M2 if self.per_area else Unit.NEWTON
        return self.force.to(target).value

    @property
    def dynes(self) -> float:
        """CGS value: dyn for a particle force, dyn/cm^2 for a plate force."""
        target = Unit.DYNE_PER_CM2 if self.per_area else Unit.DYNE
        return self.force.to(target).value


def _guard_velocity(v: float, strict: bool) -> None:
    if v >= C_CGS:
        raise DomainError("superluminal velocity")
    if v > NONRELATIVISTIC_GUARD * C_CGS:
        msg = (f"v = {v:.3e} cm/s exceeds the nonrelativistic guard "
               f"{NONRELATIVISTIC_GUARD:g} c")
        if strict:
            raise ValidityError(msg)
        warnings.warn(msg, ValidityWarning, stacklevel=3)


# ---------------------------------------------------------------------------
# moment integrals
# ---------------------------------------------------------------------------

def overlap_integral_coefficient(p: float, r: float) -> float:
    """B(p+1, r+1): the frequency-splitting integral of two power laws.

    int_0^w w1^p (w - w1)^r dw1 = w^(p+r+1) * B(p+1, r+1); the cubic-linear
    pairing gives the familiar 1/20.
    """
    if p <= -1 or r <= -1:
        raise DomainError("exponents must exceed -1")
    return float(_beta_function(p + 1.0, r + 1.0))


def angular_moment(n: int) -> float:
    """(1/2pi) int_0^2pi cos^n(phi) dphi = (n-1)!!/n!! for even n.

    Odd n integrates to zero by symmetry; that is a value, not an error.
    """
    if n < 0 or n != int(n):
        raise DomainError("n must be a nonnegative integer")
    n = int(n)
    if n % 2 == 1:
        return 0.0
    num = den = 1.0
    for k in range(2, n + 1, 2):
        num *= k - 1
        den *= k
    return num / den


def radial_moment(n: int, d: float) -> float:
    """int_0^inf q^n e^(-2qd) 2 pi q dq = 2 pi (n+1)! / (2d)^(n+2)."""
    if n < 0 or n != int(n):
        raise DomainError("n must be a nonnegative integer")
    if not d > 0:
        raise DomainError("d must be > 0")
    return 2.0 * math.pi * math.factorial(int(n) + 1) / (2.0 * d) ** (n + 2)


# ---------------------------------------------------------------------------
# closed forms, CGS floats (odd in v by construction)
# ---------------------------------------------------------------------------

def radiation_particle_coefficient(alpha0: float, damping_ratio: float, v: float) -> float:
    """A in F = -A/z0^9 for the radiation-reaction mechanism, dyne cm^9.

        A = 105 hbar (nu/omega_p^2) alpha0^2 v^5 / (32 pi c^3)

    Odd in v, so the force opposes the motion for either sign.
    """
    return (105.0 / (32.0 * math.pi)) * HBAR_CGS * damping_ratio * alpha0**2 * v**5 / C_CGS**3


def radiation_particle_force(alpha0: float, damping_ratio: float, v: float, z0: float) -> float:
    """Radiation-reaction friction on one particle, in dynes (<= 0 for v >= 0)."""
    return -radiation_particle_coefficient(alpha0, damping_ratio, v) / z0**9


def induced_particle_coefficient(alpha0: float, damping_ratio: float, v: float, z0: float) -> float:
    """A in F = -A/z0^7 for the image-lag mechanism, dyne cm^7.

        A = 135 alpha0^2 (hbar nu)^2 (hbar v)^3 / (2^8 pi (hbar omega_p)^4 z0^3)
          = 135 hbar alpha0^2 (nu/omega_p^2)^2 v^3 / (256 pi z0^3)

    The z0^3 inside A comes from the image coupling; the net force scales
    as v^3/z0^10.
    """
    return (135.0 / (256.0 * math.pi)) * HBAR_CGS * alpha0**2 * damping_ratio**2 * v**3 / z0**3


def induced_particle_force(alpha0: float, damping_ratio: float, v: float, z0: float) -> float:
    """Image-lag friction on one particle, in dynes (<= 0 for v >= 0)."""
    return -induced_particle_coefficient(alpha0, damping_ratio, v, z0) / z0**7


def induced_particle_force_heaviside_lorentz(alpha0: float, damping_ratio: float,
                                             v: float, z0: float) -> float:
    """Same force assembled in rationalized (Heaviside-Lorentz) bookkeeping.

        F = -135 alpha_HL^2 v^3 / (4 pi^3 sigma_c^2 (2 z0)^10)

    with the conductivity sigma_c = omega_p^2/nu, alpha_HL = 4 pi alpha0
    (the rationalized polarizability), and one power of hbar restored
    dimensionally.  Kept as an independent expression tree so the 4*pi
    bookkeeping between unit systems is cross-checked numerically.
    """
    alpha_hl = 4.0 * math.pi * alpha0
    return (-135.0 * alpha_hl**2 * v**3 * damping_ratio**2 * HBAR_CGS
            / (4.0 * math.pi**3 * (2.0 * z0) ** 10))


def _halfspace_strength(metal: DrudeMetal) -> float:
    """rho * D, the density-cancelled half-space coupling, cm^3/erg per cm^-3.

    Equals (nu/omega_p^2) / (pi^2 hbar); the only way the metal enters the
    assembled force formulas.
    """
    return metal.damping_ratio / (math.pi**2 * HBAR_CGS)


def _pair_strength(c1: float, p1: float, c2: float, p2: float) -> tuple[float, int]:
    """Pair dissipation strength H and total frequency power n.

    J(w_v)/(2 tau) = H * |w_v|^n with
        H = pi hbar^(p1+p2+1) c1 c2 B(p1+1, p2+1),  n = p1 + p2 + 2.
    """
    n = p1 + p2 + 2.0
    if abs(n - round(n)) > 1e-12:
        raise DomainError("combined exponent must be an integer for the moment assembly")
    h = math.pi * HBAR_CGS ** (p1 + p2 + 1.0) * c1 * c2 * overlap_integral_coefficient(p1, p2)
    return h, int(round(n))


def particle_force_from_densities(c1: float, p1: float, metal: DrudeMetal,
                                  v: float, z0: float) -> float:
    """Single-particle force assembled layer by layer (dynes):

        F = -2 * a_n * H * v^(n-1) * radial_moment(n+1, z0)

    where a_n is the angular moment of cos^n and H the pair strength of the
    particle density (c1, p1) against the half-space density.
    """
    h, n = _pair_strength(c1, p1, _halfspace_strength(metal), 1.0)
    return -2.0 * angular_moment(n) * h * v ** (n - 1) * radial_moment(n + 1, z0)


def plate_force_from_densities(c1: float, p1: float, rho1: float, metal: DrudeMetal,
                               v: float, d: float) -> float:
    """Plate-plate force per unit area assembled layer by layer (dyne/cm^2):

        F = -rho1 * a_n * H * v^(n-1) * radial_moment(n, d)
    """
    h, n = _pair_strength(c1, p1, _halfspace_strength(metal), 1.0)
    return -rho1 * angular_moment(n) * h * v ** (n - 1) * radial_moment(n, d)


def radiation_particle_force_from_spectra(particle: OscillatorParticle, metal: DrudeMetal,
                                          v: float, z0: float) -> float:
    """Radiation-mechanism particle force via the B-coefficient assembly."""
    b = radiation_spectral_coefficient(particle)
    return particle_force_from_densities(b.coefficient, b.exponent, metal, v, z0)


def induced_particle_force_from_spectra(particle: OscillatorParticle, metal: DrudeMetal,
                                        v: float, z0: float) -> float:
    """Image-lag particle force via the D1-coefficient assembly."""
    d1 = induced_spectral_coefficient(particle, metal, z0)
    return particle_force_from_densities(d1.coefficient, d1.exponent, metal, v, z0)


# ---------------------------------------------------------------------------
# scenario-level API
# ---------------------------------------------------------------------------

def _force_result(force_dyn: float, mechanism: Mechanism,
                  exponents: ForceExponents, *, per_area: bool = False,
                  provenance: ForceProvenance = ForceProvenance.CLOSED_FORM) -> ForceResult:
    if per_area:
        force = Quantity(force_dyn, Unit.DYNE_PER_CM2).to(Unit.NEWTON_PER_M2)
    else:
        force = Quantity(force_dyn, Unit.DYNE).to(Unit.NEWTON)
    return ForceResult(force, mechanism, provenance, exponents)


def force_particle_radiation(s: FrictionScenario, *, strict: bool = True) -> ForceResult:
    """Radiation-reaction friction on a particle above a half-space.

        F = -A/z0^9,  A = 105 hbar nu alpha0^2 v^5 / (32 pi omega_p^2 c^3)
    """
    if not isinstance(s.geometry, ParticleHalfspace):
        raise DomainError("force_particle_radiation requires particle_halfspace geometry")
    _guard_velocity(s.velocity, strict)
    f = radiation_particle_force(s.particle.alpha0, s.metal.damping_ratio,
                                 s.velocity, s.geometry.z0)
    return _force_result(f, Mechanism.RADIATION, ForceExponents(5, 9))


def force_particle_induced(s: FrictionScenario, *, strict: bool = True) -> ForceResult:
    """Image-lag friction on a particle above a half-space.

        F = -A/z0^7,  A = 135 alpha0^2 (hbar nu)^2 (hbar v)^3
                          / (2^8 pi (hbar omega_p)^4 z0^3)

    (net scaling v^3/z0^10).
    """
    if not isinstance(s.geometry, ParticleHalfspace):
        raise DomainError("force_particle_induced requires particle_halfspace geometry")
    _guard_velocity(s.velocity, strict)
    f = induced_particle_force(s.particle.alpha0, s.metal.damping_ratio,
                               s.velocity, s.geometry.z0)
    return _force_result(f, Mechanism.INDUCED, ForceExponents(3, 10))


def force_plate_plate(s: FrictionScenario, *, strict: bool = True,
                      d1_convention: str = "constant",
                      d1_reference_gap: float | None = None) -> ForceResult:
    """Friction per unit area between a dilute particle plate and the metal.

    Radiation mechanism:  F = -rho1 rho2 315 pi^2 hbar^5 B D v^5 / (2^9 d^8)
    Image-lag mechanism:  F = -(15 pi^2 / 64 d^6) rho1 D1 rho2 D (hbar v)^3

    For the image-lag case D1 depends on separation; ``d1_convention``
    selects how it enters the plate integral:

    * "constant" (default): D1 frozen at ``d1_reference_gap`` (the gap d by
      default), reproducing the printed d^-6 form;
    * "integrated": D1 allowed to vary with separation inside the layer
      integral, which multiplies the constant form by 6/9.
    """
    if not isinstance(s.geometry, PlatePlate):
        raise DomainError("force_plate_plate requires plate_plate geometry")
    _guard_velocity(s.velocity, strict)
    geo = s.geometry
    if s.mechanism is Mechanism.RADIATION:
        b = radiation_spectral_coefficient(s.particle)
        f = plate_force_from_densities(b.coefficient, b.exponent, geo.rho1,
                                       s.metal, s.velocity, geo.d)
        return _force_result(f, Mechanism.RADIATION, ForceExponents(5, 8), per_area=True)
    if d1_convention not in ("constant", "integrated"):
        raise DomainError("d1_convention must be 'constant' or 'integrated'")
    ref = geo.d if d1_reference_gap is None else d1_reference_gap
    d1 = induced_spectral_coefficient(s.particle, s.metal, ref)
    f = plate_force_from_densities(d1.coefficient, d1.exponent, geo.rho1,
                                   s.metal, s.velocity, geo.d)
    if d1_convention == "integrated":
        f *= 6.0 / 9.0
    return _force_result(f, Mechanism.INDUCED, ForceExponents(3, 6), per_area=True)


def evaluate_force(s: FrictionScenario, *, strict: bool = True, **plate_kwargs) -> ForceResult:
    """Dispatch a scenario to the matching closed form."""
    if isinstance(s.geometry, PlatePlate):
        return force_plate_plate(s, strict=strict, **plate_kwargs)
    if s.mechanism is Mechanism.RADIATION:
        return force_particle_radiation(s, strict=strict)
    return force_particle_induced(s, strict=strict)


# ---------------------------------------------------------------------------
# crossover and literature ratios
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossoverResult:
    """Velocity at which the two particle mechanisms are equal in magnitude.

    Below the crossover the image-lag force (odd cubic) dominates; above
    it the radiation-reaction force (odd quintic) does.  When the crossover
    lies beyond the nonrelativistic guard the dominance verdict is the
    usable output, not the velocity.
    """

    velocity: Quantity
    within_nonrelativistic_guard: bool
    dominant_below: Mechanism
    note: str


def crossover_velocity(p: OscillatorParticle, metal: DrudeMetal, z0: float) -> CrossoverResult:
    """Solve |F_radiation(v*)| = |F_induced(v*)| at fixed z0.

        v*^2 = (135/840) (nu/omega_p^2) c^3 / z0

    from the ratio of the two closed forms (alpha0 cancels).
    """
    if not z0 > 0:
        raise DomainError("z0 must be > 0")
    v_star = math.sqrt((135.0 / 840.0) * metal.damping_ratio * C_CGS**3 / z0)
    within = v_star <= NONRELATIVISTIC_GUARD * C_CGS
    if within:
        note = "crossover is nonrelativistic; both regimes are reachable"
    else:
        note = ("crossover exceeds the nonrelativistic guard: the image-lag "
                "mechanism dominates at every velocity this model covers")
    return CrossoverResult(Quantity(v_star, Unit.CENTIMETER_PER_SECOND),
                           within, Mechanism.INDUCED, note)


@dataclass(frozen=True)
class LiteratureComparison:
    """Fixed published ratios for the two-half-space T = 0 force."""

    ours: float
    volokitin_persson: float
    pendry: float
    barton: float
    note: str = ("Barton's zeta(5) = 1.037 factor is disregarded; "
                 "Barton equals ours exactly under that convention")


def literature_comparison(force) -> LiteratureComparison:
    """Scale a reference two-plate force by the published ratio table:
    Volokitin-Persson = F/2, Pendry = F/12, Barton = F."""
    f = getattr(force, "value", None)
    if f is None:
        f = getattr(force, "newtons", force)
    f = float(f)
    return LiteratureComparison(ours=f, volokitin_persson=f / 2.0,
                                pendry=f / 12.0, barton=f)
