"""Particle polarizability models and their oscillator spectral densities.

Three damping mechanisms feed the friction integrals, and each one reduces
at low frequency to a power-law density alpha_I(m^2) m^2 = c * m^p in the
energy variable m = hbar*omega:

* radiation reaction of the free particle      -> c = B,  p = 3
* dissipation inside the metal half-space      -> c = D,  p = 1
* image-lag damping induced by the half-space  -> c = D1, p = 1

The sign convention is fixed by passivity: densities are extracted as
+(1/pi) times the dissipative (positive) part of the response at real
frequency, so every coefficient here is nonnegative.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from .errors import ConvergenceError, DomainError, PoleError, ValidityError, ValidityWarning
from .units import C_CGS, HBAR_CGS, KB_CGS

#: Relative image strength per axis (x, y, z): the normal component of an
#: image dipole couples twice as strongly as the tangential ones.
IMAGE_AXIS_FACTORS = (1.0, 1.0, 2.0)

#: Weighted scalar average of the axis factors, (n_x + n_y + 2 n_z)/4 = 3/2.
#: The z axis counts double both in its own factor and in the average,
#: mirroring the anisotropy of the surface Green's function; kept as a
#: named constant because this weighting is exactly where independent
#: derivations of the image-damping force have historically disagreed.
IMAGE_AVERAGE_FACTOR = (IMAGE_AXIS_FACTORS[0] + IMAGE_AXIS_FACTORS[1] + 2.0 * IMAGE_AXIS_FACTORS[2]) / 4.0

#: Leading-order formulas are trusted only a factor 10 below their scale.
DEFAULT_WINDOW_FACTOR = 10.0


class Provenance(Enum):
    HALFSPACE = "halfspace"
    RADIATION = "radiation"
    INDUCED = "induced"


@dataclass(frozen=True)
class OscillatorParticle:
    """A polarizable particle modelled as a single harmonic oscillator.

    alpha0 : static polarizability in cm^3 (Gaussian)
    omega0 : resonance frequency in rad/s; optional because the static
             friction coefficients depend on alpha0 alone, but any
             frequency-dependent evaluation requires it.
    """

    alpha0: float
    omega0: float | None = None
    label: str = ""

    def __post_init__(self):
        if not self.alpha0 > 0:
            raise DomainError("alpha0 must be > 0")
        if self.omega0 is not None and not self.omega0 > 0:
            raise DomainError("omega0 must be > 0 when specified")


#: Rubidium ground-state particle: static polarizability 47.3 A^3.  The
#: resonance frequency is left unset; none of the shipped force formulas
#: need it.
RUBIDIUM = OscillatorParticle(alpha0=47.3e-24, label="rubidium")


@dataclass(frozen=True)
class SpectralDensity:
    """Power-law oscillator-strength density alpha_I(m^2) m^2 = c * m^p.

    coefficient    : c, in Gaussian-CGS units appropriate to the exponent
                     (cm^3 erg^-p).
    exponent       : p; the shipped mechanisms use 1 or 3 but any p > 0 is
                     representable.
    validity_max_m : energy (erg) below which the power law is trusted;
                     None when the window cannot be stated (e.g. a metal
                     known only by resistivity).
    """

    coefficient: float
    exponent: float
    provenance: Provenance
    validity_max_m: float | None = None

    def __post_init__(self):
        if self.coefficient < 0:
            raise DomainError("density coefficient must be >= 0")
        if not self.exponent > 0:
            raise DomainError("density exponent must be > 0")

    def alpha_im_m2(self, m: float) -> float:
        """alpha_I(m^2) * m^2 = c * m^p."""
        return self.coefficient * m**self.exponent

    def alpha_I_m(self, m: float) -> float:
        """alpha_I(m^2) * m = c * m^(p-1); finite at m=0 for p >= 1."""
        return self.coefficient * m ** (self.exponent - 1.0)


def _window_check(omega, scale, what, strict, window_factor):
    if scale is None:
        msg = f"{what}: validity window unknown (missing frequency scale)"
        if strict:
            raise ValidityError(msg)
        warnings.warn(msg, ValidityWarning, stacklevel=3)
        return
    if omega != 0.0 and omega >= scale / window_factor:
        msg = (f"{what}: omega={omega:.3e} rad/s outside validity window "
               f"omega < {scale:.3e}/{window_factor:g}")
        if strict:
            raise ValidityError(msg)
        warnings.warn(msg, ValidityWarning, stacklevel=3)


def alpha_undamped(p: OscillatorParticle, omega: float) -> float:
    """Undamped oscillator polarizability alpha0 w0^2 / (w0^2 - w^2)."""
    if p.omega0 is None:
        raise DomainError("particle resonance frequency omega0 is required")
    if omega == p.omega0:
        raise PoleError("undamped polarizability diverges at omega = omega0")
    return p.alpha0 * p.omega0**2 / (p.omega0**2 - omega**2)


def alpha_radiation_damped(p: OscillatorParticle, omega: float, *,
                           strict: bool = True,
                           window_factor: float = DEFAULT_WINDOW_FACTOR) -> complex:
    """Low-frequency polarizability with radiation-reaction damping.

        alpha_e(w) = alpha0 / (1 + (2/3) i (w/c)^3 alpha0)

    valid for w well below the resonance, where the bare polarizability can
    be frozen at alpha0.  The imaginary part is negative and O(w^3); to
    first order alpha_e = alpha0 (1 - (2/3) i m^3 alpha0/(hbar c)^3).
    """
    if omega < 0:
        raise DomainError("omega must be >= 0")
    _window_check(omega, p.omega0, "radiation-damped polarizability", strict, window_factor)
    x = (2.0 / 3.0) * (omega / C_CGS) ** 3 * p.alpha0
    return p.alpha0 / (1.0 + 1j * x)


def radiation_spectral_coefficient(p: OscillatorParticle) -> SpectralDensity:
    """Cubic density of the radiation-reaction mechanism.

    B = 2 alpha0^2 / (3 pi (hbar c)^3), so alpha_I(m^2) m^2 = B m^3.
    """
    b = 2.0 * p.alpha0**2 / (3.0 * math.pi * (HBAR_CGS * C_CGS) ** 3)
    validity = HBAR_CGS * p.omega0 / DEFAULT_WINDOW_FACTOR if p.omega0 is not None else None
    return SpectralDensity(b, 3.0, Provenance.RADIATION, validity)


@dataclass(frozen=True)
class ImagePolarizability:
    """Exact per-axis image-modified polarizabilities plus the weighted
    first-order scalar alpha0 - alpha0^2 sigma <n> / (2 z0)^3."""

    per_axis: tuple[complex, complex, complex]
    first_order: complex
    expansion_parameter: float
    series_valid: bool


def image_effective_polarizability(p: OscillatorParticle, sigma, z0: float, *,
                                   strict: bool = True) -> ImagePolarizability:
    """Polarizability of the particle dressed by its image in a half-space.

    Per axis i the inverse polarizability shifts by the image coupling,

        1/alpha_ei = 1/alpha0 + sigma n_i / (2 z0)^3,  n = (1, 1, 2),

    and the scalar first-order form uses the weighted mean <n> = 3/2.  The
    exact per-axis values are always returned; the first-order series is
    flagged (or rejected, in strict mode) once |alpha0 sigma n_i / (2 z0)^3|
    reaches 1.
    """
    if not z0 > 0:
        raise DomainError("z0 must be > 0")
    s = getattr(sigma, "value", sigma)
    shift = s / (2.0 * z0) ** 3
    per_axis = tuple(1.0 / (1.0 / p.alpha0 + shift * n) for n in IMAGE_AXIS_FACTORS)
    param = abs(p.alpha0 * shift)
    series_valid = param * max(IMAGE_AXIS_FACTORS) < 1.0
    if not series_valid:
        msg = (f"image-polarizability series parameter alpha0*sigma/(2 z0)^3 = {param:.3e} "
               "is too large for the first-order form (exact per-axis values remain usable)")
        if strict:
            raise ValidityError(msg)
        warnings.warn(msg, ValidityWarning, stacklevel=2)
    first_order = p.alpha0 - p.alpha0**2 * shift * IMAGE_AVERAGE_FACTOR
    return ImagePolarizability(per_axis, first_order, param, series_valid)


def induced_spectral_coefficient(p: OscillatorParticle, metal, z0: float) -> SpectralDensity:
    """Linear density of the image-lag (induced) damping mechanism.

        D1 = 3 alpha0^2 hbar nu / (8 pi z0^3 (hbar omega_p)^2)
           = 3 alpha0^2 (nu/omega_p^2) / (8 pi z0^3 hbar)

    Only the combination nu/omega_p^2 enters, so a resistivity-only metal
    works here.
    """
    if not z0 > 0:
        raise DomainError("z0 must be > 0")
    ratio = metal.damping_ratio
    d1 = 3.0 * p.alpha0**2 * ratio / (8.0 * math.pi * z0**3 * HBAR_CGS)
    scales = [HBAR_CGS * w / DEFAULT_WINDOW_FACTOR
              for w in (getattr(metal, "nu", None), p.omega0) if w is not None]
    return SpectralDensity(d1, 1.0, Provenance.INDUCED, min(scales) if scales else None)


def reconstruct_f(d: SpectralDensity, K2: float, spec=None) -> float:
    """Rebuild the imaginary-axis response from its spectral density,

        f(K^2) = integral of alpha_I(m^2) m^2 / (K^2 + m^2) d(m^2)

    over m in (0, validity_max_m], evaluated by adaptive quadrature in the
    rescaled variable x = m/M so the integrand is O(1).
    """
    if not K2 > 0:
        raise DomainError("K2 must be > 0 (imaginary-frequency axis)")
    if d.validity_max_m is None or not math.isfinite(d.validity_max_m):
        raise DomainError("density must declare a finite validity cutoff")
    from . import oracle  # local import: oracle imports this module's types

    m_max = d.validity_max_m
    c, p = d.coefficient, d.exponent

    def integrand(x):
        return x ** (p + 1.0) / (K2 + (m_max * x) ** 2)

    res = oracle.integrate(integrand, 0.0, 1.0, spec)
    if not res.converged:
        raise ConvergenceError(
            f"reconstruct_f quadrature did not converge (error estimate {res.error_estimate:.3e})",
            estimate=2.0 * c * m_max ** (p + 2.0) * res.value,
            error_estimate=res.error_estimate,
        )
    return 2.0 * c * m_max ** (p + 2.0) * res.value


@dataclass(frozen=True)
class PairCoupling:
    """Temperature-dependent pair coefficients for two oscillators.

    C_plus/C_minus weight the sum- and difference-frequency dissipation
    channels; at T = 0 the difference channel closes (C_minus = 0) and
    C_plus = hbar w1 w2 a1 a2 / 2.
    """

    H: float
    C_plus: float
    C_minus: float
    temperature: float


def _log_sinh(x: float) -> float:
    # log sinh x, stable for large x
    return x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0)


def pair_coupling(omega1: float, alpha1: float, omega2: float, alpha2: float,
                  temperature: float) -> PairCoupling:
    """Pair coupling H and channel coefficients C+- at temperature T.

        H  = hbar^2 w1 w2 a1 a2 / (4 sinh(x1) sinh(x2)),  x = beta hbar w / 2
        C+- = (H/hbar) sinh(x+-),                         w+- = |w1 +- w2|

    evaluated in log space so large beta never overflows; T = 0 is the
    analytic limit.
    """
    if temperature < 0:
        raise DomainError("temperature must be >= 0")
    if not (omega1 > 0 and omega2 > 0):
        raise DomainError("oscillator frequencies must be > 0")
    base = HBAR_CGS * omega1 * omega2 * alpha1 * alpha2
    if temperature == 0.0:
        # sinh(x+-)/(sinh x1 sinh x2) -> 2 for the sum channel, 0 for the
        # difference channel; H itself vanishes.
        return PairCoupling(H=0.0, C_plus=0.5 * base, C_minus=0.0, temperature=0.0)
    beta = 1.0 / (KB_CGS * temperature)
    x1 = 0.5 * beta * HBAR_CGS * omega1
    x2 = 0.5 * beta * HBAR_CGS * omega2
    ls12 = _log_sinh(x1) + _log_sinh(x2)
    h = HBAR_CGS * base / 4.0 * math.exp(-ls12)

    def channel(omega_pm: float) -> float:
        if omega_pm == 0.0:
            return 0.0
        x = 0.5 * beta * HBAR_CGS * omega_pm
        return base / 4.0 * math.exp(_log_sinh(x) - ls12)

    return PairCoupling(H=h,
                        C_plus=channel(omega1 + omega2),
                        C_minus=channel(abs(omega1 - omega2)),
                        temperature=temperature)
