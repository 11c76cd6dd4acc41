"""Unit tags, dimensioned quantities, and the handful of conversions the
friction formulas need.

All internal physics runs in Gaussian-CGS; SI appears only at the I/O
boundary, so every cross-system conversion is concentrated here.  This is
deliberately not a general units library: only the tags this package needs
exist, and incompatible arithmetic raises instead of coercing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, UnitError


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA-2018 constants in both unit systems.

    Stored at full CODATA precision even though golden comparisons against
    published round-offs use percent-level tolerances.
    """

    hbar_J_s: float = 1.054571817e-34
    hbar_erg_s: float = 1.054571817e-27
    h_J_s: float = 6.62607015e-34
    c_m_s: float = 2.99792458e8
    c_cm_s: float = 2.99792458e10
    epsilon0_F_m: float = 8.8541878128e-12
    electronvolt_J: float = 1.602176634e-19
    k_B_J_K: float = 1.380649e-23
    k_B_erg_K: float = 1.380649e-16


CONSTANTS = PhysicalConstants()

# CGS shortcuts used throughout the closed forms.
HBAR_CGS = CONSTANTS.hbar_erg_s
C_CGS = CONSTANTS.c_cm_s
KB_CGS = CONSTANTS.k_B_erg_K

DYNE_PER_NEWTON = 1.0e5
CM_PER_M = 100.0
# Gaussian polarizability [cm^3] per SI polarizability [F m^2]:
# alpha_G = alpha_SI / (4 pi eps0), then m^3 -> cm^3.
GAUSSIAN_PER_SI_POLARIZABILITY = 1.0e6 / (4.0 * math.pi * CONSTANTS.epsilon0_F_m)
RAD_S_PER_EV = CONSTANTS.electronvolt_J / CONSTANTS.hbar_J_s


class Unit(Enum):
    NEWTON = "N"
    DYNE = "dyn"
    NEWTON_PER_M2 = "N/m^2"
    DYNE_PER_CM2 = "dyn/cm^2"
    METER = "m"
    CENTIMETER = "cm"
    METER_PER_SECOND = "m/s"
    CENTIMETER_PER_SECOND = "cm/s"
    RAD_PER_SECOND = "rad/s"
    ELECTRONVOLT = "eV"
    SI_POLARIZABILITY = "F m^2"
    GAUSSIAN_POLARIZABILITY = "cm^3"
    OHM_METER = "ohm m"
    SECOND = "s"
    DIMENSIONLESS = "1"


# Directed conversion factors; inverses are derived.  Every pair here is a
# pure rescaling, so a -> b -> a is exact to within rounding.
_FACTORS: dict[tuple[Unit, Unit], float] = {
    (Unit.NEWTON, Unit.DYNE): DYNE_PER_NEWTON,
    (Unit.NEWTON_PER_M2, Unit.DYNE_PER_CM2): DYNE_PER_NEWTON / CM_PER_M**2,
    (Unit.METER, Unit.CENTIMETER): CM_PER_M,
    (Unit.METER_PER_SECOND, Unit.CENTIMETER_PER_SECOND): CM_PER_M,
    (Unit.ELECTRONVOLT, Unit.RAD_PER_SECOND): RAD_S_PER_EV,
    (Unit.SI_POLARIZABILITY, Unit.GAUSSIAN_POLARIZABILITY): GAUSSIAN_PER_SI_POLARIZABILITY,
}
for (_a, _b), _f in list(_FACTORS.items()):
    _FACTORS[(_b, _a)] = 1.0 / _f


@dataclass(frozen=True)
class Quantity:
    """A real value with a unit tag.

    Arithmetic is allowed only between compatible tags; anything else
    raises :class:`UnitError` rather than silently coercing.
    """

    value: float
    unit: Unit

    def to(self, target: Unit) -> "Quantity":
        return convert(self, target)

    def _check(self, other) -> "Quantity":
        if not isinstance(other, Quantity):
            raise UnitError(f"expected Quantity, got {type(other).__name__}")
        if other.unit is not self.unit:
            raise UnitError(f"incompatible units: {self.unit.value} vs {other.unit.value}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Quantity(self.value + other.value, self.unit)

    def __sub__(self, other):
        other = self._check(other)
        return Quantity(self.value - other.value, self.unit)

    def __mul__(self, scalar):
        if isinstance(scalar, Quantity):
            raise UnitError("multiplication of two quantities is not supported; use plain floats in a declared unit system")
        return Quantity(self.value * scalar, self.unit)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            self._check(other)
            return self.value / other.value
        return Quantity(self.value / other, self.unit)

    def __neg__(self):
        return Quantity(-self.value, self.unit)

    def __abs__(self):
        return Quantity(abs(self.value), self.unit)

    def __lt__(self, other):
        return self.value < self._check(other).value

    def __le__(self, other):
        return self.value <= self._check(other).value

    def __str__(self):
        return f"{self.value:.6g} {self.unit.value}"


def convert(q: Quantity, target: Unit) -> Quantity:
    """Convert ``q`` to ``target``, or raise :class:`UnitError`.

    Only the conversion pairs this package actually uses are supported.
    """
    if q.unit is target:
        return q
    try:
        factor = _FACTORS[(q.unit, target)]
    except KeyError:
        raise UnitError(f"no conversion from {q.unit.value} to {target.value}") from None
    return Quantity(q.value * factor, target)


def convert_polarizability(alpha: Quantity, target: Unit) -> Quantity:
    """Convert a polarizability between SI (F m^2) and Gaussian (cm^3) tags.

    Uses alpha_G = alpha_SI / (4 pi eps0) (plus the m^3 -> cm^3 volume
    rescale) or its inverse.
    """
    pol = (Unit.SI_POLARIZABILITY, Unit.GAUSSIAN_POLARIZABILITY)
    if alpha.unit not in pol or target not in pol:
        raise UnitError(f"not a polarizability conversion: {alpha.unit.value} -> {target.value}")
    return convert(alpha, target)


def atomic_polarizability_from_spectroscopic(coeff_hz_per_v_cm2: float) -> Quantity:
    """Turn a Stark-shift coefficient quoted in Hz/(V/cm)^2 into F m^2.

    The quoted value is multiplied by Planck's constant h, and the field
    unit is rescaled (V/cm)^2 -> (V/m)^2, i.e. a factor 1e-4 on the
    coefficient.
    """
    if coeff_hz_per_v_cm2 < 0:
        raise DomainError("spectroscopic polarizability coefficient must be >= 0")
    return Quantity(CONSTANTS.h_J_s * coeff_hz_per_v_cm2 * 1.0e-4, Unit.SI_POLARIZABILITY)


def energy_to_angular_frequency(e: Quantity) -> Quantity:
    """omega = E / hbar for an energy tagged in eV."""
    if e.unit is not Unit.ELECTRONVOLT:
        raise UnitError(f"expected eV, got {e.unit.value}")
    if e.value < 0:
        raise DomainError("energy must be >= 0")
    return convert(e, Unit.RAD_PER_SECOND)


def resistivity_to_damping_ratio(rho_res: Quantity) -> Quantity:
    """eps0 * rho, the ratio nu/omega_p^2 in seconds.

    This single combination is the only way the Drude damping and plasma
    frequency enter the single-particle friction forces, which is why a
    metal can be specified by its DC resistivity alone.
    """
    if rho_res.unit is not Unit.OHM_METER:
        raise UnitError(f"expected ohm m, got {rho_res.unit.value}")
    if rho_res.value <= 0:
        raise DomainError("resistivity must be > 0")
    return Quantity(CONSTANTS.epsilon0_F_m * rho_res.value, Unit.SECOND)
