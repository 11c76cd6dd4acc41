"""Drude metals, the surface response (eps-1)/(eps+1), and the half-space
spectral density.

A metal may be specified by its Drude parameters (omega_p, nu), by its DC
resistivity, or both.  Every single-particle friction force depends on the
single combination nu/omega_p^2 = eps0 * resistivity, so a resistivity-only
record is a first-class citizen; operations that genuinely need omega_p and
nu separately (the permittivity itself, the exact surface response) reject
such records instead of guessing a split.
"""

from __future__ import annotations

import json
import math
import os
import warnings
from dataclasses import dataclass
from importlib import resources

from .errors import DomainError, MaterialError, PoleError, ValidityError, ValidityWarning
from .response import DEFAULT_WINDOW_FACTOR, Provenance, SpectralDensity
from .units import CONSTANTS, HBAR_CGS

#: ships with the package; override per call or via CASIFRIC_MATERIALS
MATERIALS_ENV_VAR = "CASIFRIC_MATERIALS"

_RESISTIVITY_CONSISTENCY_RTOL = 1e-6


@dataclass(frozen=True)
class DrudeMetal:
    """Material identity of the half-space.

    omega_p        : plasma frequency, rad/s (with ``nu`` or not at all)
    nu             : damping rate, rad/s
    resistivity    : DC resistivity, ohm m (optional)
    number_density : particle density, cm^-3 (optional; only the half-space
                     spectral coefficient needs it, and it cancels again in
                     every shipped force)
    """

    label: str
    omega_p: float | None = None
    nu: float | None = None
    resistivity: float | None = None
    number_density: float | None = None

    def __post_init__(self):
        drude = (self.omega_p is not None, self.nu is not None)
        if any(drude) and not all(drude):
            raise MaterialError(f"{self.label}: omega_p and nu must be given together")
        if all(drude):
            if not self.omega_p > 0:
                raise DomainError(f"{self.label}: omega_p must be > 0")
            if self.nu < 0:
                raise DomainError(f"{self.label}: nu must be >= 0")
        elif self.resistivity is None:
            raise MaterialError(f"{self.label}: need (omega_p, nu) or a resistivity")
        if self.resistivity is not None and not self.resistivity > 0:
            raise DomainError(f"{self.label}: resistivity must be > 0")
        if self.number_density is not None and not self.number_density > 0:
            raise DomainError(f"{self.label}: number density must be > 0")
        if all(drude) and self.resistivity is not None:
            from_drude = self.nu / self.omega_p**2
            from_res = CONSTANTS.epsilon0_F_m * self.resistivity
            if abs(from_drude - from_res) > _RESISTIVITY_CONSISTENCY_RTOL * from_res:
                raise MaterialError(
                    f"{self.label}: resistivity inconsistent with Drude parameters "
                    f"(nu/omega_p^2 = {from_drude:.6e} s vs eps0*rho = {from_res:.6e} s)")

    @property
    def has_drude_parameters(self) -> bool:
        return self.omega_p is not None

    @property
    def damping_ratio(self) -> float:
        """nu/omega_p^2 in seconds, equal to eps0 * resistivity."""
        if self.has_drude_parameters:
            return self.nu / self.omega_p**2
        return CONSTANTS.epsilon0_F_m * self.resistivity

    def require_drude(self, operation: str) -> None:
        if not self.has_drude_parameters:
            raise MaterialError(
                f"{operation} needs omega_p and nu separately, but {self.label!r} "
                "is specified by resistivity alone")


@dataclass(frozen=True)
class SurfaceResponse:
    """The image-strength factor sigma = (eps - 1)/(eps + 1) of a half-space.

    For real eps > 1 it lies in (0, 1); the perfect-conductor limit is 1.
    """

    value: complex


def drude_permittivity(metal: DrudeMetal, omega: float) -> complex:
    """Drude permittivity eps(w) = 1 + omega_p^2 / (xi (xi + nu)), xi = -i w.

    The branch is fixed by passivity: Im eps(w) > 0 for w > 0 whenever
    nu > 0 (and eps(-w) = conj eps(w)).  The w = 0 pole is reported as an
    error rather than returned as an infinity.
    """
    metal.require_drude("drude_permittivity")
    if omega == 0.0:
        raise PoleError(f"{metal.label}: permittivity has a pole at omega = 0")
    xi = -1j * omega
    return 1.0 + metal.omega_p**2 / (xi * (xi + metal.nu))


def surface_response(epsilon: complex) -> SurfaceResponse:
    """sigma = (eps - 1)/(eps + 1); eps = -1 is the surface-plasmon pole."""
    denom = epsilon + 1.0
    if denom == 0:
        raise PoleError("surface-plasmon pole: eps = -1")
    return SurfaceResponse((epsilon - 1.0) / denom)


def im_surface_response_lowfreq(metal: DrudeMetal, omega: float, *,
                                strict: bool = True,
                                window_factor: float = DEFAULT_WINDOW_FACTOR) -> float:
    """Low-frequency law Im (eps-1)/(eps+1) ~= 2 w nu / omega_p^2.

    Valid deep in the quasistatic regime w << nu.  The value needs only the
    ratio nu/omega_p^2, so resistivity-only metals are accepted, but then
    the window cannot be verified: strict mode refuses, non-strict mode
    warns and proceeds.
    """
    if omega < 0:
        raise DomainError("omega must be >= 0")
    if omega != 0.0:
        if metal.nu is None:
            msg = (f"{metal.label}: cannot verify the w << nu window "
                   "for a resistivity-only metal")
            if strict:
                raise ValidityError(msg)
            warnings.warn(msg, ValidityWarning, stacklevel=2)
        elif omega >= metal.nu / window_factor:
            msg = (f"low-frequency surface response used at omega={omega:.3e} rad/s, "
                   f"outside omega < nu/{window_factor:g} = {metal.nu / window_factor:.3e}")
            if strict:
                raise ValidityError(msg)
            warnings.warn(msg, ValidityWarning, stacklevel=2)
    return 2.0 * omega * metal.damping_ratio


def halfspace_spectral_coefficient(metal: DrudeMetal) -> SpectralDensity:
    """Linear spectral density of the metal half-space, per particle.

        D = hbar nu / (rho (pi hbar omega_p)^2) = (nu/omega_p^2) / (pi^2 hbar rho)

    with rho the metal's number density, which must be present on the
    record.  (It cancels against the same rho in every force formula; it is
    kept here so the density has its defining per-particle normalization.)
    """
    if metal.number_density is None:
        raise MaterialError(
            f"{metal.label}: number density required for the half-space spectral density")
    d = metal.damping_ratio / (math.pi**2 * HBAR_CGS * metal.number_density)
    validity = HBAR_CGS * metal.nu / DEFAULT_WINDOW_FACTOR if metal.nu is not None else None
    return SpectralDensity(d, 1.0, Provenance.HALFSPACE, validity)


def _metal_from_record(rec: dict) -> DrudeMetal:
    try:
        label = rec["label"]
    except KeyError:
        raise MaterialError("material record without a label") from None
    return DrudeMetal(
        label=label,
        omega_p=rec.get("omega_p_rad_s"),
        nu=rec.get("nu_rad_s"),
        resistivity=rec.get("resistivity_ohm_m"),
        number_density=rec.get("number_density_cm3"),
    )


def load_materials(path: str | os.PathLike | None = None) -> dict[str, DrudeMetal]:
    """Load a material database (JSON array of records) keyed by label.

    Resolution order: explicit ``path`` argument, the CASIFRIC_MATERIALS
    environment variable, then the bundled database (gold by its Drude
    parameters, silicon by resistivity).
    """
    if path is None:
        path = os.environ.get(MATERIALS_ENV_VAR)
    if path is None:
        text = resources.files("casifric.data").joinpath("materials.json").read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    records = json.loads(text)
    if not isinstance(records, list):
        raise MaterialError("material database must be a JSON array of records")
    metals = {}
    for rec in records:
        metal = _metal_from_record(rec)
        if metal.label in metals:
            raise MaterialError(f"duplicate material label {metal.label!r}")
        metals[metal.label] = metal
    return metals
