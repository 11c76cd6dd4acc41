import json
import math

import numpy as np
import pytest

from casifric import (
    DomainError,
    DrudeMetal,
    MaterialError,
    PoleError,
    ValidityError,
    ValidityWarning,
    drude_permittivity,
    halfspace_spectral_coefficient,
    im_surface_response_lowfreq,
    load_materials,
    surface_response,
)
from casifric.response import Provenance
from casifric.units import CONSTANTS, HBAR_CGS

GOLD = DrudeMetal("gold", omega_p=1.36e16, nu=5.32e13)
GOLD_DENSE = DrudeMetal("gold", omega_p=1.36e16, nu=5.32e13, number_density=5.9e22)
SILICON = DrudeMetal("silicon", resistivity=6.4e2)


class TestDrudeMetal:
    def test_requires_omega_p_and_nu_together(self):
        with pytest.raises(MaterialError):
            DrudeMetal("bad", omega_p=1e16)
        with pytest.raises(MaterialError):
            DrudeMetal("bad", nu=1e13)

    def test_requires_some_specification(self):
        with pytest.raises(MaterialError):
            DrudeMetal("empty")

    def test_parameter_signs(self):
        with pytest.raises(DomainError):
            DrudeMetal("bad", omega_p=-1e16, nu=1e13)
        with pytest.raises(DomainError):
            DrudeMetal("bad", omega_p=1e16, nu=-1e13)
        with pytest.raises(DomainError):
            DrudeMetal("bad", resistivity=-1.0)

    def test_damping_ratio_from_either_source(self):
        assert GOLD.damping_ratio == pytest.approx(5.32e13 / 1.36e16**2, rel=1e-14)
        assert SILICON.damping_ratio == pytest.approx(5.6667e-9, rel=1e-3)

    def test_consistent_resistivity_accepted(self):
        rho = GOLD.damping_ratio / CONSTANTS.epsilon0_F_m
        m = DrudeMetal("gold", omega_p=1.36e16, nu=5.32e13, resistivity=rho)
        assert m.damping_ratio == pytest.approx(GOLD.damping_ratio)

    def test_inconsistent_resistivity_rejected(self):
        rho = GOLD.damping_ratio / CONSTANTS.epsilon0_F_m
        with pytest.raises(MaterialError):
            DrudeMetal("gold", omega_p=1.36e16, nu=5.32e13, resistivity=1.01 * rho)


class TestPermittivity:
    def test_high_frequency_transparency(self):
        eps = drude_permittivity(GOLD, 1e25)
        assert abs(eps - 1.0) < 1e-15

    def test_gold_against_algebraic_rearrangement(self):
        w, wp, nu = 1e14, 1.36e16, 5.32e13
        eps = drude_permittivity(GOLD, w)
        expected = 1 - wp**2 / (w**2 + nu**2) + 1j * wp**2 * nu / (w * (w**2 + nu**2))
        assert eps == pytest.approx(expected, rel=1e-14)

    def test_lossless_plasma_negative_below_plasma_frequency(self):
        metal = DrudeMetal("plasma", omega_p=1e16, nu=0.0)
        eps = drude_permittivity(metal, 1e15)
        assert eps.imag == 0.0
        assert eps.real < 0.0

    def test_zero_frequency_pole(self):
        with pytest.raises(PoleError):
            drude_permittivity(GOLD, 0.0)

    def test_passivity_over_log_grid(self):
        for w in np.logspace(6, 18, 60):
            assert drude_permittivity(GOLD, w).imag > 0.0

    def test_resistivity_only_metal_rejected(self):
        with pytest.raises(MaterialError):
            drude_permittivity(SILICON, 1e10)


class TestSurfaceResponse:
    def test_vacuum_reflects_nothing(self):
        assert surface_response(1.0 + 0j).value == 0.0

    def test_perfect_conductor_limit(self):
        assert surface_response(1e12 + 0j).value == pytest.approx(1.0, rel=1e-11)

    def test_direct_arithmetic(self):
        assert surface_response(3.0 + 0j).value == pytest.approx(0.5)

    def test_plasmon_pole(self):
        with pytest.raises(PoleError):
            surface_response(-1.0 + 0j)

    def test_magnitude_bounded_on_log_grid(self):
        for w in np.logspace(6, 18, 120):
            sigma = surface_response(drude_permittivity(GOLD, w)).value
            assert abs(sigma) <= 1.0 + 1e-12


class TestLowFrequencyLaw:
    def test_gold_value(self):
        val = im_surface_response_lowfreq(GOLD, 1e10)
        assert val == pytest.approx(5.75e-9, rel=1e-3)

    def test_zero_frequency(self):
        assert im_surface_response_lowfreq(GOLD, 0.0) == 0.0

    def test_matches_exact_surface_response(self):
        w = GOLD.nu * 1e-4
        exact = surface_response(drude_permittivity(GOLD, w)).value.imag
        approx = im_surface_response_lowfreq(GOLD, w)
        assert exact / approx == pytest.approx(1.0, abs=1e-3)

    def test_error_vanishes_at_least_linearly(self):
        # relative error on a halving sequence must shrink by >= ~2x per step
        omegas = GOLD.nu * 1e-3 / 2.0 ** np.arange(5)
        errors = []
        for w in omegas:
            exact = surface_response(drude_permittivity(GOLD, w)).value.imag
            approx = im_surface_response_lowfreq(GOLD, w)
            errors.append(abs(exact - approx) / approx)
        for a, b in zip(errors, errors[1:]):
            assert b <= 0.55 * a

    def test_window_enforced_strict(self):
        with pytest.raises(ValidityError):
            im_surface_response_lowfreq(GOLD, GOLD.nu)

    def test_window_downgrades_to_warning(self):
        with pytest.warns(ValidityWarning):
            val = im_surface_response_lowfreq(GOLD, GOLD.nu, strict=False)
        assert val == pytest.approx(2 * GOLD.nu * GOLD.damping_ratio)

    def test_resistivity_only_window_unknown(self):
        with pytest.raises(ValidityError):
            im_surface_response_lowfreq(SILICON, 1e6)
        with pytest.warns(ValidityWarning):
            val = im_surface_response_lowfreq(SILICON, 1e6, strict=False)
        assert val == pytest.approx(2e6 * SILICON.damping_ratio)


class TestHalfspaceDensity:
    def test_linear_in_nu(self):
        base = halfspace_spectral_coefficient(GOLD_DENSE)
        doubled_nu = DrudeMetal("g2", omega_p=1.36e16, nu=2 * 5.32e13, number_density=5.9e22)
        assert halfspace_spectral_coefficient(doubled_nu).coefficient == pytest.approx(
            2 * base.coefficient, rel=1e-14)

    def test_inverse_square_in_omega_p(self):
        base = halfspace_spectral_coefficient(GOLD_DENSE)
        doubled_wp = DrudeMetal("g2", omega_p=2 * 1.36e16, nu=5.32e13, number_density=5.9e22)
        assert halfspace_spectral_coefficient(doubled_wp).coefficient == pytest.approx(
            base.coefficient / 4, rel=1e-14)

    def test_small_m_limit_oracle(self):
        # D must match the spectral extraction (1/pi) Im sigma / (2 pi rho m)
        # evaluated six decades below hbar*nu
        d = halfspace_spectral_coefficient(GOLD_DENSE)
        assert d.exponent == 1.0
        assert d.provenance is Provenance.HALFSPACE
        w = GOLD.nu * 1e-6
        m = HBAR_CGS * w
        sigma_im = surface_response(drude_permittivity(GOLD_DENSE, w)).value.imag
        extracted = sigma_im / (math.pi * 2 * math.pi * GOLD_DENSE.number_density * m)
        assert extracted == pytest.approx(d.coefficient, rel=1e-4)

    def test_requires_number_density(self):
        with pytest.raises(MaterialError):
            halfspace_spectral_coefficient(GOLD)

    def test_validity_cutoff_tracks_nu(self):
        d = halfspace_spectral_coefficient(GOLD_DENSE)
        assert d.validity_max_m == pytest.approx(HBAR_CGS * GOLD.nu / 10)


class TestDatabase:
    def test_bundled_database(self):
        db = load_materials()
        assert set(db) == {"gold", "silicon"}
        assert db["gold"].omega_p == 1.36e16
        assert db["gold"].nu == 5.32e13
        assert db["gold"].number_density is None
        assert db["silicon"].resistivity == 640.0
        assert not db["silicon"].has_drude_parameters

    def test_explicit_path_and_env_override(self, tmp_path, monkeypatch):
        path = tmp_path / "mats.json"
        path.write_text(json.dumps([
            {"label": "test", "omega_p_rad_s": 1e16, "nu_rad_s": 1e13,
             "number_density_cm3": 1e22},
        ]))
        db = load_materials(path)
        assert db["test"].number_density == 1e22
        monkeypatch.setenv("CASIFRIC_MATERIALS", str(path))
        assert set(load_materials()) == {"test"}

    def test_duplicate_labels_rejected(self, tmp_path):
        path = tmp_path / "dup.json"
        path.write_text(json.dumps([
            {"label": "x", "resistivity_ohm_m": 1.0},
            {"label": "x", "resistivity_ohm_m": 2.0},
        ]))
        with pytest.raises(MaterialError):
            load_materials(path)
