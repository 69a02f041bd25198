import math
import warnings

import numpy as np
import pytest

from bnls.errors import InvalidFieldError, SingularOperatorError
from bnls.grid import (
    BoxAdequacyWarning,
    BoxGrid,
    Field,
    bilaplacian,
    boundary_amplitude_ratio,
    center_and_align,
    check_box_adequacy,
    forward_operator,
    inverse_operator,
    laplacian,
    norms,
    quadratic_norms,
    regrid,
    relative_l2_distance,
    shift_field,
    spectral_mass,
)
from bnls.solvers import random_bandlimited

from conftest import rng_fields

GRID = BoxGrid(dim=1, points_per_axis=256, box_length=2.0 * np.pi)


def sine(k=3, grid=GRID):
    return Field(grid, np.sin(k * grid.axis_coordinates()))


def bump(width=2.0, grid=None):
    grid = grid or BoxGrid(1, 256, 40.0)
    x = grid.axis_coordinates()
    return Field(grid, np.exp(-(x**2) / (2.0 * width**2)))


class TestBoxGrid:
    def test_spacing_and_shape(self):
        assert GRID.spacing == pytest.approx(2 * np.pi / 256)
        assert GRID.shape == (256,)
        assert GRID.cell_volume == GRID.spacing

    @pytest.mark.parametrize("bad", [31, 33, 100, 0, -64])
    def test_rejects_non_power_of_two(self, bad):
        with pytest.raises(ValueError):
            BoxGrid(1, bad, 1.0)

    def test_rejects_bad_dim_and_box(self):
        with pytest.raises(ValueError):
            BoxGrid(4, 64, 1.0)
        with pytest.raises(ValueError):
            BoxGrid(1, 64, 0.0)
        with pytest.raises(ValueError):
            BoxGrid(1, 64, -3.0)

    def test_wavenumbers_even_except_nyquist(self):
        k = GRID.wavenumbers()
        m = GRID.points_per_axis
        for j in range(1, m // 2):
            assert k[j] == -k[m - j]
        # Nyquist index has no positive partner
        assert k[m // 2] == pytest.approx(-GRID.k_max())


class TestField:
    def test_rejects_nan(self):
        samples = np.zeros(256)
        samples[3] = np.nan
        with pytest.raises(InvalidFieldError):
            Field(GRID, samples)

    def test_rejects_wrong_length(self):
        with pytest.raises(InvalidFieldError):
            Field(GRID, np.zeros(255))

    def test_accepts_flat_row_major(self):
        g2 = BoxGrid(2, 32, 1.0)
        flat = np.arange(32 * 32, dtype=float)
        f = Field(g2, flat)
        assert f.samples.shape == (32, 32)
        assert f.samples[1, 0] == 32.0

    def test_samples_immutable(self):
        f = sine()
        with pytest.raises(ValueError):
            f.samples[0] = 1.0


class TestNorms:
    def test_sine_exact(self):
        # analytic integrals on [0, 2pi): sin^2 -> pi, (3cos3x)^2 -> 9pi,
        # (9sin3x)^2 -> 81pi, sin^4 -> 3pi/4
        nt = norms(sine(3), 4.0)
        assert nt.mass == pytest.approx(np.pi, rel=1e-12)
        assert nt.grad == pytest.approx(9 * np.pi, rel=1e-12)
        assert nt.bilap == pytest.approx(81 * np.pi, rel=1e-12)
        assert nt.lp == pytest.approx(3 * np.pi / 4, rel=1e-12)

    def test_zero_field(self):
        nt = norms(Field(GRID, np.zeros(256)), 4.0)
        assert (nt.mass, nt.grad, nt.bilap, nt.lp) == (0.0, 0.0, 0.0, 0.0)

    def test_constant_field(self):
        c = -0.7
        nt = norms(Field(GRID, np.full(256, c)), 5.0)
        length = 2 * np.pi
        assert nt.mass == pytest.approx(length * c**2, rel=1e-12)
        assert nt.grad == 0.0
        assert nt.bilap == 0.0
        assert nt.lp == pytest.approx(length * abs(c) ** 5, rel=1e-12)

    def test_requires_p_above_two(self):
        with pytest.raises(ValueError):
            norms(sine(), 2.0)

    def test_3d_product_of_sines(self):
        g = BoxGrid(3, 32, 2.0 * np.pi)
        x, y, z = g.coordinates()
        u = Field(g, np.sin(3 * x) * np.sin(2 * y) * np.sin(z))
        nt = norms(u, 4.0)
        pi3 = np.pi**3
        assert nt.mass == pytest.approx(pi3, rel=1e-12)
        assert nt.grad == pytest.approx(14 * pi3, rel=1e-12)
        assert nt.bilap == pytest.approx(196 * pi3, rel=1e-12)
        assert nt.lp == pytest.approx((3 * np.pi / 4) ** 3, rel=1e-12)

    @pytest.mark.parametrize("k", [1, 2, 5, 11, 17, 31])
    def test_eigenfunction_multiplier_scaling(self, k):
        # grad and bilap of a pure mode scale exactly like k^2 and k^4
        nt = norms(sine(k), 4.0)
        assert nt.grad == pytest.approx(k**2 * nt.mass, rel=1e-12)
        assert nt.bilap == pytest.approx(k**4 * nt.mass, rel=1e-12)

    def test_parseval_consistency(self):
        g = BoxGrid(1, 64, 40.0)
        for u in rng_fields(g, 50, seed=100):
            assert spectral_mass(u) == pytest.approx(norms(u, 4.0).mass, rel=1e-12)

    def test_interpolation_inequality_500_fields(self):
        g = BoxGrid(1, 64, 40.0)
        for u in rng_fields(g, 500, seed=2000):
            mass, grad, bilap = quadratic_norms(u)
            assert grad**2 <= mass * bilap * (1 + 1e-12)


class TestOperators:
    def test_laplacian_eigenfunction(self):
        # strict 1e-12 on a modest grid where Nyquist noise amplification
        # (|k_max|^2 * eps_mach) stays below the bound
        g = BoxGrid(1, 64, 2.0 * np.pi)
        for k in (1, 3, 7):
            u = sine(k, g)
            out = laplacian(u)
            err = np.max(np.abs(out.samples + k**2 * u.samples))
            assert err <= 1e-12 * k**2

    def test_laplacian_eigenfunction_fine_grid(self):
        # on finer grids the error scales with |k_max|^2 * eps_mach
        for k in (1, 3, 17):
            u = sine(k)
            out = laplacian(u)
            err = np.max(np.abs(out.samples + k**2 * u.samples))
            assert err <= 64 * np.finfo(float).eps * GRID.k_max() ** 2

    def test_bilaplacian_constant_is_zero(self):
        out = bilaplacian(Field(GRID, np.full(256, 2.5)))
        assert np.max(np.abs(out.samples)) < 1e-12

    def test_inverse_operator_sine(self):
        # symbol at |k| = 1 with a = b = w = 1 is 3
        u = sine(1)
        out = inverse_operator(u, a=1.0, b=1.0, w=1.0)
        np.testing.assert_allclose(out.samples, u.samples / 3.0, rtol=1e-12, atol=1e-14)

    def test_inverse_of_forward_roundtrip(self):
        u = random_bandlimited(BoxGrid(1, 256, 40.0), seed=5)
        fwd = forward_operator(u, a=0.3, b=1.7, w=2.2)
        back = inverse_operator(fwd, a=0.3, b=1.7, w=2.2)
        np.testing.assert_allclose(back.samples, u.samples, rtol=1e-12, atol=1e-13)

    def test_inverse_rejects_nonpositive_w(self):
        with pytest.raises(SingularOperatorError):
            inverse_operator(sine(), a=1.0, b=1.0, w=0.0)
        with pytest.raises(SingularOperatorError):
            inverse_operator(sine(), a=1.0, b=1.0, w=-1.0)

    def test_inverse_rejects_negative_coefficients(self):
        with pytest.raises(ValueError):
            inverse_operator(sine(), a=-1.0, b=0.0, w=1.0)


class TestCenterAndAlign:
    def test_centered_bump_fixed_point(self):
        u = bump()
        out = center_and_align(u)
        np.testing.assert_allclose(out.samples, u.samples, atol=1e-12)

    def test_shift_invariance_37_cells(self):
        u = bump()
        shifted = Field(u.grid, np.roll(u.samples, 37))
        a = center_and_align(u)
        b = center_and_align(shifted)
        assert np.max(np.abs(a.samples - b.samples)) <= 1e-10

    def test_fractional_shift_recentered(self):
        u = bump()
        nudged = shift_field(u, [0.5 * u.grid.spacing])
        out = center_and_align(nudged)
        assert np.max(np.abs(out.samples - u.samples)) <= 1e-9

    def test_sign_normalization(self):
        u = bump()
        a = center_and_align(u)
        b = center_and_align(Field(u.grid, -u.samples))
        np.testing.assert_allclose(a.samples, b.samples, atol=1e-12)

    def test_zero_field_rejected(self):
        with pytest.raises(InvalidFieldError):
            center_and_align(Field(GRID, np.zeros(256)))

    def test_2d_centering(self):
        g = BoxGrid(2, 64, 20.0)
        x, y = g.coordinates()
        u = Field(g, np.exp(-((x - 1.3) ** 2 + (y + 2.1) ** 2)))
        out = center_and_align(u)
        c = g.points_per_axis // 2
        peak = np.unravel_index(np.argmax(out.samples), out.samples.shape)
        assert peak == (c, c)


class TestShiftField:
    def test_integer_shift_matches_roll(self):
        u = bump()
        out = shift_field(u, [5 * u.grid.spacing])
        np.testing.assert_allclose(out.samples, np.roll(u.samples, -5), atol=1e-12)

    def test_shift_roundtrip(self):
        u = bump()
        out = shift_field(shift_field(u, [0.3]), [-0.3])
        np.testing.assert_allclose(out.samples, u.samples, atol=1e-12)


class TestRegrid:
    def test_same_grid_identity(self):
        u = sine(3)
        out = regrid(u, GRID)
        np.testing.assert_allclose(out.samples, u.samples, atol=1e-12)

    def test_refine_bandlimited_exact(self):
        fine = BoxGrid(1, 512, 2.0 * np.pi)
        out = regrid(sine(3), fine)
        np.testing.assert_allclose(out.samples, np.sin(3 * fine.axis_coordinates()), atol=1e-11)

    def test_bigger_box_for_decaying_bump(self):
        # narrow enough that the periodic wrap onto the larger box is invisible
        u = bump(width=1.2)
        target = BoxGrid(1, 512, 60.0)
        out = regrid(u, target)
        x = target.axis_coordinates()
        np.testing.assert_allclose(out.samples, np.exp(-(x**2) / 2.88), atol=1e-10)

    def test_dim_mismatch_rejected(self):
        with pytest.raises(ValueError):
            regrid(sine(), BoxGrid(2, 32, 1.0))


class TestBoxAdequacy:
    def test_ratio_of_centered_bump_small(self):
        assert boundary_amplitude_ratio(bump(width=2.0)) < 1e-8

    def test_warning_raised_for_wide_field(self):
        wide = bump(width=15.0)
        with pytest.warns(BoxAdequacyWarning):
            check_box_adequacy(wide)

    def test_no_warning_for_narrow_field(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            check_box_adequacy(bump(width=2.0))


def test_relative_l2_distance():
    u = bump()
    v = Field(u.grid, 1.001 * u.samples)
    assert relative_l2_distance(u, v) == pytest.approx(0.001 / 1.001, rel=1e-6)
    assert relative_l2_distance(u, u) == 0.0
    with pytest.raises(ValueError):
        relative_l2_distance(u, sine())
