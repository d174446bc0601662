from math import pi

import numpy as np
import pytest

from config.settings import Tolerances
from exceptions.geometryExceptions import BoundaryNotFlat, ConfigurationError, GridTooCoarse, InvalidShape
from model.diskModel import DiskProfile
from services.diskMetricServices import (
    attach_flat_collar,
    get_shape,
    revolution_mesh,
    scale,
    synthesize_standard_disk,
    verify,
)


@pytest.mark.slow
def test_standard_disk_passes_every_check(standard_disk):
    report = verify(standard_disk)
    assert report.passed, report.failures
    assert report.boundary_geodesic_defect <= 1e-10
    assert report.min_K >= -1e-12
    assert abs(report.total_curvature - 2 * pi) <= 1e-8
    assert standard_disk.boundary_length == pytest.approx(1.0, abs=1e-10)


@pytest.mark.slow
@pytest.mark.parametrize("shape", ["bump", "wide_bump"])
def test_other_shapes_pass(shape):
    d = synthesize_standard_disk(get_shape(shape), grid=2048, target_boundary_length=2.5)
    report = verify(d)
    assert report.passed, report.failures
    assert d.boundary_length == pytest.approx(2.5, abs=1e-10)


def test_synthesis_on_a_coarse_grid_is_rejected():
    with pytest.raises(GridTooCoarse):
        synthesize_standard_disk(grid=50)


def test_unknown_shape():
    with pytest.raises(ConfigurationError):
        get_shape("teardrop")


def test_shape_must_vanish_at_the_boundary():
    with pytest.raises(InvalidShape):
        synthesize_standard_disk(lambda x: np.ones_like(x), grid=200)


def test_scale_is_a_homothety(standard_disk):
    assert scale(standard_disk, 1) is standard_disk

    doubled = scale(standard_disk, 2)
    assert doubled.boundary_length == 2 * standard_disk.boundary_length
    np.testing.assert_array_equal(doubled.h, 2 * standard_disk.h)
    assert verify(doubled).total_curvature == pytest.approx(verify(standard_disk).total_curvature, abs=1e-12)

    tripled = scale(standard_disk, 3)
    assert verify(tripled).total_curvature == pytest.approx(2 * pi, abs=1e-8)

    with pytest.raises(ConfigurationError):
        scale(standard_disk, 0)


def test_hemisphere_fails_only_flatness(hemisphere, loose_gauss_bonnet):
    report = verify(hemisphere(), loose_gauss_bonnet)
    assert report.failures == ("flatness",)
    assert report.boundary_geodesic_defect <= 1e-10
    assert report.total_curvature == pytest.approx(2 * pi, abs=1e-5)
    # |h''(1/4)| = 2 pi
    assert report.flatness[0] == pytest.approx(2 * pi, rel=1e-3)


def test_flat_disk_is_not_geodesic():
    rho = np.linspace(0.0, 1.0, 2049)
    report = verify(DiskProfile(rho=rho, h=rho.copy()))
    assert report.failures == ("geodesic",)
    assert report.min_K == 0.0
    assert report.boundary_geodesic_defect == pytest.approx(1.0)
    assert report.total_curvature == pytest.approx(0.0, abs=1e-6)
    assert report.area == pytest.approx(pi)


def test_verify_rejects_tiny_grids():
    rho = np.linspace(0.0, 1.0, 6)
    with pytest.raises(GridTooCoarse):
        verify(DiskProfile(rho=rho, h=rho))


def test_profile_must_start_at_the_pole():
    with pytest.raises(ValueError):
        DiskProfile(rho=np.array([0.1, 0.2, 0.3]), h=np.array([0.1, 0.2, 0.3]))


def test_collar_keeps_boundary_length(standard_disk):
    assert attach_flat_collar(standard_disk, 0.0) is standard_disk

    extended = attach_flat_collar(standard_disk, 0.5)
    assert extended.boundary_length == standard_disk.boundary_length
    assert extended.rho_max == standard_disk.rho_max + 0.5

    grown = verify(extended).area - verify(standard_disk).area
    assert grown == pytest.approx(0.5 * standard_disk.boundary_length, rel=1e-12)
    assert verify(extended).passed


@pytest.mark.parametrize("length", [1e-6, 0.3 / 2048, 1.7 / 2048, 0.123456789])
def test_collar_length_is_exact(standard_disk, length):
    extended = attach_flat_collar(standard_disk, length)
    assert extended.rho_max == standard_disk.rho_max + length
    assert extended.step == standard_disk.step
    assert np.all(np.diff(extended.rho) > 0)
    np.testing.assert_array_equal(extended.h[standard_disk.intervals:], standard_disk.h[-1])
    grown = verify(extended).area - verify(standard_disk).area
    assert grown == pytest.approx(length * standard_disk.boundary_length, rel=1e-9)


def test_profile_arrays_are_read_only_copies():
    rho = np.linspace(0.0, 1.0, 11)
    h = rho.copy()
    d = DiskProfile(rho=rho, h=h)
    h[3] = 7.0
    assert d.h[3] == rho[3]
    with pytest.raises(ValueError):
        d.h[3] = 7.0
    with pytest.raises(ValueError):
        d.rho[-1] = 2.0
    assert scale(d, 2.0).h.flags.writeable is False


def test_collar_needs_a_flat_boundary(hemisphere):
    with pytest.raises(BoundaryNotFlat):
        attach_flat_collar(hemisphere(), 0.1)


def test_collar_length_is_nonnegative(standard_disk):
    with pytest.raises(ConfigurationError):
        attach_flat_collar(standard_disk, -1.0)


def test_revolution_mesh_layout(hemisphere):
    vertices, faces = revolution_mesh(hemisphere(256), rings=8, segments=12)
    assert vertices.shape == (1 + 8 * 12, 3)
    assert len(faces) == 12 + 2 * 12 * 7
    assert max(max(face) for face in faces) == len(vertices) - 1

    # the outer ring of a hemisphere is its equator
    radii = np.hypot(vertices[-12:, 0], vertices[-12:, 1])
    np.testing.assert_allclose(radii, 1 / (2 * pi), rtol=1e-12)
    np.testing.assert_allclose(vertices[-12:, 2], 1 / (2 * pi), rtol=1e-3)


def test_tolerance_override_is_validated():
    with pytest.raises(ConfigurationError):
        Tolerances().override(geodesic=-1.0)
