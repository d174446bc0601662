"""
Conformal isotopy from an arbitrary disk factor to the standard one.

Along the path the curvature K^s e^{2 w_s} = -Delta w_s is a convex combination of
the endpoint curvatures, so its sign is preserved.
"""
import logging
from math import log, pi
from typing import Callable, Optional

import numpy as np
from scipy.integrate import cumulative_simpson
from scipy.interpolate import make_interp_spline

from config.settings import POLAR_ANGLES, POLAR_RADII, STEPS, Tolerances
from exceptions.geometryExceptions import (
    ConfigurationError,
    CurvatureSignViolation,
    GridTooCoarse,
    ProfileSingular,
)
from model.conformalModel import ConformalDisk, IsotopyPath
from model.diskModel import DiskProfile

logger = logging.getLogger(__name__)

MIN_POLAR_GRID = 16

# fourth-order one-sided stencils at the boundary ring, listed from the ring inwards
SECOND_AT_RING = np.array([45, -154, 214, -156, 61, -10]) / 12
SECOND_NEXT_TO_RING = np.array([10, -15, -4, 14, -6, 1]) / 12
FIRST_AT_RING = np.array([25, -48, 36, -16, 3]) / 12
FIRST_NEXT_TO_RING = np.array([3, 10, -18, 6, -1]) / 12


def _check_grid(radii: int, angles: int) -> None:
    if radii < MIN_POLAR_GRID or angles < MIN_POLAR_GRID:
        raise GridTooCoarse(
            f"Polar grid must be at least {MIN_POLAR_GRID}x{MIN_POLAR_GRID}, got {radii}x{angles}",
            {"radii": radii, "angles": angles},
        )
    if angles % 2:
        raise ConfigurationError("Polar grid needs an even number of angles", {"angles": angles})


def measured_boundary_length(u: ConformalDisk) -> float:
    """Periodic trapezoid for the length of the unit circle in e^{2u}|dz|^2"""
    return float(2 * pi * np.mean(np.exp(u.u[-1])))


def sample_factor(
    factor: Callable[[np.ndarray, np.ndarray], np.ndarray],
    radii: int = POLAR_RADII,
    angles: int = POLAR_ANGLES,
    boundary_length: Optional[float] = None,
) -> ConformalDisk:
    """Sample u(sigma, phi) on the polar grid"""
    _check_grid(radii, angles)
    sigma = np.linspace(0.0, 1.0, radii + 1)
    phi = 2 * pi * np.arange(angles) / angles
    grid = np.asarray(factor(sigma[:, None], phi[None, :]), dtype=float)
    grid = np.broadcast_to(grid, (radii + 1, angles))
    disk = ConformalDisk(u=grid, boundary_length=0.0)
    length = boundary_length if boundary_length is not None else measured_boundary_length(disk)
    return ConformalDisk(u=disk.u, boundary_length=length)


def standard_factor(
    d: DiskProfile, radii: int = POLAR_RADII, angles: int = POLAR_ANGLES
) -> ConformalDisk:
    """Conformal factor u0 of a revolution profile: e^{u0(sigma)} sigma = h(rho(sigma))"""
    _check_grid(radii, angles)
    rho, h = d.rho, d.h
    if np.any(h[1:] <= 0):
        raise ProfileSingular(
            "Profile vanishes away from the pole",
            {"rho": float(rho[1:][h[1:] <= 0][0])},
        )

    # log sigma = int dtau / h, regularized by 1/h - 1/tau which tends to 0 at the pole
    integrand = np.zeros_like(h)
    integrand[1:] = 1 / h[1:] - 1 / rho[1:]
    regular = cumulative_simpson(integrand, x=rho, initial=0.0)
    pole_value = log(d.rho_max) + float(regular[-1])

    log_sigma = np.log(rho[1:]) + regular[1:] - pole_value
    sigma = np.concatenate(([0.0], np.exp(log_sigma)))
    u0 = np.concatenate(([pole_value], np.log(h[1:]) - log_sigma))

    spline = make_interp_spline(sigma, u0, k=5)
    target = np.linspace(0.0, 1.0, radii + 1)
    radial = spline(target)
    radial[0] = pole_value
    radial[-1] = u0[-1]
    logger.debug("standard factor: pole value %.17g, boundary value %.17g", pole_value, u0[-1])
    return ConformalDisk(
        u=np.repeat(radial[:, None], angles, axis=1),
        boundary_length=d.boundary_length,
    )


def _radial_stencil(values: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Apply a one-sided stencil to rows J, J-1, ... of the grid"""
    rows = values[::-1][: weights.size]
    return np.tensordot(weights, rows, axes=1)


def laplacian(u: ConformalDisk) -> np.ndarray:
    """Flat Laplacian u_ss + u_s / s + u_pp / s^2 on the polar grid, fourth order"""
    _check_grid(u.radii, u.angles)
    values = u.u
    radii, angles = u.radii, u.angles
    ds = 1.0 / radii
    dphi = 2 * pi / angles
    sigma = u.sigma

    # ghost row at -sigma_1 is row 1 seen through the pole
    ghost = np.roll(values[1], -(angles // 2))
    padded = np.vstack((ghost[None, :], values))

    first = np.zeros_like(values)
    second = np.zeros_like(values)
    # rows 1 .. J-2 with central stencils; padded index = row + 1
    centre = slice(2, radii)
    p = padded
    first[1:radii - 1] = (-p[4:radii + 2] + 8 * p[3:radii + 1] - 8 * p[1:radii - 1] + p[0:radii - 2]) / (12 * ds)
    second[1:radii - 1] = (
        -p[4:radii + 2] + 16 * p[3:radii + 1] - 30 * p[centre] + 16 * p[1:radii - 1] - p[0:radii - 2]
    ) / (12 * ds * ds)

    first[radii - 1] = _radial_stencil(values, FIRST_NEXT_TO_RING) / ds
    first[radii] = _radial_stencil(values, FIRST_AT_RING) / ds
    second[radii - 1] = _radial_stencil(values, SECOND_NEXT_TO_RING) / (ds * ds)
    second[radii] = _radial_stencil(values, SECOND_AT_RING) / (ds * ds)

    angular = (
        -np.roll(values, -2, axis=1)
        + 16 * np.roll(values, -1, axis=1)
        - 30 * values
        + 16 * np.roll(values, 1, axis=1)
        - np.roll(values, 2, axis=1)
    ) / (12 * dphi * dphi)

    result = np.empty_like(values)
    s = sigma[1:, None]
    result[1:] = second[1:] + first[1:] / s + angular[1:] / (s * s)

    ring1 = values[1].mean()
    ring2 = values[2].mean()
    result[0] = (16 * ring1 - ring2 - 15 * values[0, 0]) / (3 * ds * ds)
    return result


def boundary_normal_derivative(u: ConformalDisk) -> np.ndarray:
    """Outward normal derivative of u along the unit circle"""
    return _radial_stencil(u.u, FIRST_AT_RING) * u.radii


def geodesic_defect(u: ConformalDisk) -> float:
    """max |d_nu u + 1|; zero exactly when the unit circle is a geodesic of e^{2u}|dz|^2"""
    return float(np.max(np.abs(boundary_normal_derivative(u) + 1)))


def deform(
    u: ConformalDisk,
    u0: ConformalDisk,
    steps: int = STEPS,
    tolerances: Optional[Tolerances] = None,
) -> IsotopyPath:
    tolerances = tolerances or Tolerances()
    if steps < 1:
        raise ConfigurationError("Isotopy needs at least one step", {"steps": steps})
    if not u.same_grid(u0):
        raise ConfigurationError(
            "Conformal factors live on different grids",
            {"u": list(u.u.shape), "u0": list(u0.u.shape)},
        )
    r = u0.boundary_length
    if abs(u.boundary_length - r) > 1e-9 * r:
        logger.warning(
            "factor boundary length %.17g differs from the standard %.17g; the path renormalizes to the latter",
            u.boundary_length,
            r,
        )

    lap_start = laplacian(u0)
    lap_end = laplacian(u)
    dphi = 2 * pi / u.angles

    parameters, disks, normalizations, minima, lengths = [], [], [], [], []
    for k in range(steps + 1):
        s = k / steps
        curvature = -((1 - s) * lap_start + s * lap_end)
        worst = float(np.min(curvature))
        if worst < -tolerances.sign:
            j, i = np.unravel_index(int(np.argmin(curvature)), curvature.shape)
            raise CurvatureSignViolation(
                "Curvature of the interpolated metric is negative; an endpoint factor has K < 0",
                {"s": s, "min": worst, "sigma": float(j / u.radii), "phi": float(i * dphi)},
            )
        w = (1 - s) * u0.u + s * u.u
        length = dphi * float(np.sum(np.exp(w[-1])))
        a = 2 * log(r / length)
        member = ConformalDisk(u=w + a / 2, boundary_length=r)

        parameters.append(s)
        disks.append(member)
        normalizations.append(a)
        minima.append(worst)
        lengths.append(measured_boundary_length(member))
        logger.debug("isotopy step s=%.6f a=%.17g min(-lap w)=%g", s, a, worst)

    return IsotopyPath(
        parameters=tuple(parameters),
        disks=tuple(disks),
        normalizations=tuple(normalizations),
        curvature_minima=tuple(minima),
        boundary_lengths=tuple(lengths),
    )
