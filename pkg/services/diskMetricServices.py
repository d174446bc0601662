"""
The standard disk D0: a rotationally symmetric metric d rho^2 + h^2 d phi^2 with
nonnegative curvature, geodesic boundary and curvature vanishing to high order there.
"""
import logging
from math import pi
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid, trapezoid
from scipy.optimize import brentq

from config.settings import DISK_SHAPE, GRID, Tolerances
from exceptions.geometryExceptions import (
    BoundaryNotFlat,
    ConfigurationError,
    GridTooCoarse,
    InvalidShape,
    ShootingFailed,
)
from model.diskModel import CurvatureReport, DiskProfile

logger = logging.getLogger(__name__)

Shape = Callable[[np.ndarray], np.ndarray]

MIN_SYNTHESIS_GRID = 100
MIN_VERIFY_GRID = 10
FLATNESS_ORDERS = (2, 3, 4)
# multiples of machine epsilon below which second differences are rounding noise
ROUNDING_FLOOR = 64 * np.finfo(float).eps


def _symmetric_bump(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1
    out[inside] = np.exp(1 - 1 / (1 - x[inside] ** 2))
    return out


def _bump(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = (x > 0) & (x < 1)
    xi = x[inside]
    out[inside] = np.exp(4 - 1 / (xi * (1 - xi)))
    return out


def _wide_bump(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1
    out[inside] = np.exp(1 - 1 / (1 - x[inside] ** 4))
    return out


SHAPES: Dict[str, Shape] = {
    "symmetric_bump": _symmetric_bump,
    "bump": _bump,
    "wide_bump": _wide_bump,
}


def get_shape(name: str) -> Shape:
    try:
        return SHAPES[name]
    except KeyError:
        raise ConfigurationError(
            f"Unknown disk shape '{name}'",
            {"shape": name, "available": sorted(SHAPES)},
        ) from None


def _check_shape(psi: Shape, samples: np.ndarray) -> None:
    if not np.all(np.isfinite(samples)) or np.any(samples < 0):
        raise InvalidShape("Curvature shape must be finite and nonnegative on [0, 1]")
    # interior points stay clear of the underflow zone of flat cutoffs
    interior = np.asarray(psi(np.linspace(0.05, 0.95, 19)), dtype=float)
    if np.any(interior <= 0):
        raise InvalidShape("Curvature shape must be positive inside (0, 1)")
    end = float(np.asarray(psi(np.array([1.0])), dtype=float)[0])
    if end != 0.0:
        raise InvalidShape("Curvature shape must vanish at the boundary", {"psi(1)": end})


def boundary_slope(h: np.ndarray, step: float) -> float:
    """Fourth-order one-sided estimate of h'(rho_max)"""
    return float(
        (25 * h[-1] - 48 * h[-2] + 36 * h[-3] - 16 * h[-4] + 3 * h[-5]) / (12 * step)
    )


def _integrate(weights: np.ndarray, step: float, amplitude: float) -> np.ndarray:
    """Stormer-Verlet for h'' = -c psi h with h(0) = 0 and h'(0) = 1"""
    n = weights.size - 1
    kick = step * step * amplitude * weights
    h = [0.0] * (n + 1)
    h[1] = step
    for i in range(1, n):
        h[i + 1] = 2 * h[i] - h[i - 1] - kick[i] * h[i]
    return np.array(h)


def synthesize_standard_disk(
    psi: Optional[Shape] = None,
    grid: int = GRID,
    target_boundary_length: float = 1.0,
) -> DiskProfile:
    """Shoot on the curvature amplitude until the boundary is geodesic, then rescale"""
    if grid < MIN_SYNTHESIS_GRID:
        raise GridTooCoarse(
            f"Disk synthesis needs at least {MIN_SYNTHESIS_GRID} intervals, got {grid}",
            {"grid": grid},
        )
    if not target_boundary_length > 0:
        raise ConfigurationError("Target boundary length must be positive")
    psi = psi or get_shape(DISK_SHAPE)

    x = np.linspace(0.0, 1.0, grid + 1)
    step = 1.0 / grid
    weights = np.asarray(psi(x), dtype=float)
    _check_shape(psi, weights)

    def defect(amplitude: float) -> float:
        return boundary_slope(_integrate(weights, step, amplitude), step)

    low, high = 0.0, 1.0
    high_defect = defect(high)
    while high_defect > 0:
        low, high = high, 2 * high
        if high > 2.0 ** 60:
            raise ShootingFailed("No sign change of h'(rho_max) found while doubling the amplitude")
        high_defect = defect(high)
    if not np.isfinite(high_defect):
        raise ShootingFailed("Shooting produced a non-finite profile", {"amplitude": high})
    logger.debug("shooting bracket [%g, %g]", low, high)

    amplitude = brentq(defect, low, high, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    h = _integrate(weights, step, amplitude)
    if np.any(h[1:] <= 0):
        raise ShootingFailed("Shooting converged to a profile that vanishes inside the disk")

    homothety = target_boundary_length / (2 * pi * h[-1])
    logger.debug("amplitude c=%.17g, homothety %.17g", amplitude, homothety)
    return DiskProfile(rho=homothety * x, h=homothety * h)


def scale(d: DiskProfile, r: float) -> DiskProfile:
    """The homothetic disk with metric r^2 <,>"""
    if not r > 0:
        raise ConfigurationError("Scale factor must be positive", {"r": r})
    if r == 1:
        return d
    return DiskProfile(rho=d.rho * r, h=d.h * r)


def _second_differences(h: np.ndarray) -> np.ndarray:
    """h_{i+1} - 2 h_i + h_{i-1} on the grid, odd extension at the pole, one-sided at the boundary"""
    d2 = np.empty_like(h)
    d2[1:-1] = h[2:] - 2 * h[1:-1] + h[:-2]
    d2[0] = 0.0
    d2[-1] = 2 * h[-1] - 5 * h[-2] + 4 * h[-3] - h[-4]
    return d2


def _one_sided_difference(h: np.ndarray, order: int) -> float:
    """Backward difference of the given order at the last grid point"""
    return float(np.diff(h[-(order + 1):], n=order)[0])


def verify(d: DiskProfile, tolerances: Optional[Tolerances] = None) -> CurvatureReport:
    tolerances = tolerances or Tolerances()
    n = d.intervals
    if n < MIN_VERIFY_GRID:
        raise GridTooCoarse(f"Verification needs at least {MIN_VERIFY_GRID} intervals, got {n}", {"grid": n})

    h, step = d.h, d.step
    scale_h = float(np.max(np.abs(h)))
    d2 = _second_differences(h)

    # K h = -h'' integrates to the total curvature
    integrand = -d2 / (step * step)
    total = 2 * pi * float(trapezoid(integrand, x=d.rho))

    floored = np.where(np.abs(d2) < ROUNDING_FLOOR * scale_h, 0.0, d2)
    with np.errstate(divide="ignore", invalid="ignore"):
        curvature = -floored[1:] / (step * step * h[1:])
    pole_numerator = h[2] - 2 * h[1]
    if abs(pole_numerator) < ROUNDING_FLOOR * scale_h:
        pole_numerator = 0.0
    pole = -pole_numerator / step ** 3
    curvature = np.concatenate(([pole], curvature))
    if not np.all(np.isfinite(curvature)):
        min_k = float("-inf")
    else:
        min_k = float(np.min(curvature))

    slope = boundary_slope(h, step)
    defect = abs(slope)
    gauss_bonnet_defect = abs(total - 2 * pi * (1 - slope))

    flatness = tuple(abs(_one_sided_difference(h, k)) / step ** k for k in FLATNESS_ORDERS)
    thresholds = tuple(tolerances.flatness * scale_h * step ** (1 - k) for k in FLATNESS_ORDERS)

    report = CurvatureReport(
        min_K=min_k,
        total_curvature=total,
        boundary_geodesic_defect=defect,
        flatness=flatness,
        boundary_length=d.boundary_length,
        area=2 * pi * float(trapezoid(h, x=d.rho)),
        geodesic_ok=defect <= tolerances.geodesic,
        curvature_ok=min_k >= -tolerances.curvature,
        gauss_bonnet_ok=gauss_bonnet_defect <= tolerances.gauss_bonnet,
        flatness_ok=all(value <= limit for value, limit in zip(flatness, thresholds)),
        gauss_bonnet_defect=gauss_bonnet_defect,
        flatness_thresholds=thresholds,
    )
    logger.debug("verify: min_K=%g total=%.17g defect=%g failures=%s", min_k, total, defect, report.failures)
    return report


def attach_flat_collar(
    d: DiskProfile, length: float, tolerances: Optional[Tolerances] = None
) -> DiskProfile:
    """Extend the disk by the flat annulus [rho_max, rho_max + length] with h constant

    The collar keeps the grid step except for its last cell, which ends exactly at rho_max + length.
    """
    if length < 0:
        raise ConfigurationError("Collar length must be nonnegative", {"length": length})
    report = verify(d, tolerances)
    if not (report.flatness_ok and report.geodesic_ok):
        raise BoundaryNotFlat(
            "Disk boundary is not a flat geodesic, a collar cannot be attached smoothly",
            {"failures": list(report.failures), "flatness": list(report.flatness)},
        )
    end = d.rho_max + length
    if end == d.rho_max:
        return d
    steps = max(1, int(round(length / d.step)))
    extra_rho = d.rho_max + d.step * np.arange(1, steps + 1)
    extra_rho[-1] = end
    return DiskProfile(
        rho=np.concatenate((d.rho, extra_rho)),
        h=np.concatenate((d.h, np.full(steps, d.h[-1]))),
    )


def revolution_mesh(
    d: DiskProfile, rings: int = 64, segments: int = 64
) -> Tuple[np.ndarray, List[Tuple[int, int, int]]]:
    """Surface of revolution (h cos phi, h sin phi, z(rho)) with z' = sqrt(1 - h'^2)

    Returns vertices and 0-based triangles; vertex 0 is the pole.
    """
    if rings < 1 or segments < 3:
        raise ConfigurationError("Mesh needs at least one ring and three segments")
    slope = np.gradient(d.h, d.rho, edge_order=2)
    lift = np.sqrt(np.clip(1 - slope ** 2, 0.0, None))
    z = cumulative_trapezoid(lift, x=d.rho, initial=0.0)

    picks = np.linspace(0, d.intervals, rings + 1).round().astype(int)[1:]
    phi = 2 * pi * np.arange(segments) / segments
    vertices = [np.array([0.0, 0.0, z[0]])]
    for index in picks:
        ring = np.column_stack((d.h[index] * np.cos(phi), d.h[index] * np.sin(phi), np.full(segments, z[index])))
        vertices.extend(ring)

    faces: List[Tuple[int, int, int]] = []
    for k in range(segments):
        faces.append((0, 1 + k, 1 + (k + 1) % segments))
    for ring in range(rings - 1):
        inner = 1 + ring * segments
        outer = inner + segments
        for k in range(segments):
            k1 = (k + 1) % segments
            faces.append((inner + k, outer + k, outer + k1))
            faces.append((inner + k, outer + k1, inner + k1))
    return np.array(vertices), faces
