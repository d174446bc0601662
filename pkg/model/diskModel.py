from dataclasses import dataclass, field
from math import pi
from typing import Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class DiskProfile:
    """Warped metric d rho^2 + h(rho)^2 d phi^2 sampled on a grid starting at the pole

    The grid is uniform except that an attached flat collar may end in a shorter or longer cell.
    Both arrays are read-only copies.
    """
    rho: np.ndarray
    h: np.ndarray

    def __post_init__(self):
        rho = np.array(self.rho, dtype=float)
        h = np.array(self.h, dtype=float)
        if rho.ndim != 1 or rho.shape != h.shape or rho.size < 2:
            raise ValueError("rho and h must be 1-d arrays of the same length >= 2")
        if rho[0] != 0.0 or rho[-1] <= 0.0:
            raise ValueError("profile must start at the pole rho = 0 and have rho_max > 0")
        rho.setflags(write=False)
        h.setflags(write=False)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "h", h)

    @property
    def intervals(self) -> int:
        return self.rho.size - 1

    @property
    def rho_max(self) -> float:
        return float(self.rho[-1])

    @property
    def step(self) -> float:
        return float(self.rho[1] - self.rho[0])

    @property
    def boundary_length(self) -> float:
        return 2 * pi * float(self.h[-1])


@dataclass(frozen=True)
class CurvatureReport:
    min_K: float
    total_curvature: float
    boundary_geodesic_defect: float
    flatness: Tuple[float, ...]
    boundary_length: float
    area: float
    # pass/fail against the tolerances used to build the report
    geodesic_ok: bool = True
    curvature_ok: bool = True
    gauss_bonnet_ok: bool = True
    flatness_ok: bool = True
    gauss_bonnet_defect: float = 0.0
    flatness_thresholds: Tuple[float, ...] = field(default_factory=tuple)

    @property
    def failures(self) -> Tuple[str, ...]:
        checks = (
            ("geodesic", self.geodesic_ok),
            ("curvature", self.curvature_ok),
            ("gauss_bonnet", self.gauss_bonnet_ok),
            ("flatness", self.flatness_ok),
        )
        return tuple(name for name, ok in checks if not ok)

    @property
    def passed(self) -> bool:
        return not self.failures
