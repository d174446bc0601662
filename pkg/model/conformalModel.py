from dataclasses import dataclass
from math import pi
from typing import Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class ConformalDisk:
    """Conformal factor u of the metric e^{2u} |dz|^2 on the closed unit disk

    Sampled on the polar grid sigma_j = j / J, phi_k = 2 pi k / N_phi; row 0 is the pole.
    """
    u: np.ndarray
    boundary_length: float

    def __post_init__(self):
        u = np.array(self.u, dtype=float)
        if u.ndim != 2 or u.shape[0] < 2 or u.shape[1] < 1:
            raise ValueError("conformal factor must be a (radii + 1) x angles grid")
        # the pole is a single point
        u[0, :] = u[0, :].mean()
        u.setflags(write=False)
        object.__setattr__(self, "u", u)

    @property
    def radii(self) -> int:
        return self.u.shape[0] - 1

    @property
    def angles(self) -> int:
        return self.u.shape[1]

    @property
    def sigma(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.radii + 1)

    @property
    def phi(self) -> np.ndarray:
        return 2 * pi * np.arange(self.angles) / self.angles

    def same_grid(self, other: "ConformalDisk") -> bool:
        return self.u.shape == other.u.shape


@dataclass(frozen=True)
class IsotopyPath:
    """Factors w_s = (1 - s) u0 + s u + a(s) / 2 along s_0 = 0 < ... < s_M = 1"""
    parameters: Tuple[float, ...]
    disks: Tuple[ConformalDisk, ...]
    normalizations: Tuple[float, ...]
    curvature_minima: Tuple[float, ...]
    boundary_lengths: Tuple[float, ...]

    @property
    def steps(self) -> int:
        return len(self.parameters) - 1
