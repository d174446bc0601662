from dataclasses import dataclass
from fractions import Fraction
from math import pi, sqrt


@dataclass(frozen=True)
class CylinderParams:
    """Screw motion g(x, s) = (R_theta(x), s + t) over a disk with boundary length r.

    Squared lengths and the twist are carried exactly; r and t are derived.
    """
    r_sq: Fraction
    theta: Fraction
    t_sq: Fraction

    def __post_init__(self):
        if self.r_sq <= 0 or self.t_sq <= 0:
            raise ValueError("cylinder lengths must be positive")
        if not 0 <= self.theta < 1:
            raise ValueError(f"cylinder twist {self.theta} outside [0, 1)")

    @property
    def r(self) -> float:
        return sqrt(self.r_sq)

    @property
    def t(self) -> float:
        return sqrt(self.t_sq)

    @property
    def rotation_angle(self) -> float:
        return 2 * pi * float(self.theta)
