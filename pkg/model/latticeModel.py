from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple, Union

from exceptions.geometryExceptions import NotPositiveDefinite

RationalLike = Union[Fraction, int, float, str]

# 2x2 integer matrix as ((u11, u12), (u21, u22))
IntMatrix = Tuple[Tuple[int, int], Tuple[int, int]]


def to_rational(value: RationalLike) -> Fraction:
    """Parse "a/b", decimal strings, ints, floats and Fractions into a reduced Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # decimal reading of the shortest repr, so 0.1 becomes 1/10
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Cannot read {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class GramMatrix:
    """Inner products of the fixed oriented basis e1, e2"""
    g11: Fraction
    g12: Fraction
    g22: Fraction

    def __post_init__(self):
        object.__setattr__(self, "g11", to_rational(self.g11))
        object.__setattr__(self, "g12", to_rational(self.g12))
        object.__setattr__(self, "g22", to_rational(self.g22))
        if self.g11 <= 0 or self.determinant <= 0:
            raise NotPositiveDefinite(
                "Gram matrix is not positive definite",
                {"g11": str(self.g11), "g12": str(self.g12), "g22": str(self.g22)},
            )

    @property
    def determinant(self) -> Fraction:
        return self.g11 * self.g22 - self.g12 * self.g12

    @classmethod
    def unit_square(cls) -> "GramMatrix":
        return cls(Fraction(1), Fraction(0), Fraction(1))

    @classmethod
    def rectangular(cls, r1_sq: RationalLike, r2_sq: RationalLike) -> "GramMatrix":
        return cls(to_rational(r1_sq), Fraction(0), to_rational(r2_sq))

    def __str__(self) -> str:
        return f"[[{self.g11}, {self.g12}], [{self.g12}, {self.g22}]]"


@dataclass(frozen=True)
class FlatTorus:
    gram: GramMatrix
    orientation: int = 1

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")

    @classmethod
    def unit_square(cls) -> "FlatTorus":
        return cls(GramMatrix.unit_square())

    @classmethod
    def rectangular(cls, r1_sq: RationalLike, r2_sq: RationalLike) -> "FlatTorus":
        return cls(GramMatrix.rectangular(r1_sq, r2_sq))


@dataclass(frozen=True, order=True)
class LatticeVector:
    x: int
    y: int

    def __post_init__(self):
        object.__setattr__(self, "x", int(self.x))
        object.__setattr__(self, "y", int(self.y))

    @property
    def is_primitive(self) -> bool:
        return (self.x, self.y) != (0, 0) and gcd(self.x, self.y) == 1

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.x, -self.y)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x - other.x, self.y - other.y)

    def scaled(self, n: int) -> "LatticeVector":
        return LatticeVector(n * self.x, n * self.y)

    def as_list(self):
        return [self.x, self.y]


def det(u: LatticeVector, w: LatticeVector) -> int:
    return u.x * w.y - u.y * w.x


@dataclass(frozen=True)
class Marking:
    """Oriented lattice basis (v, vhat) with twist theta = <v, vhat> / |v|^2"""
    v: LatticeVector
    vhat: LatticeVector
    theta: Fraction

    @property
    def is_normalized(self) -> bool:
        return 0 <= self.theta < 1
