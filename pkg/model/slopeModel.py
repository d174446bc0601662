from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple


@dataclass(frozen=True)
class SlopeData:
    """v2 = q v1 + p vhat1 and vhat2 = a v1 + b vhat1, with b q - a p = 1"""
    q: int
    p: int
    a: int
    b: int

    def __post_init__(self):
        if self.p == 0:
            raise ValueError("slope denominator p must be nonzero")
        if gcd(self.q, self.p) != 1:
            raise ValueError(f"q={self.q} and p={self.p} are not coprime")
        if self.b * self.q - self.a * self.p != 1:
            raise ValueError(f"b q - a p = {self.b * self.q - self.a * self.p}, expected 1")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.q, self.p)

    @property
    def reverse_slope(self) -> Fraction:
        return Fraction(-self.b, self.p)


@dataclass(frozen=True, eq=False)
class SlopeClass:
    """The relative slope {(s1, s2), (-s1, -s2)}, unordered in its two entries

    s1 is the slope q/p of the second foliation, signed so that s1 > 0 (or s1 = 0, s2 >= 0);
    s2 = -b/p is the coupled slope of the first foliation.
    """
    s1: Fraction
    s2: Fraction

    @property
    def key(self) -> Tuple[Fraction, Fraction]:
        """Smallest admissible member of the orbit under negation and swap"""
        s1, s2 = Fraction(self.s1), Fraction(self.s2)
        orbit = [(s1, s2), (-s1, -s2), (s2, s1), (-s2, -s1)]
        return min(pair for pair in orbit if pair[0] > 0 or (pair[0] == 0 and pair[1] >= 0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SlopeClass):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def as_pair(self) -> Tuple[Fraction, Fraction]:
        return self.s1, self.s2

    def __str__(self) -> str:
        return f"{{{self.s1}, {self.s2}}}"
