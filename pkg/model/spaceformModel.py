from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Union

from exceptions.geometryExceptions import NotCoprime


class SpaceFormKind(str, Enum):
    LENS = "lens"
    PRISM = "prism"


@dataclass(frozen=True)
class LensType:
    """L(p, q) with 0 <= q < p and gcd(p, q) = 1; L(1, 0) is the 3-sphere"""
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or not 0 <= self.q < self.p:
            raise ValueError(f"L({self.p},{self.q}) is not in normal form")
        if gcd(self.p, self.q) != 1:
            raise NotCoprime(f"L({self.p},{self.q}): p and q are not coprime", {"p": self.p, "q": self.q})

    kind = SpaceFormKind.LENS

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class PrismType:
    """P(m, n) = S^3 / G_{m,n}"""
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"P({self.m},{self.n}) needs positive m and n")
        if gcd(self.m, self.n) != 1:
            raise NotCoprime(f"P({self.m},{self.n}): m and n are not coprime", {"m": self.m, "n": self.n})

    kind = SpaceFormKind.PRISM

    def __str__(self) -> str:
        return f"P({self.m},{self.n})"


SpaceForm = Union[LensType, PrismType]


@dataclass(frozen=True)
class PrismInvariants:
    group_order: int
    abelianization_order: int
    is_abelian: bool
