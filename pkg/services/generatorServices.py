"""
Random valid descriptions for property testing, reproducible from a seed.
"""
from fractions import Fraction
from math import gcd
from typing import List

import numpy as np

from model.latticeModel import FlatTorus, GramMatrix, LatticeVector
from model.manifoldModel import GGMDescription, OneSided, TwoSided

MAX_ENTRY = 50
MAX_DENOMINATOR = 100


def _rational(rng: np.random.Generator, positive: bool) -> Fraction:
    numerator = int(rng.integers(1 if positive else -MAX_DENOMINATOR, MAX_DENOMINATOR + 1))
    return Fraction(numerator, int(rng.integers(1, MAX_DENOMINATOR + 1)))


def random_gram(rng: np.random.Generator) -> GramMatrix:
    while True:
        g11, g22, g12 = _rational(rng, True), _rational(rng, True), _rational(rng, False)
        if g11 * g22 - g12 * g12 > 0:
            return GramMatrix(g11, g12, g22)


def random_primitive(rng: np.random.Generator, nonzero: bool = False) -> LatticeVector:
    low = 1 if nonzero else 0
    while True:
        x, y = (int(v) for v in rng.integers(low, MAX_ENTRY + 1, size=2))
        x *= 1 if rng.integers(2) else -1
        y *= 1 if rng.integers(2) else -1
        if (x, y) != (0, 0) and gcd(x, y) == 1:
            return LatticeVector(x, y)


def random_two_sided(rng: np.random.Generator) -> TwoSided:
    torus = FlatTorus(gram=random_gram(rng))
    f1 = random_primitive(rng)
    while True:
        f2 = random_primitive(rng)
        if f2 not in (f1, -f1):
            return TwoSided(torus=torus, f1=f1, f2=f2)


def random_one_sided(rng: np.random.Generator) -> OneSided:
    # both coordinates nonzero, so F is never a factor circle
    f = random_primitive(rng, nonzero=True)
    return OneSided(r1=_rational(rng, True), r2=_rational(rng, True), f=f)


def random_descriptions(seed: int, count: int) -> List[GGMDescription]:
    """Alternating two-sided and one-sided descriptions"""
    rng = np.random.default_rng(seed)
    return [random_two_sided(rng) if i % 2 == 0 else random_one_sided(rng) for i in range(count)]
