"""
Exact lattice geometry on a flat torus R^2 / Z^2 carrying a rational Gram matrix.

All quantities here are exact Fractions; square roots are left to the
numerical modules.
"""
import logging
from fractions import Fraction
from math import floor
from typing import Tuple

from exceptions.geometryExceptions import NonPrimitive, NotNormalized, NotUnimodular
from model.latticeModel import (
    FlatTorus,
    GramMatrix,
    IntMatrix,
    LatticeVector,
    Marking,
    det,
)

logger = logging.getLogger(__name__)


def extended_euclid(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0"""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def mod_inverse(a: int, m: int) -> int:
    g, s, _ = extended_euclid(a, m)
    if g != 1:
        raise ValueError(f"{a} has no inverse modulo {m}")
    return s % m


def inner(torus: FlatTorus, u: LatticeVector, w: LatticeVector) -> Fraction:
    g = torus.gram
    return (
        g.g11 * u.x * w.x
        + g.g12 * (u.x * w.y + u.y * w.x)
        + g.g22 * u.y * w.y
    )


def norm_sq(torus: FlatTorus, u: LatticeVector) -> Fraction:
    return inner(torus, u, u)


def covolume_sq(torus: FlatTorus) -> Fraction:
    return torus.gram.determinant


def require_primitive(v: LatticeVector, name: str = "v") -> None:
    if not v.is_primitive:
        raise NonPrimitive(
            f"Lattice vector {name} = ({v.x}, {v.y}) is not primitive",
            {name: v.as_list()},
        )


def twist(torus: FlatTorus, v: LatticeVector, w: LatticeVector) -> Fraction:
    return inner(torus, v, w) / norm_sq(torus, v)


def complement(torus: FlatTorus, v: LatticeVector) -> LatticeVector:
    """Some w completing v to an oriented basis of Z^2"""
    g, s, t = extended_euclid(v.x, v.y)
    if g != 1:
        raise NonPrimitive(f"Lattice vector ({v.x}, {v.y}) is not primitive", {"v": v.as_list()})
    # s*x + t*y = 1, so det(v, (-t, s)) = 1
    w = LatticeVector(-t, s)
    return w if torus.orientation == 1 else -w


def normalized_marking(torus: FlatTorus, v: LatticeVector) -> Marking:
    """The unique oriented marking (v, vhat) with theta in [0, 1)"""
    require_primitive(v)
    w = complement(torus, v)
    shift = floor(twist(torus, v, w))
    vhat = w - v.scaled(shift)
    return Marking(v=v, vhat=vhat, theta=twist(torus, v, vhat))


def marking_params(torus: FlatTorus, marking: Marking) -> Tuple[Fraction, Fraction, Fraction]:
    """(|v|^2, theta, |vhat - theta v|^2) of a normalized marking"""
    if not marking.is_normalized:
        raise NotNormalized(
            f"Marking twist {marking.theta} lies outside [0, 1)",
            {"theta": str(marking.theta)},
        )
    r_sq = norm_sq(torus, marking.v)
    theta = marking.theta
    # |vhat - theta v|^2 = |vhat|^2 - 2 theta <v, vhat> + theta^2 |v|^2
    t_sq = norm_sq(torus, marking.vhat) - theta * theta * r_sq
    return r_sq, theta, t_sq


def matrix_det(u: IntMatrix) -> int:
    return u[0][0] * u[1][1] - u[0][1] * u[1][0]


def change_of_basis(torus: FlatTorus, u: IntMatrix) -> FlatTorus:
    """Re-coordinatize the torus in the basis given by the columns of U"""
    if matrix_det(u) != 1:
        raise NotUnimodular(
            f"Base change has determinant {matrix_det(u)}, expected +1",
            {"matrix": [list(u[0]), list(u[1])]},
        )
    c1 = LatticeVector(u[0][0], u[1][0])
    c2 = LatticeVector(u[0][1], u[1][1])
    gram = GramMatrix(
        norm_sq(torus, c1),
        inner(torus, c1, c2),
        norm_sq(torus, c2),
    )
    return FlatTorus(gram=gram, orientation=torus.orientation)


def transform_vector(u: IntMatrix, v: LatticeVector) -> LatticeVector:
    """Coordinates of v in the basis of change_of_basis(T, U), i.e. U^-1 v"""
    if matrix_det(u) != 1:
        raise NotUnimodular(f"Base change has determinant {matrix_det(u)}, expected +1")
    return LatticeVector(
        u[1][1] * v.x - u[0][1] * v.y,
        -u[1][0] * v.x + u[0][0] * v.y,
    )


def flip_orientation(torus: FlatTorus) -> FlatTorus:
    return FlatTorus(gram=torus.gram, orientation=-torus.orientation)


def is_oriented_basis(torus: FlatTorus, v: LatticeVector, w: LatticeVector) -> bool:
    return det(v, w) == torus.orientation
