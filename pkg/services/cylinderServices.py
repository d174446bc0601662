"""
Twisted cylinders (D x R) / Z and the torus <-> (r, theta, t) dictionary.
"""
import logging
from fractions import Fraction
from math import gcd, sqrt
from typing import Tuple

from exceptions.geometryExceptions import SlopeOutOfRange
from model.cylinderModel import CylinderParams
from model.latticeModel import FlatTorus, GramMatrix, LatticeVector, RationalLike, to_rational
from services.latticeServices import (
    inner,
    marking_params,
    norm_sq,
    normalized_marking,
)
from services.slopeServices import slope_of

logger = logging.getLogger(__name__)

def cylinder_from_foliation(torus: FlatTorus, f: LatticeVector) -> CylinderParams:
    marking = normalized_marking(torus, f)
    r_sq, theta, t_sq = marking_params(torus, marking)
    return CylinderParams(r_sq=r_sq, theta=theta, t_sq=t_sq)


def boundary_torus(c: CylinderParams) -> FlatTorus:
    """The torus (S^1_r x R) / <g> in the basis (v, vhat)"""
    gram = GramMatrix(
        c.r_sq,
        c.theta * c.r_sq,
        c.theta * c.theta * c.r_sq + c.t_sq,
    )
    return FlatTorus(gram=gram)


def angle_between(
    torus: FlatTorus, f1: LatticeVector, f2: LatticeVector
) -> Tuple[float, Tuple[float, float]]:
    """cos of the angle between two nullity foliations, with the two slope-formula residuals"""
    data = slope_of(torus, f1, f2)
    c1 = cylinder_from_foliation(torus, f1)
    c2 = cylinder_from_foliation(torus, f2)

    direct = float(inner(torus, f1, f2)) / sqrt(norm_sq(torus, f1) * norm_sq(torus, f2))
    # cos(alpha) = (q + p theta1) r1 / r2 = (b - p theta2) r2 / r1
    via_first = float(data.q + data.p * c1.theta) * c1.r / c2.r
    via_second = float(data.b - data.p * c2.theta) * c2.r / c1.r
    return direct, (direct - via_first, direct - via_second)


def orthogonal_configuration(
    q: int, p: int, t1: RationalLike, r1: RationalLike
) -> Tuple[CylinderParams, CylinderParams]:
    """The two cylinders of the unique component with orthogonal nullity leaves"""
    if p == 0 or gcd(q, p) != 1:
        raise SlopeOutOfRange(f"({q}, {p}) is not a reduced slope", {"q": q, "p": p})
    if p < 0:
        q, p = -q, -p
    theta1 = Fraction(-q, p)
    if not 0 <= theta1 < 1:
        raise SlopeOutOfRange(
            f"-q/p = {theta1} is outside [0, 1): no orthogonal metric in this component",
            {"q": q, "p": p},
        )
    t1_exact, r1_exact = to_rational(t1), to_rational(r1)
    if t1_exact <= 0 or r1_exact <= 0:
        raise SlopeOutOfRange("cylinder lengths must be positive", {"t1": str(t1), "r1": str(r1)})

    # b q - a p = 1 with b taken in [0, p)
    b = pow(q, -1, p) if p > 1 else 0
    first = CylinderParams(r_sq=r1_exact ** 2, theta=theta1, t_sq=t1_exact ** 2)
    second = CylinderParams(
        r_sq=(p * t1_exact) ** 2,
        theta=Fraction(b, p),
        t_sq=(r1_exact / p) ** 2,
    )
    logger.debug("orthogonal configuration for q/p=%d/%d: %s, %s", q, p, first, second)
    return first, second


def s3_family(q: int) -> CylinderParams:
    """Second cylinder of the metric on S^3 with slope [q] over the unit square"""
    if q < 1:
        raise ValueError("s3_family needs q >= 1; use cylinder_from_foliation for q = 0")
    norm = 1 + q * q
    return CylinderParams(
        r_sq=Fraction(norm),
        theta=Fraction(norm - q, norm),
        t_sq=Fraction(1, norm),
    )
