import logging

from exceptions.geometryExceptions import EqualFoliations
from model.latticeModel import FlatTorus, LatticeVector, det
from model.slopeModel import SlopeClass, SlopeData
from services.latticeServices import normalized_marking, require_primitive

logger = logging.getLogger(__name__)


def _coordinates(v1: LatticeVector, vhat1: LatticeVector, w: LatticeVector):
    """Integer coordinates of w in the lattice basis (v1, vhat1)"""
    d = det(v1, vhat1)
    # Cramer's rule; d is +-1 for an oriented marking
    return det(w, vhat1) // d, det(v1, w) // d


def slope_of(torus: FlatTorus, f1: LatticeVector, f2: LatticeVector) -> SlopeData:
    """Algebraic slope of the foliation F2 with respect to F1"""
    require_primitive(f1, "f1")
    require_primitive(f2, "f2")
    if f2 == f1 or f2 == -f1:
        raise EqualFoliations(
            "The two foliations coincide, the universal cover is reducible",
            {"f1": f1.as_list(), "f2": f2.as_list()},
        )
    m1 = normalized_marking(torus, f1)
    m2 = normalized_marking(torus, f2)
    q, p = _coordinates(m1.v, m1.vhat, m2.v)
    a, b = _coordinates(m1.v, m1.vhat, m2.vhat)
    logger.debug("slope of %s w.r.t. %s: q=%d p=%d a=%d b=%d", f2, f1, q, p, a, b)
    return SlopeData(q=q, p=p, a=a, b=b)


def reverse(s: SlopeData) -> SlopeData:
    """Slope data of (F2, F1): v1 = b v2 - p vhat2, vhat1 = -a v2 + q vhat2"""
    return SlopeData(q=s.b, p=-s.p, a=-s.a, b=s.q)


def flip_orientation(s: SlopeData) -> SlopeData:
    """Replace vhat_i by -vhat_i: slopes become -q/p and b/p"""
    return SlopeData(q=s.q, p=-s.p, a=-s.a, b=s.b)


def slope_class(s: SlopeData) -> SlopeClass:
    """The relative slope [q/p] = {+-q/p, -+b/p}"""
    s1, s2 = s.slope, s.reverse_slope
    if s1 < 0 or (s1 == 0 and s2 < 0):
        s1, s2 = -s1, -s2
    return SlopeClass(s1=s1, s2=s2)
