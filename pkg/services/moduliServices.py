"""
Connected components of the moduli space of geometric graph metrics.

Components are parametrized by the relative slope class, read off at the
unit-square normal form where the first marking is ((1, 0), (0, 1)). A two-sided
metric can be deformed to that normal form from either cylinder, so both classes
enter its component.
"""
import logging
from math import gcd
from typing import List, Tuple, Union

from model.latticeModel import FlatTorus, LatticeVector
from model.manifoldModel import (
    INFINITE,
    ComponentFamily,
    ComponentId,
    ComponentReport,
    GGMDescription,
    PrismComponentReport,
    TwoSided,
)
from model.slopeModel import SlopeClass, SlopeData
from model.spaceformModel import LensType, PrismType
from services.assemblyServices import canonical_foliation, require_valid
from services.latticeServices import normalized_marking
from services.slopeServices import slope_class, slope_of
from services.spaceformServices import lens_canonical, lens_normalize, lens_orbit, prism_as_lens

logger = logging.getLogger(__name__)

HORIZONTAL = LatticeVector(1, 0)


def _normal_form(q: int, p: int) -> SlopeData:
    """Slope data after deforming the core to the unit square with v1 = (1, 0), vhat1 = (0, 1)

    Reversing the orientation of the core sends (q, p) to (-q, p). The pair (a, b) is
    re-read from the normalized marking of (|q|, p), so b always matches q.
    """
    if p < 0:
        q, p = -q, -p
    q = abs(q)
    marking = normalized_marking(FlatTorus.unit_square(), LatticeVector(q, p))
    return SlopeData(q=q, p=p, a=marking.vhat.x, b=marking.vhat.y)


def _ordered(first: SlopeClass, second: SlopeClass) -> Tuple[SlopeClass, SlopeClass]:
    """The class with the larger leading slope comes first; a self-paired class shows its smallest form"""
    if first == second:
        lead = min(first, second, key=SlopeClass.as_pair)
        return lead, lead
    return (first, second) if first.s1 > second.s1 else (second, first)


def component_id(g: GGMDescription) -> ComponentId:
    require_valid(g)
    if isinstance(g, TwoSided):
        forward = slope_of(g.torus, g.f1, g.f2)
        backward = slope_of(g.torus, g.f2, g.f1)
        normal = _normal_form(forward.q, forward.p)
        lead, swap = _ordered(slope_class(normal), slope_class(_normal_form(backward.q, backward.p)))
        return ComponentId(
            family=ComponentFamily.LENS_TYPE,
            spaceform=lens_canonical(lens_normalize(normal.p, normal.q)),
            slope_class=lead,
            swap_class=swap,
        )
    f = canonical_foliation(g)
    klass = slope_class(_normal_form(f.x, f.y))
    return ComponentId(
        family=ComponentFamily.PRISM_TYPE,
        spaceform=PrismType(m=f.x, n=f.y),
        slope_class=klass,
        swap_class=klass,
    )


def same_component(g1: GGMDescription, g2: GGMDescription) -> bool:
    return component_id(g1) == component_id(g2)


def lens_witness(q: int, p: int) -> TwoSided:
    """Unit-square normal-form description with slope q/p"""
    return TwoSided(torus=FlatTorus.unit_square(), f1=HORIZONTAL, f2=LatticeVector(q, p))


def enumerate_lens_components(lens: LensType, bound: int) -> List[ComponentReport]:
    """Components of lens-type metrics on L with slope numerator at most bound"""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    orbit = lens_orbit(lens)
    reports: List[ComponentReport] = []
    seen = set()
    for q in range(bound + 1):
        if gcd(q, lens.p) != 1 or q % lens.p not in orbit:
            continue
        witness = lens_witness(q, lens.p)
        component = component_id(witness)
        if component in seen:
            continue
        seen.add(component)
        reports.append(ComponentReport(component=component, witness=witness))
    logger.debug("%s: %d component(s) with numerator <= %d", lens, len(reports), bound)
    return reports


def prism_component_count(prism: PrismType) -> Union[int, PrismComponentReport]:
    """1 for m > 1; for m = 1 the lens-type metrics on L(4n, 2n - 1) add infinitely many"""
    if prism.m > 1:
        return 1
    return PrismComponentReport(prism_type=1, lens_type=INFINITE, lens=prism_as_lens(prism))
