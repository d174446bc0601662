"""
Whole-manifold descriptions: validation, classification into lens spaces and
prism manifolds, flat slab absorption and the orientation double cover.
"""
import logging
from functools import lru_cache
from typing import List, Optional

from config.settings import DISK_SHAPE, GRID, Tolerances
from exceptions.geometryExceptions import InvalidDescription
from model.diskModel import DiskProfile
from model.latticeModel import LatticeVector
from model.manifoldModel import (
    ClassificationResult,
    GGMDescription,
    OneSided,
    Realization,
    Sidedness,
    TwoSided,
    Violation,
)
from model.spaceformModel import PrismType
from services.cylinderServices import angle_between, cylinder_from_foliation
from services.diskMetricServices import attach_flat_collar, get_shape, scale, synthesize_standard_disk
from services.slopeServices import slope_class, slope_of
from services.spaceformServices import fundamental_group_order, lens_canonical, lens_normalize

logger = logging.getLogger(__name__)

REDUCIBLE = {LatticeVector(1, 0), LatticeVector(-1, 0), LatticeVector(0, 1), LatticeVector(0, -1)}
HORIZONTAL = LatticeVector(1, 0)


def _primitive_violation(v: LatticeVector, name: str) -> List[Violation]:
    if v.is_primitive:
        return []
    return [Violation("NON_PRIMITIVE", f"{name} = ({v.x}, {v.y}) is not a primitive lattice vector")]


def _collar_violations(g: GGMDescription) -> List[Violation]:
    if g.collar < 0 or any(c < 0 for c in g.cylinder_collars):
        return [Violation("NEGATIVE_COLLAR", "Flat collar lengths must be nonnegative")]
    return []


def validate(g: GGMDescription) -> List[Violation]:
    """Every failed hypothesis of the lens / prism construction, as data"""
    violations: List[Violation] = []
    if isinstance(g, TwoSided):
        violations += _primitive_violation(g.f1, "F1")
        violations += _primitive_violation(g.f2, "F2")
        if g.f1.is_primitive and g.f2.is_primitive and g.f2 in (g.f1, -g.f1):
            violations.append(
                Violation("EQUAL_FOLIATIONS", "F1 and F2 define the same foliation; the metric is reducible")
            )
        if len(g.cylinder_collars) != 2:
            violations.append(Violation("INVALID_DESCRIPTION", "A two-sided description has two cylinders"))
    else:
        if g.r1 <= 0 or g.r2 <= 0:
            violations.append(Violation("NOT_POSITIVE", "Rectangular torus radii must be positive"))
        violations += _primitive_violation(g.f, "F")
        if g.f in REDUCIBLE:
            violations.append(
                Violation(
                    "REDUCIBLE_FOLIATION",
                    f"F = ({g.f.x}, {g.f.y}) is a factor circle of the rectangular torus; the metric is reducible",
                )
            )
        if len(g.cylinder_collars) != 1:
            violations.append(Violation("INVALID_DESCRIPTION", "A one-sided description has one cylinder"))
    violations += _collar_violations(g)
    return violations


def require_valid(g: GGMDescription) -> None:
    violations = validate(g)
    if violations:
        raise InvalidDescription(
            violations[0].message,
            {"violations": [v.as_dict() for v in violations]},
        )


def canonical_foliation(g: OneSided) -> LatticeVector:
    """Sign-normalized (m, n) with m, n > 0"""
    return LatticeVector(abs(g.f.x), abs(g.f.y))


def classify(g: GGMDescription) -> ClassificationResult:
    require_valid(g)
    if isinstance(g, TwoSided):
        slope = slope_of(g.torus, g.f1, g.f2)
        lens = lens_normalize(slope.p, slope.q)
        cos_alpha, _ = angle_between(g.torus, g.f1, g.f2)
        result = ClassificationResult(
            sided=Sidedness.TWO_SIDED,
            spaceform=lens,
            canonical_spaceform=lens_canonical(lens),
            group_order=fundamental_group_order(lens),
            slope=slope,
            slope_class=slope_class(slope),
            cylinders=(
                cylinder_from_foliation(g.torus, g.f1),
                cylinder_from_foliation(g.torus, g.f2),
            ),
            core=g.torus,
            cos_alpha=cos_alpha,
        )
    else:
        f = canonical_foliation(g)
        torus = g.torus
        prism = PrismType(m=f.x, n=f.y)
        # the normalized marking of (1, 0) on a rectangular torus is ((1, 0), (0, 1))
        slope = slope_of(torus, HORIZONTAL, f)
        result = ClassificationResult(
            sided=Sidedness.ONE_SIDED,
            spaceform=prism,
            canonical_spaceform=prism,
            group_order=fundamental_group_order(prism),
            slope=slope,
            slope_class=slope_class(slope),
            cylinders=(cylinder_from_foliation(torus, f),),
            core=torus,
        )
    logger.debug("classified %s as %s", g.sided.value, result.spaceform)
    return result


def absorb_flat_slab(g: GGMDescription) -> GGMDescription:
    """Fold the flat slab into the adjacent cylinders"""
    if g.collar == 0:
        return g
    if isinstance(g, TwoSided):
        half = g.collar / 2
        c1, c2 = g.cylinder_collars
        return TwoSided(
            torus=g.torus, f1=g.f1, f2=g.f2, collar=0.0, cylinder_collars=(c1 + half, c2 + half)
        )
    (c,) = g.cylinder_collars
    return OneSided(r1=g.r1, r2=g.r2, f=g.f, collar=0.0, cylinder_collars=(c + g.collar,))


def double_cover(g: OneSided) -> TwoSided:
    """Lift through j(z, w) = (-z, conj(w)): F2 = dj(F) reflects the second circle"""
    if not isinstance(g, OneSided):
        raise InvalidDescription("Only one-sided descriptions have an orientation double cover")
    require_valid(g)
    f = canonical_foliation(g)
    (c,) = g.cylinder_collars
    return TwoSided(
        torus=g.torus,
        f1=f,
        f2=LatticeVector(f.x, -f.y),
        collar=2 * g.collar,
        cylinder_collars=(c, c),
    )


@lru_cache(maxsize=8)
def _standard_disk(shape: str, grid: int) -> DiskProfile:
    return synthesize_standard_disk(get_shape(shape), grid, 1.0)


def realize(
    g: GGMDescription,
    grid: int = GRID,
    shape: str = DISK_SHAPE,
    tolerances: Optional[Tolerances] = None,
) -> Realization:
    """Standard metric on g: each cylinder over the standard disk scaled to boundary length r"""
    classification = classify(g)
    absorbed = absorb_flat_slab(g)
    standard = _standard_disk(shape, grid)
    disks = tuple(
        attach_flat_collar(scale(standard, cylinder.r), collar, tolerances)
        for cylinder, collar in zip(classification.cylinders, absorbed.cylinder_collars)
    )
    logger.debug("realized %d cylinder disk(s) on a %d grid", len(disks), grid)
    return Realization(classification=classification, disks=disks)
