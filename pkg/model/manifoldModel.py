from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

from model.cylinderModel import CylinderParams
from model.diskModel import DiskProfile
from model.latticeModel import FlatTorus, LatticeVector, to_rational
from model.slopeModel import SlopeClass, SlopeData
from model.spaceformModel import LensType, SpaceForm


class Sidedness(str, Enum):
    TWO_SIDED = "two_sided"
    ONE_SIDED = "one_sided"


@dataclass(frozen=True)
class TwoSided:
    """C1 + T^2 + C2: two twisted cylinders glued along a flat torus core"""
    torus: FlatTorus
    f1: LatticeVector
    f2: LatticeVector
    # flat slab between the cylinders, not yet absorbed
    collar: float = 0.0
    # flat collars already absorbed into each cylinder
    cylinder_collars: Tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "collar", float(self.collar))
        object.__setattr__(self, "cylinder_collars", tuple(float(c) for c in self.cylinder_collars))

    sided = Sidedness.TWO_SIDED


@dataclass(frozen=True)
class OneSided:
    """C + K: one twisted cylinder over a Klein bottle covered by a rectangular torus"""
    r1: Fraction
    r2: Fraction
    f: LatticeVector
    # distance from the Klein bottle to the nonflat part of the cylinder
    collar: float = 0.0
    cylinder_collars: Tuple[float] = (0.0,)

    def __post_init__(self):
        object.__setattr__(self, "r1", to_rational(self.r1))
        object.__setattr__(self, "r2", to_rational(self.r2))
        object.__setattr__(self, "collar", float(self.collar))
        object.__setattr__(self, "cylinder_collars", tuple(float(c) for c in self.cylinder_collars))

    sided = Sidedness.ONE_SIDED

    @property
    def torus(self) -> FlatTorus:
        return FlatTorus.rectangular(self.r1 * self.r1, self.r2 * self.r2)


GGMDescription = Union[TwoSided, OneSided]


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def as_dict(self):
        return {"code": self.code, "message": self.message}


@dataclass(frozen=True)
class ClassificationResult:
    sided: Sidedness
    spaceform: SpaceForm
    canonical_spaceform: SpaceForm
    group_order: int
    slope: SlopeData
    slope_class: SlopeClass
    cylinders: Tuple[CylinderParams, ...]
    core: FlatTorus
    cos_alpha: Optional[float] = None


@dataclass(frozen=True)
class Realization:
    """Cylinder parameters plus the disk each cylinder is built over"""
    classification: ClassificationResult
    disks: Tuple[DiskProfile, ...] = field(compare=False)


class ComponentFamily(str, Enum):
    LENS_TYPE = "lens_type"
    PRISM_TYPE = "prism_type"


@dataclass(frozen=True)
class ComponentId:
    """Family, canonical space form and the slope classes read at the unit-square normal form

    A two-sided metric has one normal form per cylinder; swap_class is the one taken from the
    other cylinder. One-sided metrics have a single normal form and swap_class equals slope_class.
    """
    family: ComponentFamily
    spaceform: SpaceForm
    slope_class: SlopeClass
    swap_class: SlopeClass


@dataclass(frozen=True)
class ComponentReport:
    component: ComponentId
    witness: GGMDescription


class Infinite:
    """Marker for an infinite count"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "infinite"


INFINITE = Infinite()


@dataclass(frozen=True)
class PrismComponentReport:
    """Components of graph-manifold metrics on P(1, n), which is also a lens space"""
    prism_type: int
    lens_type: Infinite
    lens: LensType
