from fractions import Fraction
from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, Field, RootModel

from model.cylinderModel import CylinderParams
from model.latticeModel import LatticeVector
from model.manifoldModel import ClassificationResult, GGMDescription, OneSided, TwoSided, Violation
from model.slopeModel import SlopeClass, SlopeData
from schemas.baseSchemas import GramSchema, RationalStr, RealStr, Vector, format_real
from schemas.latticeSchemas import TorusSchema, torus_to_schema
from schemas.spaceformSchemas import SpaceFormSchema, spaceform_to_schema


def _real(text: str) -> float:
    return float(Fraction(text))


class TwoSidedSchema(BaseModel):
    """Two cylinders over a flat torus core"""
    type: Literal["two_sided"] = "two_sided"
    gram: GramSchema
    orientation: Literal[1, -1] = 1
    f1: Vector
    f2: Vector
    collar: RealStr = "0"
    cylinder_collars: Optional[List[RealStr]] = Field(None, min_length=2, max_length=2)


class OneSidedSchema(BaseModel):
    """One cylinder over a Klein bottle whose double cover is S^1_r1 x S^1_r2"""
    type: Literal["one_sided"] = "one_sided"
    r1: RealStr
    r2: RealStr
    f: Vector
    collar: RealStr = "0"
    cylinder_collars: Optional[List[RealStr]] = Field(None, min_length=1, max_length=1)


DescriptionSchema = Annotated[Union[TwoSidedSchema, OneSidedSchema], Field(discriminator="type")]


def description_to_domain(schema: Union[TwoSidedSchema, OneSidedSchema]) -> GGMDescription:
    if isinstance(schema, TwoSidedSchema):
        torus = TorusSchema(gram=schema.gram, orientation=schema.orientation).to_domain()
        collars = tuple(_real(c) for c in schema.cylinder_collars or ("0", "0"))
        return TwoSided(
            torus=torus,
            f1=LatticeVector(*schema.f1),
            f2=LatticeVector(*schema.f2),
            collar=_real(schema.collar),
            cylinder_collars=collars,
        )
    collars = tuple(_real(c) for c in schema.cylinder_collars or ("0",))
    return OneSided(
        r1=Fraction(schema.r1),
        r2=Fraction(schema.r2),
        f=LatticeVector(*schema.f),
        collar=_real(schema.collar),
        cylinder_collars=collars,
    )


def description_to_schema(g: GGMDescription) -> Union[TwoSidedSchema, OneSidedSchema]:
    collars = [format_real(c) for c in g.cylinder_collars] if any(g.cylinder_collars) else None
    if isinstance(g, TwoSided):
        torus = torus_to_schema(g.torus)
        return TwoSidedSchema(
            gram=torus.gram,
            orientation=torus.orientation,
            f1=g.f1.as_list(),
            f2=g.f2.as_list(),
            collar=format_real(g.collar),
            cylinder_collars=collars,
        )
    return OneSidedSchema(
        r1=str(g.r1),
        r2=str(g.r2),
        f=g.f.as_list(),
        collar=format_real(g.collar),
        cylinder_collars=collars,
    )


class ViolationSchema(BaseModel):
    code: str
    message: str


def violations_to_schema(violations: List[Violation]) -> List[ViolationSchema]:
    return [ViolationSchema(code=v.code, message=v.message) for v in violations]


class SlopeDataSchema(BaseModel):
    q: int
    p: int
    a: int
    b: int
    slope: RationalStr
    reverse_slope: RationalStr


class SlopeSchema(BaseModel):
    data: SlopeDataSchema
    slope_class: List[RationalStr]


def slope_to_schema(data: SlopeData, klass: SlopeClass) -> SlopeSchema:
    return SlopeSchema(
        data=SlopeDataSchema(
            q=data.q,
            p=data.p,
            a=data.a,
            b=data.b,
            slope=str(data.slope),
            reverse_slope=str(data.reverse_slope),
        ),
        slope_class=[str(klass.s1), str(klass.s2)],
    )


class CylinderSchema(BaseModel):
    """Exact squared lengths and twist, with decimal r and t"""
    r_sq: RationalStr
    theta: RationalStr
    t_sq: RationalStr
    r: str
    t: str


def cylinder_to_schema(c: CylinderParams) -> CylinderSchema:
    return CylinderSchema(
        r_sq=str(c.r_sq),
        theta=str(c.theta),
        t_sq=str(c.t_sq),
        r=format_real(c.r),
        t=format_real(c.t),
    )


class ClassificationSchema(BaseModel):
    sided: Literal["two_sided", "one_sided"]
    spaceform: SpaceFormSchema
    canonical_spaceform: SpaceFormSchema
    group_order: int
    slope: SlopeSchema
    cylinders: List[CylinderSchema]
    cos_alpha: Optional[str] = None
    core: TorusSchema


def classification_to_schema(result: ClassificationResult) -> ClassificationSchema:
    return ClassificationSchema(
        sided=result.sided.value,
        spaceform=spaceform_to_schema(result.spaceform),
        canonical_spaceform=spaceform_to_schema(result.canonical_spaceform),
        group_order=result.group_order,
        slope=slope_to_schema(result.slope, result.slope_class),
        cylinders=[cylinder_to_schema(c) for c in result.cylinders],
        cos_alpha=None if result.cos_alpha is None else format_real(result.cos_alpha),
        core=torus_to_schema(result.core),
    )


class CoverSchema(BaseModel):
    cover: TwoSidedSchema
    classification: ClassificationSchema


class ValidationSchema(BaseModel):
    valid: bool
    violations: List[ViolationSchema]


class Description(RootModel[DescriptionSchema]):
    """Either description variant, told apart by "type" """

