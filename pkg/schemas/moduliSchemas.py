from typing import List, Literal

from pydantic import BaseModel, Field

from model.manifoldModel import ComponentId, ComponentReport
from schemas.baseSchemas import RationalStr
from schemas.manifoldSchemas import DescriptionSchema, description_to_schema
from schemas.spaceformSchemas import SpaceFormSchema, spaceform_to_schema


class ComponentsRequest(BaseModel):
    """Schema for enumerating components of lens-type metrics on L(p, q)"""
    p: int = Field(..., ge=1)
    q: int
    bound: int = Field(..., ge=1)


class ComponentIdSchema(BaseModel):
    family: Literal["lens_type", "prism_type"]
    spaceform: SpaceFormSchema
    slope_class: List[RationalStr]
    swap_class: List[RationalStr]


def component_to_schema(component: ComponentId) -> ComponentIdSchema:
    return ComponentIdSchema(
        family=component.family.value,
        spaceform=spaceform_to_schema(component.spaceform),
        slope_class=[str(component.slope_class.s1), str(component.slope_class.s2)],
        swap_class=[str(component.swap_class.s1), str(component.swap_class.s2)],
    )


class ComponentReportSchema(ComponentIdSchema):
    witness_description: DescriptionSchema


def component_report_to_schema(report: ComponentReport) -> ComponentReportSchema:
    base = component_to_schema(report.component)
    return ComponentReportSchema(
        family=base.family,
        spaceform=base.spaceform,
        slope_class=base.slope_class,
        swap_class=base.swap_class,
        witness_description=description_to_schema(report.witness),
    )


class ComponentsSchema(BaseModel):
    lens: SpaceFormSchema
    bound: int
    count: int
    components: List[ComponentReportSchema]


class SameComponentRequest(BaseModel):
    first: DescriptionSchema
    second: DescriptionSchema


class SameComponentSchema(BaseModel):
    first: ComponentIdSchema
    second: ComponentIdSchema
    same_component: bool
