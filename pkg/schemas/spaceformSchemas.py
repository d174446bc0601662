from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

from model.spaceformModel import LensType, PrismType, SpaceForm
from services.spaceformServices import lens_normalize


class SpaceFormSchema(BaseModel):
    """L(p, q) as {"kind": "lens", "p": p, "q": q}, P(m, n) as {"kind": "prism", "m": m, "n": n}"""
    kind: Literal["lens", "prism"]
    p: Optional[int] = None
    q: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None

    @model_validator(mode="after")
    def check_parameters(self):
        if self.kind == "lens" and (self.p is None or self.q is None):
            raise ValueError("a lens space needs p and q")
        if self.kind == "prism" and (self.m is None or self.n is None):
            raise ValueError("a prism manifold needs m and n")
        return self

    def to_domain(self) -> SpaceForm:
        if self.kind == "lens":
            return lens_normalize(self.p, self.q)
        return PrismType(m=self.m, n=self.n)


def spaceform_to_schema(form: SpaceForm) -> SpaceFormSchema:
    if isinstance(form, LensType):
        return SpaceFormSchema(kind="lens", p=form.p, q=form.q)
    return SpaceFormSchema(kind="prism", m=form.m, n=form.n)


class EquivRequest(BaseModel):
    first: SpaceFormSchema
    second: SpaceFormSchema


class EquivSchema(BaseModel):
    first: SpaceFormSchema
    second: SpaceFormSchema
    equivalent: bool


class PrismComponentsSchema(BaseModel):
    prism_type: int
    lens_type: Literal["infinite"]
    lens: SpaceFormSchema


class PrismInfoSchema(BaseModel):
    prism: SpaceFormSchema
    group_order: int
    abelianization_order: int
    is_abelian: bool
    presentation: str
    as_lens: Optional[SpaceFormSchema] = None
    components: Union[int, PrismComponentsSchema] = Field(
        ..., description="1, or both families when P(1, n) is also a lens space"
    )
