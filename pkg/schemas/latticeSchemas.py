from typing import Literal

from pydantic import BaseModel

from model.latticeModel import FlatTorus, GramMatrix, Marking
from schemas.baseSchemas import GramSchema, RationalStr, Vector


class TorusSchema(BaseModel):
    gram: GramSchema
    orientation: Literal[1, -1] = 1

    def to_domain(self) -> FlatTorus:
        gram = GramMatrix(self.gram.g11, self.gram.g12, self.gram.g22)
        return FlatTorus(gram=gram, orientation=self.orientation)


def torus_to_schema(torus: FlatTorus) -> TorusSchema:
    g = torus.gram
    return TorusSchema(
        gram=GramSchema(g11=str(g.g11), g12=str(g.g12), g22=str(g.g22)),
        orientation=torus.orientation,
    )


class MarkingRequest(BaseModel):
    """Schema for normalizing the marking of a foliation direction"""
    torus: TorusSchema
    v: Vector


class MarkingSchema(BaseModel):
    v: Vector
    vhat: Vector
    theta: RationalStr
    r_sq: RationalStr
    t_sq: RationalStr


def marking_to_schema(marking: Marking, r_sq, t_sq) -> MarkingSchema:
    return MarkingSchema(
        v=marking.v.as_list(),
        vhat=marking.vhat.as_list(),
        theta=str(marking.theta),
        r_sq=str(r_sq),
        t_sq=str(t_sq),
    )
