from fastapi import APIRouter

from controller.manifoldController import (
    handle_classify,
    handle_cover,
    handle_slope,
    handle_validate,
)
from schemas.manifoldSchemas import Description

router = APIRouter(tags=["Manifold"])


@router.post("/manifold/slope", summary="Slope data and relative slope class")
async def compute_slope(description: Description):
    """Slope q/p of F2 with respect to F1 (two-sided) or of F against the Klein bottle circle (one-sided)."""
    return handle_slope(description.root)


@router.post("/manifold/classify", summary="Diffeomorphism type of a description")
async def classify_description(description: Description):
    """
    Classify a description into a lens space L(p, q) or a prism manifold P(m, n).

    The response carries the slope, the cylinder parameters and, for two-sided
    descriptions, the angle between the nullity foliations.
    """
    return handle_classify(description.root)


@router.post("/manifold/validate", summary="List violated hypotheses")
async def validate_description(description: Description):
    return handle_validate(description.root)


@router.post("/manifold/cover", summary="Orientation double cover of a one-sided description")
async def cover_description(description: Description):
    return handle_cover(description.root)
