from fastapi import APIRouter

from controller.moduliController import handle_components, handle_same_component
from schemas.moduliSchemas import ComponentsRequest, SameComponentRequest

router = APIRouter(tags=["Moduli"])


@router.post("/moduli/components", summary="Components of lens-type metrics on L(p, q)")
async def list_components(request: ComponentsRequest):
    """Distinct slope classes with numerator up to **bound**, each with a unit-square witness description."""
    return handle_components(request)


@router.post("/moduli/same", summary="Whether two descriptions lie in the same moduli component")
async def compare_components(request: SameComponentRequest):
    return handle_same_component(request)
