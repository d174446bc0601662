from fastapi import APIRouter, Path

from controller.spaceformController import get_prism_info, handle_equiv
from schemas.spaceformSchemas import EquivRequest

router = APIRouter(tags=["Space Forms"])


@router.post("/spaceform/equiv", summary="Diffeomorphism test for lens spaces and prism manifolds")
async def compare_spaceforms(request: EquivRequest):
    """
    - **first**, **second**: {"kind": "lens", "p", "q"} or {"kind": "prism", "m", "n"}

    P(1, n) is compared with lens spaces through L(4n, 2n - 1).
    """
    return handle_equiv(request)


@router.get("/spaceform/prism/{m}/{n}", summary="Invariants of the prism manifold P(m, n)")
async def prism_info(
    m: int = Path(..., ge=1, description="Exponent of a in the gluing word"),
    n: int = Path(..., ge=1, description="Half the exponent of b in the gluing word"),
):
    return get_prism_info(m, n)
