from fastapi import APIRouter

from controller.latticeController import handle_marking
from schemas.latticeSchemas import MarkingRequest

router = APIRouter(tags=["Lattice"])


@router.post("/lattice/marking", summary="Normalized marking of a foliation direction")
async def normalize_marking(request: MarkingRequest):
    """
    Normalize the marking of a primitive vector on a flat torus.

    - **torus**: rational Gram matrix (entries as "a/b" strings) and orientation
    - **v**: primitive lattice vector [x, y]

    Returns vhat with det(v, vhat) = orientation and theta in [0, 1), plus |v|^2 and t^2.
    """
    return handle_marking(request)
