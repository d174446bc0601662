from fastapi import APIRouter

from controller.diskController import handle_build, handle_verify
from schemas.diskSchemas import DiskBuildRequest, DiskVerifyRequest

router = APIRouter(tags=["Disk Metrics"])


# numerical work runs in the threadpool
@router.post("/disk/build", summary="Realize a description with standard disks")
def build_disks(request: DiskBuildRequest):
    """
    Synthesize the standard disk on a grid of **grid** intervals, scale it to each
    cylinder's boundary length, attach absorbed flat collars and verify the result.
    """
    return handle_build(request)


@router.post("/disk/verify", summary="Curvature report of a warping function")
def verify_disk(request: DiskVerifyRequest):
    return handle_verify(request)
