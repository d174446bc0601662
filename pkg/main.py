import logging

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.status import HTTP_422_UNPROCESSABLE_ENTITY, HTTP_500_INTERNAL_SERVER_ERROR

from config.logConfig import setup_logging
from config.settings import FRONTEND_URL, PORT
from exceptions.geometryExceptions import GeometryError
from routes.diskRoute import router as disk_router
from routes.latticeRoute import router as lattice_router
from routes.manifoldRoute import router as manifold_router
from routes.moduliRoute import router as moduli_router
from routes.spaceformRoute import router as spaceform_router
from schemas.baseSchemas import ErrorBody, ErrorEnvelope

setup_logging()
logger = logging.getLogger(__name__)

app = FastAPI(
    title="Geometric Graph Manifold API",
    description="Markings, slopes, lens and prism classification, standard disks and moduli components",
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc",
)

# CORS
allowed_origins = [origin for origin in [FRONTEND_URL, "http://localhost:5173"] if origin]

app.add_middleware(
    CORSMiddleware,
    allow_origins=allowed_origins,
    allow_credentials=True,
    allow_methods=["GET", "POST", "OPTIONS"],
    allow_headers=["*"],
)


@app.exception_handler(GeometryError)
async def geometry_error_handler(request: Request, exc: GeometryError):
    status = HTTP_422_UNPROCESSABLE_ENTITY if exc.is_validation else HTTP_500_INTERNAL_SERVER_ERROR
    logger.warning("%s %s failed: %s %s", request.method, request.url.path, exc.code, exc.message)
    envelope = ErrorEnvelope(error=ErrorBody(**exc.to_dict()))
    return JSONResponse(status_code=status, content=envelope.model_dump(mode="json"))


@app.exception_handler(RequestValidationError)
async def request_validation_handler(request: Request, exc: RequestValidationError):
    logger.warning("%s %s rejected: %d schema error(s)", request.method, request.url.path, len(exc.errors()))
    return JSONResponse(
        status_code=HTTP_422_UNPROCESSABLE_ENTITY,
        content=ErrorEnvelope(
            error=ErrorBody(
                code="INVALID_REQUEST",
                message="Request body does not match the schema",
                detail={"errors": jsonable_errors(exc)},
            )
        ).model_dump(mode="json"),
    )


def jsonable_errors(exc: RequestValidationError):
    return [
        {"loc": [str(part) for part in error.get("loc", ())], "msg": error.get("msg", "")}
        for error in exc.errors()
    ]


# Routes
app.include_router(lattice_router, prefix="/api", tags=["Lattice"])
app.include_router(manifold_router, prefix="/api", tags=["Manifold"])
app.include_router(spaceform_router, prefix="/api", tags=["Space Forms"])
app.include_router(moduli_router, prefix="/api", tags=["Moduli"])
app.include_router(disk_router, prefix="/api", tags=["Disk Metrics"])


@app.on_event("startup")
async def startup_event():
    logger.info("Server running on port %d", PORT)


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "main:app",
        host="127.0.0.1",
        port=PORT,
        reload=True,
        timeout_keep_alive=60,
        access_log=True,
    )
