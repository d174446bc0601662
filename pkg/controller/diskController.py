import logging
from pathlib import Path
from typing import Optional

from config.fileExport import write_conformal, write_isotopy, write_obj, write_profile
from config.settings import POLAR_ANGLES, POLAR_RADII, Tolerances
from exceptions.geometryExceptions import MalformedInput
from model.conformalModel import ConformalDisk
from model.diskModel import DiskProfile
from schemas.baseSchemas import ToleranceOverrides, format_real
from schemas.diskSchemas import (
    BuildSchema,
    BuiltDiskSchema,
    DiskBuildRequest,
    DiskVerifyRequest,
    report_to_schema,
)
from schemas.manifoldSchemas import classification_to_schema, description_to_domain
from services.assemblyServices import absorb_flat_slab, realize
from services.diskMetricServices import revolution_mesh, verify
from services.isotopyServices import deform, geodesic_defect, standard_factor

logger = logging.getLogger(__name__)


def tolerances_from(overrides: Optional[ToleranceOverrides]) -> Tolerances:
    if overrides is None:
        return Tolerances()
    return Tolerances().override(**overrides.model_dump())


def handle_build(
    request: DiskBuildRequest,
    out_dir: Optional[Path] = None,
    factors: bool = False,
    radii: int = POLAR_RADII,
    angles: int = POLAR_ANGLES,
) -> dict:
    """Cylinder parameters plus one standard disk per cylinder, optionally written as CSV"""
    g = description_to_domain(request.description)
    tolerances = tolerances_from(request.tolerances)
    realization = realize(g, grid=request.grid, shape=request.shape, tolerances=tolerances)
    collars = absorb_flat_slab(g).cylinder_collars
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)

    disks = []
    for index, (disk, collar) in enumerate(zip(realization.disks, collars), start=1):
        profile_name = None
        if out_dir is not None:
            profile_name = f"cylinder_{index}.csv"
            write_profile(disk, out_dir / profile_name)
            if factors:
                write_conformal(standard_factor(disk, radii, angles), out_dir / f"cylinder_{index}_factor.csv")
        disks.append(
            BuiltDiskSchema(
                cylinder=index,
                rho_max=format_real(disk.rho_max),
                intervals=disk.intervals,
                boundary_length=format_real(disk.boundary_length),
                collar=format_real(collar),
                report=report_to_schema(verify(disk, tolerances)),
                profile=profile_name,
            )
        )
    logger.info("Built %d standard disk(s) for %s", len(disks), realization.classification.spaceform)
    return {
        "success": True,
        "message": "Metric realized successfully",
        "data": BuildSchema(
            classification=classification_to_schema(realization.classification),
            disks=disks,
        ).model_dump(mode="json", exclude_none=True),
    }


def verify_profile(d: DiskProfile, tolerances: Tolerances) -> dict:
    report = verify(d, tolerances)
    logger.info("Verified profile with %d intervals: %s", d.intervals, "passed" if report.passed else report.failures)
    return {
        "success": True,
        "message": "Profile verified",
        "data": report_to_schema(report).model_dump(mode="json"),
    }


def handle_verify(request: DiskVerifyRequest) -> dict:
    try:
        profile = DiskProfile(rho=request.rho, h=request.h)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    return verify_profile(profile, tolerances_from(request.tolerances))


def handle_deform(
    u: ConformalDisk,
    u0: ConformalDisk,
    steps: int,
    tolerances: Tolerances,
    out_dir: Path,
) -> dict:
    """Conformal isotopy from u to the standard factor u0, written as numbered CSVs"""
    path = deform(u, u0, steps, tolerances)
    write_isotopy(path, out_dir)
    drift = max(abs(length - u0.boundary_length) for length in path.boundary_lengths)
    logger.info("Deformation with %d steps written to %s", path.steps, out_dir)
    return {
        "success": True,
        "message": "Isotopy computed successfully",
        "data": {
            "directory": str(out_dir),
            "steps": path.steps,
            "boundary_length": format_real(u0.boundary_length),
            "max_boundary_drift": format_real(drift),
            "min_curvature": format_real(min(path.curvature_minima)),
            "normalizations": [format_real(a) for a in path.normalizations],
            "geodesic_defect": {
                "start": format_real(geodesic_defect(u0)),
                "end": format_real(geodesic_defect(u)),
            },
        },
    }


def handle_mesh(d: DiskProfile, rings: int, segments: int, out_path: Path) -> dict:
    vertices, faces = revolution_mesh(d, rings, segments)
    write_obj(vertices, faces, out_path)
    logger.info("Mesh with %d vertices written to %s", len(vertices), out_path)
    return {
        "success": True,
        "message": "Mesh written successfully",
        "data": {"path": str(out_path), "vertices": len(vertices), "faces": len(faces)},
    }
