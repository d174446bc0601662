from typing import List, Optional

from pydantic import BaseModel, Field

from config.settings import DISK_SHAPE, GRID
from model.diskModel import CurvatureReport
from schemas.baseSchemas import ToleranceOverrides, format_real
from schemas.manifoldSchemas import ClassificationSchema, DescriptionSchema


class DiskBuildRequest(BaseModel):
    """Schema for realizing a description with standard disks"""
    description: DescriptionSchema
    grid: int = Field(GRID, ge=100, description="Intervals of the radial grid")
    shape: str = Field(DISK_SHAPE, description="Curvature shape of the standard disk")
    tolerances: ToleranceOverrides = ToleranceOverrides()


class DiskVerifyRequest(BaseModel):
    """Samples of a warping function h on a uniform grid from the pole"""
    rho: List[float] = Field(..., min_length=2)
    h: List[float] = Field(..., min_length=2)
    tolerances: ToleranceOverrides = ToleranceOverrides()


class CurvatureReportSchema(BaseModel):
    min_K: str
    total_curvature: str
    boundary_geodesic_defect: str
    gauss_bonnet_defect: str
    flatness: List[str]
    flatness_thresholds: List[str]
    boundary_length: str
    area: str
    passed: bool
    failures: List[str]


def report_to_schema(report: CurvatureReport) -> CurvatureReportSchema:
    return CurvatureReportSchema(
        min_K=format_real(report.min_K),
        total_curvature=format_real(report.total_curvature),
        boundary_geodesic_defect=format_real(report.boundary_geodesic_defect),
        gauss_bonnet_defect=format_real(report.gauss_bonnet_defect),
        flatness=[format_real(value) for value in report.flatness],
        flatness_thresholds=[format_real(value) for value in report.flatness_thresholds],
        boundary_length=format_real(report.boundary_length),
        area=format_real(report.area),
        passed=report.passed,
        failures=list(report.failures),
    )


class BuiltDiskSchema(BaseModel):
    cylinder: int
    rho_max: str
    intervals: int
    boundary_length: str
    collar: str
    report: CurvatureReportSchema
    profile: Optional[str] = Field(None, description="CSV file the profile was written to")


class BuildSchema(BaseModel):
    classification: ClassificationSchema
    disks: List[BuiltDiskSchema]
