import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

from exceptions.geometryExceptions import ConfigurationError

load_dotenv()  # Load .env

# Verification tolerances
TOL_GEODESIC = float(os.getenv("GGM_TOL_GEODESIC", 1e-10))
TOL_FLATNESS = float(os.getenv("GGM_TOL_FLATNESS", 1e-6))
TOL_CURVATURE = float(os.getenv("GGM_TOL_CURVATURE", 1e-12))
TOL_GAUSS_BONNET = float(os.getenv("GGM_TOL_GAUSS_BONNET", 1e-8))
TOL_SIGN = float(os.getenv("GGM_TOL_SIGN", 1e-6))

# Grid sizes
GRID = int(os.getenv("GGM_GRID", 2048))
STEPS = int(os.getenv("GGM_STEPS", 32))
POLAR_RADII = int(os.getenv("GGM_POLAR_RADII", 128))
POLAR_ANGLES = int(os.getenv("GGM_POLAR_ANGLES", 64))

DISK_SHAPE = os.getenv("GGM_DISK_SHAPE", "symmetric_bump")
LOG_LEVEL = os.getenv("GGM_LOG_LEVEL", "INFO")
PORT = int(os.getenv("PORT", 8001))
FRONTEND_URL = os.getenv("FRONTEND_URL", "")


@dataclass(frozen=True)
class Tolerances:
    """Thresholds used by disk verification and the isotopy sign check"""
    geodesic: float = TOL_GEODESIC
    flatness: float = TOL_FLATNESS
    curvature: float = TOL_CURVATURE
    gauss_bonnet: float = TOL_GAUSS_BONNET
    sign: float = TOL_SIGN

    def __post_init__(self):
        for name in ("geodesic", "flatness", "curvature", "gauss_bonnet", "sign"):
            if not getattr(self, name) > 0:
                raise ConfigurationError(
                    f"Tolerance {name} must be positive",
                    {"tolerance": name, "value": getattr(self, name)},
                )

    def override(
        self,
        geodesic: Optional[float] = None,
        flatness: Optional[float] = None,
        sign: Optional[float] = None,
    ) -> "Tolerances":
        changes = {
            key: value
            for key, value in (("geodesic", geodesic), ("flatness", flatness), ("sign", sign))
            if value is not None
        }
        return replace(self, **changes)
