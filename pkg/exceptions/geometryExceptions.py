from typing import Any, Dict, Optional


class GeometryError(Exception):
    """Base error for every geometric or arithmetic failure"""

    code = "GEOMETRY_ERROR"
    # validation failures exit with 1 / HTTP 422, numeric failures with 2 / HTTP 500
    is_validation = False

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "detail": self.detail}


class ValidationFailure(GeometryError):
    is_validation = True


class NonPrimitive(ValidationFailure):
    code = "NON_PRIMITIVE"


class NotNormalized(ValidationFailure):
    code = "NOT_NORMALIZED"


class NotUnimodular(ValidationFailure):
    code = "NOT_UNIMODULAR"


class EqualFoliations(ValidationFailure):
    code = "EQUAL_FOLIATIONS"


class NotCoprime(ValidationFailure):
    code = "NOT_COPRIME"


class SlopeOutOfRange(ValidationFailure):
    code = "SLOPE_OUT_OF_RANGE"


class InvalidDescription(ValidationFailure):
    code = "INVALID_DESCRIPTION"


class ConfigurationError(ValidationFailure):
    code = "CONFIGURATION_ERROR"


class InvalidShape(ValidationFailure):
    code = "INVALID_SHAPE"


class ShootingFailed(GeometryError):
    code = "SHOOTING_FAILED"


class GridTooCoarse(GeometryError):
    code = "GRID_TOO_COARSE"


class BoundaryNotFlat(ValidationFailure):
    code = "BOUNDARY_NOT_FLAT"


class ProfileSingular(ValidationFailure):
    code = "PROFILE_SINGULAR"


class CurvatureSignViolation(ValidationFailure):
    code = "CURVATURE_SIGN_VIOLATION"


class NotPositiveDefinite(ValidationFailure):
    code = "NOT_POSITIVE_DEFINITE"


class MalformedInput(GeometryError):
    code = "MALFORMED_INPUT"


class UsageError(GeometryError):
    code = "USAGE_ERROR"
