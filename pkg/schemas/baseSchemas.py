from fractions import Fraction
from typing import Annotated, Any, Dict, List, Optional

from pydantic import BaseModel, BeforeValidator, Field


def format_real(value: float) -> str:
    """Reals travel as decimal strings with 17 significant digits"""
    return f"{float(value):.17g}"


def _rational_text(value: Any) -> str:
    if isinstance(value, bool):
        raise ValueError("expected a rational, got a boolean")
    if isinstance(value, float):
        value = repr(value)
    try:
        return str(Fraction(str(value).strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"'{value}' is not a rational number") from exc


def _real_text(value: Any) -> str:
    if isinstance(value, bool):
        raise ValueError("expected a real number, got a boolean")
    if isinstance(value, (int, float)):
        return format_real(value)
    try:
        Fraction(str(value).strip())
        return str(value).strip()
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"'{value}' is not a real number") from exc


# "a/b", "3" or 3
RationalStr = Annotated[str, BeforeValidator(_rational_text)]
# decimal string, "a/b" or a JSON number
RealStr = Annotated[str, BeforeValidator(_real_text)]
Vector = Annotated[List[int], Field(min_length=2, max_length=2)]


class GramSchema(BaseModel):
    """Rational Gram matrix of the fixed basis e1, e2"""
    g11: RationalStr
    g12: RationalStr = "0"
    g22: RationalStr


class ErrorBody(BaseModel):
    code: str
    message: str
    detail: Dict[str, Any] = {}


class ErrorEnvelope(BaseModel):
    success: bool = False
    error: ErrorBody


class ToleranceOverrides(BaseModel):
    geodesic: Optional[float] = Field(None, gt=0)
    flatness: Optional[float] = Field(None, gt=0)
    sign: Optional[float] = Field(None, gt=0)
