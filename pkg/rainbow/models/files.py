"""Pydantic schemas of the point-set file format."""

from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


def parse_rational(text: str) -> Fraction:
    """Parse an exact ``"p/q"`` (or integer) string; decimals are rejected."""

    text = str(text).strip()
    numerator, _, denominator = text.partition("/")
    try:
        value = Fraction(int(numerator), int(denominator) if denominator else 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"'{text}' is not a rational of the form p/q") from exc
    return value


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class PointRecord(BaseModel):
    """One colored point with rational coordinates."""

    x: str = Field(..., description="x-coordinate as a 'p/q' string")
    y: str = Field(..., description="y-coordinate as a 'p/q' string")
    color: int = Field(..., ge=1, description="Color class, 1..k")

    @field_validator("x", "y")
    @classmethod
    def _exact(cls, value: str) -> str:
        return format_rational(parse_rational(value))


class PointSetFile(BaseModel):
    """A colored point set on disk."""

    k: int = Field(..., ge=1, description="Number of colors")
    m: Optional[int] = Field(None, ge=1, description="Points per color, null for unbalanced sets")
    points: List[PointRecord] = Field(..., description="Points in file order")

    @model_validator(mode="after")
    def _check_classes(self) -> "PointSetFile":
        colors = [p.color for p in self.points]
        if any(c > self.k for c in colors):
            raise ValueError(f"colors must lie in 1..{self.k}")
        if self.m is not None:
            for color in range(1, self.k + 1):
                if colors.count(color) != self.m:
                    raise ValueError(f"color {color} must have exactly {self.m} points")
        return self
