"""Pydantic models for machine-readable reports and witness lists."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from rainbow.core.geometry import PolygonWitness


class WitnessRecord(BaseModel):
    """A polygon witness as stored in witness files and reports."""

    vertices: List[int] = Field(..., description="Vertex indices (sorted for triangles, boundary cycle for quads)")
    shape: str = Field(..., description="Either 'triangle' or 'quad'")
    convex: bool = Field(True, description="Whether the polygon is convex")
    empty: bool = Field(True, description="Whether no point lies strictly inside")
    rainbow: bool = Field(False, description="Whether all vertex colors differ")

    @classmethod
    def from_witness(cls, witness: PolygonWitness) -> "WitnessRecord":
        return cls(
            vertices=list(witness.vertex_indices),
            shape=witness.shape,
            convex=witness.convex,
            empty=witness.empty,
            rainbow=witness.rainbow,
        )

    def to_witness(self) -> PolygonWitness:
        return PolygonWitness(tuple(self.vertices), convex=self.convex, empty=self.empty, rainbow=self.rainbow)


class WitnessFile(BaseModel):
    """Witness list written by ``count --witnesses`` and read by ``plot --highlight``."""

    witnesses: List[WitnessRecord] = Field(default_factory=list, description="Polygon witnesses")


class EnumerationReport(BaseModel):
    """Counts of empty polygons of a colored point set."""

    n: int = Field(..., description="Number of points")
    k: int = Field(..., description="Number of colors")
    m: Optional[int] = Field(None, description="Points per color class, null when unbalanced")
    empty_triangles: int = Field(..., ge=0, description="Empty triangles")
    empty_rainbow_triangles: int = Field(..., ge=0, description="Empty triangles with three colors")
    empty_monochromatic_triangles: int = Field(..., ge=0, description="Empty triangles with one color")
    empty_rainbow_quadrilaterals: Optional[int] = Field(None, ge=0, description="Empty convex rainbow quadrilaterals")
    empty_quadrilaterals: Optional[int] = Field(None, ge=0, description="Empty convex quadrilaterals")
    empty_monochromatic_quadrilaterals: Optional[int] = Field(
        None, ge=0, description="Empty convex monochromatic quadrilaterals"
    )
    empty_rainbow_nonconvex_quadrilaterals: Optional[int] = Field(
        None, ge=0, description="Empty simple non-convex rainbow quadrilaterals"
    )
    witnesses: Optional[List[WitnessRecord]] = Field(None, description="Witness polygons when requested")


class VerificationReport(BaseModel):
    """Outcome of one ``verify`` check."""

    check: str = Field(..., description="Name of the check")
    passed: bool = Field(..., description="Whether the check passed")
    count: Optional[int] = Field(None, description="Measured count")
    bound: Optional[int] = Field(None, description="Bound the count was compared against")
    details: Dict[str, Any] = Field(default_factory=dict, description="Check-specific figures")
    counterexample: Optional[WitnessRecord] = Field(None, description="First violating witness, if any")
