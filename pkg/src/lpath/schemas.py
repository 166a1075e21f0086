"""Request and response models for the HTTP service.

Pydantic lives only at this boundary; the library itself works with the
plain dataclasses and tuples from the grid module. `ShapeModel.to_shape`
funnels every inbound shape through the same validation as the JSON
helpers, so domain errors surface as InvalidInstance, not as framework
validation noise.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from .grid import Shape, shape_from_json

GridPoint = tuple[int, int]


class ShapeModel(BaseModel):
    type: Literal["rect", "lshape"]
    m: int
    n: int
    k: int | None = None
    l: int | None = None

    def to_shape(self) -> Shape:
        return shape_from_json(self.model_dump(exclude_none=True))


class InstanceRequest(BaseModel):
    shape: ShapeModel
    s: GridPoint
    t: GridPoint


class ShapeRequest(BaseModel):
    shape: ShapeModel


class OracleRequest(InstanceRequest):
    budget: int | None = None


class VerifyRequest(BaseModel):
    shape: ShapeModel
    path: list[GridPoint] | None = None
    cycle: list[GridPoint] | None = None
    s: GridPoint | None = None
    t: GridPoint | None = None
    hamiltonian: bool = False


class RenderRequest(BaseModel):
    shape: ShapeModel
    path: list[GridPoint] | None = None
    cycle: list[GridPoint] | None = None
    format: Literal["ascii", "svg"] = "ascii"


class SelftestRequest(BaseModel):
    max_vertices: int = Field(12, ge=2)


class TracePlanItem(BaseModel):
    shape: ShapeModel
    offset: GridPoint = (0, 0)


class TracePlanRequest(BaseModel):
    items: list[TracePlanItem] = Field(min_length=1)


class ClassifyResponse(BaseModel):
    f1: bool
    f2: bool | None = None
    f3: bool
    f4: bool
    f5: bool
    label: str
    bound: int


class CycleResponse(BaseModel):
    shape: ShapeModel
    cycle: list[GridPoint]
    length: int


class PathResponse(BaseModel):
    shape: ShapeModel
    path: list[GridPoint]
    s: GridPoint
    t: GridPoint
    length: int


class LongestResponse(PathResponse):
    bound: int
    label: str


class VerifyResponse(BaseModel):
    valid: bool
    kind: Literal["path", "cycle"]
    length: int
    hamiltonian: bool
    error: str | None = None


class RenderResponse(BaseModel):
    format: Literal["ascii", "svg"]
    content: str


class OracleResponse(BaseModel):
    length: int
    path: list[GridPoint]


class SelftestRow(BaseModel):
    name: str
    shapes: int
    cases: int
    mismatches: int


class SelftestResponse(BaseModel):
    max_vertices: int
    rows: list[SelftestRow]
    mismatches: int
    ok: bool


class TracePlanItemResponse(BaseModel):
    shape: ShapeModel
    offset: GridPoint
    s: GridPoint
    t: GridPoint
    path: list[GridPoint]


class TracePlanResponse(BaseModel):
    items: list[TracePlanItemResponse]
    jumps: list[float]
    total_jump: float


class HealthResponse(BaseModel):
    status: str
    version: str
