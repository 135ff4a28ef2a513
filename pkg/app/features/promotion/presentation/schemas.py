"""Pydantic schemas for promotion and KR crystals."""
from typing import List, Optional

from pydantic import BaseModel, Field

from app.features.crystals.presentation.schemas import ModClassSchema
from app.features.promotion.domain.entities import ExtArray


class ExtArraySchema(BaseModel):
    """Extended array, row r listing s = r..n+1-j+r."""
    n: int
    j: int
    m: int
    mu: List[List[int]]

    @classmethod
    def from_domain(cls, array: ExtArray) -> "ExtArraySchema":
        return cls(n=array.n, j=array.j, m=array.m, mu=[list(row) for row in array.rows])


class PromoteRequest(BaseModel):
    modclass: ModClassSchema
    j: int = Field(..., ge=1)
    m: int = Field(..., ge=1)

    class Config:
        json_schema_extra = {
            "example": {
                "modclass": {
                    "quiver": {"family": "A", "rank": 2, "arrows": [[2, 1]]},
                    "mult": [{"root": [1, 0], "m": 1}],
                },
                "j": 1,
                "m": 1,
            }
        }


class PromoteResponse(BaseModel):
    result: ModClassSchema
    trace: Optional[List[ExtArraySchema]] = None


class KRGraphRequest(BaseModel):
    rank: int = Field(..., ge=1)
    j: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
