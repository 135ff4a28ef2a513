"""Pydantic schemas for tableaux."""
from typing import List

from pydantic import BaseModel, Field

from app.features.tableaux.domain.entities import Tableau


class TableauSchema(BaseModel):
    rows: List[List[int]]

    def to_domain(self) -> Tableau:
        return Tableau.of(self.rows)

    @classmethod
    def from_domain(cls, tableau: Tableau) -> "TableauSchema":
        return cls(rows=[list(row) for row in tableau.rows])


class TableauPromoteRequest(BaseModel):
    rows: List[List[int]]
    n: int = Field(..., ge=1, description="Rank; letters run over 1..n+1")

    class Config:
        json_schema_extra = {
            "example": {"rows": [[1, 2, 4], [3, 4, 5], [4, 6, 6]], "n": 5}
        }
