"""Schemas shared by every feature router."""
from typing import Optional

from pydantic import BaseModel


class ErrorResponse(BaseModel):
    """Error response."""
    error: str
    detail: Optional[str] = None
    status_code: int

    class Config:
        json_schema_extra = {
            "example": {
                "error": "Bad Request",
                "detail": "A_3 has no edge between 1 and 3",
                "status_code": 400,
            }
        }
