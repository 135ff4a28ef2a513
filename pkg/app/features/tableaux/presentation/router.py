"""FastAPI router for tableau endpoints."""
import logging

from fastapi import APIRouter, Depends, HTTPException

from app.features.tableaux.application.use_cases.tableau_promote_use_case import TableauPromoteUseCase
from app.features.tableaux.presentation.schemas import TableauPromoteRequest, TableauSchema
from app.shared.exceptions import INPUT_ERRORS
from app.shared.schemas import ErrorResponse


logger = logging.getLogger(__name__)

router = APIRouter(prefix="/tableaux", tags=["Tableaux"])


def get_tableau_promote_use_case() -> TableauPromoteUseCase:
    return TableauPromoteUseCase()


@router.post(
    "/promote",
    response_model=TableauSchema,
    responses={400: {"model": ErrorResponse, "description": "Not a semistandard tableau"}},
    summary="Jeu-de-taquin promotion",
)
def promote(
    request: TableauPromoteRequest,
    use_case: TableauPromoteUseCase = Depends(get_tableau_promote_use_case),
):
    try:
        result = use_case.execute(TableauSchema(rows=request.rows).to_domain(), request.n)
        return TableauSchema.from_domain(result)

    except INPUT_ERRORS as e:
        logger.error(f"Invalid tableau: {e}")
        raise HTTPException(status_code=400, detail=str(e))