"""FastAPI router for quiver endpoints."""
import logging

from fastapi import APIRouter, Depends, HTTPException

from app.features.quivers.application.use_cases.build_ar_quiver_use_case import BuildARQuiverUseCase
from app.features.quivers.presentation.schemas import ARQuiverResponse, QuiverSchema
from app.shared.exceptions import INPUT_ERRORS, ARCrystalError
from app.shared.schemas import ErrorResponse


logger = logging.getLogger(__name__)

router = APIRouter(prefix="/quivers", tags=["Quivers"])


def get_build_ar_quiver_use_case() -> BuildARQuiverUseCase:
    return BuildARQuiverUseCase()


@router.post(
    "/ar-quiver",
    response_model=ARQuiverResponse,
    responses={
        400: {"model": ErrorResponse, "description": "Invalid quiver"},
        500: {"model": ErrorResponse, "description": "Server error"},
    },
    summary="Knit the Auslander-Reiten quiver",
)
def ar_quiver(
    request: QuiverSchema,
    use_case: BuildARQuiverUseCase = Depends(get_build_ar_quiver_use_case),
):
    try:
        ar = use_case.execute(request.to_spec())
        return ARQuiverResponse.from_domain(ar)

    except INPUT_ERRORS as e:
        logger.error(f"Invalid quiver: {e}")
        raise HTTPException(status_code=400, detail=str(e))

    except ARCrystalError as e:
        logger.exception(f"AR quiver computation failed: {e}")
        raise HTTPException(status_code=500, detail=str(e))
