"""FastAPI router for promotion endpoints."""
import logging

from fastapi import APIRouter, Depends, HTTPException

from app.config import settings
from app.features.crystals.presentation.schemas import CrystalGraphSchema, ModClassSchema
from app.features.promotion.application.use_cases.build_kr_graph_use_case import BuildKRGraphUseCase
from app.features.promotion.application.use_cases.promote_use_case import PromoteUseCase
from app.features.promotion.presentation.schemas import (
    ExtArraySchema,
    KRGraphRequest,
    PromoteRequest,
    PromoteResponse,
)
from app.shared.exceptions import INPUT_ERRORS, ARCrystalError, NodeLimitExceeded
from app.shared.schemas import ErrorResponse


logger = logging.getLogger(__name__)

router = APIRouter(prefix="/promotion", tags=["Promotion"])


def get_promote_use_case() -> PromoteUseCase:
    return PromoteUseCase()


def get_kr_graph_use_case() -> BuildKRGraphUseCase:
    return BuildKRGraphUseCase(max_nodes=settings.MAX_NODES, threads=settings.THREADS)


@router.post(
    "/promote",
    response_model=PromoteResponse,
    responses={400: {"model": ErrorResponse, "description": "Not an element of B(m w_j)"}},
    summary="Apply promotion pr",
)
def promote(
    request: PromoteRequest,
    trace: bool = False,
    use_case: PromoteUseCase = Depends(get_promote_use_case),
):
    try:
        result, states = use_case.execute(request.modclass.to_domain(), request.j, request.m)
        return PromoteResponse(
            result=ModClassSchema.from_domain(result),
            trace=[ExtArraySchema.from_domain(s) for s in states] if trace else None,
        )

    except INPUT_ERRORS as e:
        logger.error(f"Invalid promotion request: {e}")
        raise HTTPException(status_code=400, detail=str(e))

    except ARCrystalError as e:
        logger.exception(f"Promotion failed: {e}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/kr-graph",
    response_model=CrystalGraphSchema,
    response_model_by_alias=True,
    responses={
        400: {"model": ErrorResponse, "description": "Invalid parameters"},
        413: {"model": ErrorResponse, "description": "Node limit exceeded"},
    },
    summary="Kirillov-Reshetikhin crystal graph",
)
def kr_graph(
    request: KRGraphRequest,
    use_case: BuildKRGraphUseCase = Depends(get_kr_graph_use_case),
):
    try:
        return CrystalGraphSchema.from_domain(use_case.execute(request.rank, request.j, request.m))

    except INPUT_ERRORS as e:
        logger.error(f"Invalid KR request: {e}")
        raise HTTPException(status_code=400, detail=str(e))

    except NodeLimitExceeded as e:
        logger.error(f"Node limit exceeded: {e}")
        raise HTTPException(status_code=413, detail=str(e))

    except ARCrystalError as e:
        logger.exception(f"KR graph failed: {e}")
        raise HTTPException(status_code=500, detail=str(e))
