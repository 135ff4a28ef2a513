"""FastAPI router for crystal endpoints."""
import logging

from fastapi import APIRouter, Depends, HTTPException

from app.config import settings
from app.features.crystals.application.use_cases.compute_eps_star_use_case import ComputeEpsStarUseCase
from app.features.crystals.application.use_cases.generate_crystal_use_case import GenerateCrystalUseCase
from app.features.crystals.application.use_cases.verify_crystal_use_case import VerifyCrystalUseCase
from app.features.crystals.presentation.schemas import (
    CrystalGraphSchema,
    EpsStarResponse,
    GenerateCrystalRequest,
    ModClassSchema,
    VerifyResponse,
)
from app.shared.exceptions import INPUT_ERRORS, ARCrystalError, NodeLimitExceeded
from app.shared.schemas import ErrorResponse


logger = logging.getLogger(__name__)

router = APIRouter(prefix="/crystals", tags=["Crystals"])


def get_generate_crystal_use_case() -> GenerateCrystalUseCase:
    return GenerateCrystalUseCase(max_nodes=settings.MAX_NODES, threads=settings.THREADS)


def get_eps_star_use_case() -> ComputeEpsStarUseCase:
    return ComputeEpsStarUseCase()


def get_verify_crystal_use_case() -> VerifyCrystalUseCase:
    return VerifyCrystalUseCase()


@router.post(
    "/generate",
    response_model=CrystalGraphSchema,
    response_model_by_alias=True,
    responses={
        400: {"model": ErrorResponse, "description": "Invalid quiver or weight"},
        413: {"model": ErrorResponse, "description": "Node limit exceeded"},
        500: {"model": ErrorResponse, "description": "Server error"},
    },
    summary="Generate the crystal graph of B(lambda)",
)
def generate(
    request: GenerateCrystalRequest,
    use_case: GenerateCrystalUseCase = Depends(get_generate_crystal_use_case),
):
    try:
        graph = use_case.execute(request.quiver.to_domain(), request.hw, request.max_nodes)
        return CrystalGraphSchema.from_domain(graph)

    except INPUT_ERRORS as e:
        logger.error(f"Invalid crystal request: {e}")
        raise HTTPException(status_code=400, detail=str(e))

    except NodeLimitExceeded as e:
        logger.error(f"Node limit exceeded: {e}")
        raise HTTPException(status_code=413, detail=str(e))

    except ARCrystalError as e:
        logger.exception(f"Crystal generation failed: {e}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/eps-star",
    response_model=EpsStarResponse,
    responses={400: {"model": ErrorResponse, "description": "Invalid module"}},
    summary="Starred string lengths of a module",
)
def eps_star(
    request: ModClassSchema,
    use_case: ComputeEpsStarUseCase = Depends(get_eps_star_use_case),
):
    try:
        return EpsStarResponse(eps_star=list(use_case.execute(request.to_domain())))

    except INPUT_ERRORS as e:
        logger.error(f"Invalid module: {e}")
        raise HTTPException(status_code=400, detail=str(e))

    except ARCrystalError as e:
        logger.exception(f"eps* computation failed: {e}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/verify",
    response_model=VerifyResponse,
    summary="Check the crystal axioms on a graph",
)
def verify(
    request: CrystalGraphSchema,
    use_case: VerifyCrystalUseCase = Depends(get_verify_crystal_use_case),
):
    violations = use_case.execute(request.to_domain())
    return VerifyResponse(clean=not violations, violations=violations)
