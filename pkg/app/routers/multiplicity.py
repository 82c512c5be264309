"""
Multiplicity endpoints
"""
from typing import Optional

from fastapi import APIRouter, Depends, HTTPException, Query, status

from app.deps import get_multiplicity_service, get_orbit_service
from app.exceptions import RouteMismatchError
from app.models import SymmetricSpaceCase
from app.schemas import (
    CrosscheckResult,
    MultiplicityRequest,
    MultiplicityResponse,
    UnipotentRow,
    UnipotentTableResponse,
)
from app.services.multiplicity_service import MultiplicityService
from app.services.orbit_service import OrbitService

router = APIRouter(prefix="/multiplicity", tags=["multiplicity"])


@router.post("/", response_model=MultiplicityResponse)
async def compute_multiplicity(
    request: MultiplicityRequest,
    service: MultiplicityService = Depends(get_multiplicity_service),
    orbit_service: OrbitService = Depends(get_orbit_service),
):
    """Multiplicity of the irreducible character labelled by the multipartition"""
    try:
        case, rho = request.build(orbit_service)
        if case.special:
            value = service.so_multiplicity(case, rho, request.k_zeta)
        else:
            value = service.multiplicity(case, rho)
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return MultiplicityResponse(
        case=case.key,
        description=case.describe(),
        assignments=rho.to_dict(),
        multiplicity=value,
    )


@router.get("/unipotent-table", response_model=UnipotentTableResponse)
async def get_unipotent_table(
    case: str = Query(..., description="Case key, e.g. gl-sp"),
    n: int = Query(..., ge=0),
    n_plus: Optional[int] = Query(None),
    n_minus: Optional[int] = Query(None),
    epsilon: Optional[int] = Query(None),
    service: MultiplicityService = Depends(get_multiplicity_service),
):
    """Unipotent multiplicity for every partition of n"""
    try:
        parsed = SymmetricSpaceCase.from_key(case, n, n_plus, n_minus, epsilon)
        rows = service.unipotent_table(parsed)
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return UnipotentTableResponse(
        case=parsed.key,
        description=parsed.describe(),
        rows=[UnipotentRow(rho=rho.to_list(), multiplicity=value) for rho, value in rows],
    )


@router.post("/crosscheck", response_model=CrosscheckResult)
async def crosscheck(
    request: MultiplicityRequest,
    service: MultiplicityService = Depends(get_multiplicity_service),
    orbit_service: OrbitService = Depends(get_orbit_service),
):
    """Basic-character multiplicity by the involution and character routes"""
    try:
        case, nu = request.build(orbit_service)
        left, right = service.crosscheck(case, nu)
    except RouteMismatchError as exc:
        return CrosscheckResult(
            case=case.describe(), nu=nu.to_dict(),
            involution=exc.involution, character=exc.character, equal=False, error=str(exc),
        )
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return CrosscheckResult(case=case.describe(), nu=nu.to_dict(), involution=left, character=right, equal=True)
