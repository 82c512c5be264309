"""
Symmetric-group character endpoints
"""
from fastapi import APIRouter, Depends, HTTPException, Query, status

from app.deps import get_character_service
from app.models import Partition
from app.schemas import CharacterResponse, CharacterSumResponse
from app.services.character_service import CharacterService

router = APIRouter(prefix="/characters", tags=["characters"])


@router.get("/value", response_model=CharacterResponse)
async def get_character(
    rho: str = Query(..., description="Irreducible character label"),
    nu: str = Query(..., description="Cycle type"),
    oracle: bool = Query(False, description="Use the Kostka oracle instead of Murnaghan-Nakayama"),
    service: CharacterService = Depends(get_character_service),
):
    """Character value chi^rho at cycle type nu"""
    try:
        label, cycle_type = Partition.parse(rho), Partition.parse(nu)
        evaluate = service.character_oracle if oracle else service.character
        value = evaluate(label, cycle_type)
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return CharacterResponse(rho=label.to_list(), nu=cycle_type.to_list(), value=value)


@router.get("/sum", response_model=CharacterSumResponse)
async def get_character_sum(
    nu: str = Query(..., description="Cycle type"),
    filter: str = Query("all", description="Which characters to sum"),
    service: CharacterService = Depends(get_character_service),
):
    """Sum of chi^rho at nu over the filtered rho"""
    try:
        cycle_type = Partition.parse(nu)
        value = service.character_sum(cycle_type, filter)
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return CharacterSumResponse(nu=cycle_type.to_list(), filter=filter, value=value)
