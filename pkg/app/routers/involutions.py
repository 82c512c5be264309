"""
Centralizer involution endpoints
"""
from typing import Optional

from fastapi import APIRouter, Depends, HTTPException, Query, status

from app.deps import get_involution_service
from app.models import Partition, SignFamily
from app.schemas import InvolutionResponse
from app.services.involution_service import InvolutionService

router = APIRouter(prefix="/involutions", tags=["involutions"])

FAMILIES = {"plain": None, "plus": SignFamily.PLUS, "star": SignFamily.STAR}


@router.get("/", response_model=InvolutionResponse)
async def get_involution_sum(
    nu: str = Query(..., description="Cycle type of w_nu"),
    family: str = Query("plain", description="plain, plus or star"),
    filter: str = Query("none", description="Involution filter"),
    weight: str = Query("one", description="Named weight or weight expression"),
    signature: Optional[int] = Query(None, description="p_plus - p_minus, signed families only"),
    service: InvolutionService = Depends(get_involution_service),
):
    """Count and weighted sum over involutions commuting with w_nu"""
    if family not in FAMILIES:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"unknown family '{family}'; expected one of: {', '.join(FAMILIES)}",
        )
    try:
        part = Partition.parse(nu)
        count, weighted = service.summarize(part, FAMILIES[family], filter, weight, signature)
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return InvolutionResponse(
        nu=part.to_list(),
        family=family,
        filter=filter,
        weight=weight,
        signature=signature,
        count=count,
        weighted_sum=weighted,
    )
