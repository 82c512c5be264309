"""
Signed tableau endpoints
"""
from dataclasses import asdict
from typing import Optional

from fastapi import APIRouter, Depends, HTTPException, Query, status

from app.deps import get_tableau_service
from app.models import Partition
from app.schemas import TableauResponse
from app.services.tableau_service import TableauService

router = APIRouter(prefix="/tableaux", tags=["tableaux"])


@router.get("/", response_model=TableauResponse)
async def get_tableau_count(
    mu: str = Query(..., description="Shape"),
    signature: Optional[int] = Query(None, description="p_plus - p_minus"),
    fixed_by: Optional[str] = Query(None, description="phi, psi or phipsi"),
    service: TableauService = Depends(get_tableau_service),
):
    """Number of signed tableaux of shape mu"""
    try:
        shape = Partition.parse(mu)
        count = service.count(shape, signature, fixed_by)
        distribution = service.signature_distribution(shape) if signature is None and fixed_by is None else {}
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return TableauResponse(
        mu=shape.to_list(),
        signature=signature,
        fixed_by=fixed_by,
        count=count,
        signature_distribution=distribution,
    )


@router.get("/fixed-counts")
async def get_fixed_counts(
    mu: str = Query(..., description="Shape"),
    service: TableauService = Depends(get_tableau_service),
):
    """phi / psi / phi.psi fixed-point counts, checked against their closed forms"""
    try:
        counts = service.fixed_counts(Partition.parse(mu))
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    result = asdict(counts)
    result["psi_by_signature"] = dict(counts.psi_by_signature)
    return result


@router.get("/strips")
async def get_vertical_strip_count(
    mu: str = Query(..., description="Shape"),
    a: int = Query(..., ge=0),
    b: int = Query(..., ge=0),
    service: TableauService = Depends(get_tableau_service),
):
    """Vertical b-strip then a-strip removals leaving even rows"""
    try:
        shape = Partition.parse(mu)
        return {"mu": shape.to_list(), "a": a, "b": b, "count": service.vertical_strip_count(shape, a, b)}
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))


@router.get("/star-sign")
async def get_star_sign_sum(
    mu: str = Query(..., description="Shape"),
    service: TableauService = Depends(get_tableau_service),
):
    """Alternating m(T) sum over signature-zero tableaux"""
    try:
        shape = Partition.parse(mu)
        return {"mu": shape.to_list(), "value": service.star_sign_sum(shape)}
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
