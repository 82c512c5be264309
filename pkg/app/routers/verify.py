"""
Identity verification endpoints
"""
from typing import Optional

from fastapi import APIRouter, Depends, HTTPException, Query, status

from app.deps import get_identity_service
from app.models import Partition
from app.schemas import IdentityResultSchema, RunReport
from app.services.identity_service import IdentityService, closed_form_enumeration
from app.utils.reporting import RunRecorder

router = APIRouter(prefix="/verify", tags=["verify"])


@router.get("/", response_model=RunReport)
async def verify_identities(
    identity: str = Query("all", description="Identity name or 'all'"),
    max_size: Optional[int] = Query(None, ge=0),
    service: IdentityService = Depends(get_identity_service),
):
    """Check every case of the named identities up to max_size"""
    recorder = RunRecorder(["verify", "--identity", identity, "--max-size", str(max_size)])
    try:
        results = service.run_suite(None if identity == "all" else [identity], max_size)
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    for result in results:
        recorder.record(IdentityResultSchema.from_result(result).model_dump(), failed=not result.equal)
    return recorder.report()


@router.get("/closed-form")
async def verify_closed_form(
    nu: str = Query(..., description="Cycle type"),
    family: str = Query(..., description="ff-inv-signed or even-fixed-free"),
    service: IdentityService = Depends(get_identity_service),
):
    """Multiplicative closed form next to the two sums it evaluates"""
    try:
        part = Partition.parse(nu)
        value = service.multiplicative_closed_form(part, family)
        first, second = closed_form_enumeration(part, family)
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return {"nu": part.to_list(), "family": family, "closed_form": value, "enumerated": [first, second]}
