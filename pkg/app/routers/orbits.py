"""
Frobenius orbit endpoints
"""
from fastapi import APIRouter, Depends, HTTPException, Query, status

from app.deps import get_orbit_service
from app.models import Twist
from app.schemas import OrbitTableResponse
from app.services.orbit_service import OrbitService

router = APIRouter(prefix="/orbits", tags=["orbits"])


@router.get("/", response_model=OrbitTableResponse)
async def get_orbit_table(
    q: int = Query(..., description="Odd prime power"),
    twist: Twist = Query(Twist.SPLIT),
    max_level: int = Query(1, ge=1),
    service: OrbitService = Depends(get_orbit_service),
):
    """Orbits of sigma (or the twisted sigma) on L up to max_level"""
    try:
        table = service.enumerate_orbits(q, twist, max_level)
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return OrbitTableResponse.from_table(table)
