"""
Partition endpoints
"""
from fastapi import APIRouter, Depends, HTTPException, Query, status

from app.deps import get_partition_service
from app.models import Partition
from app.schemas import PartitionListResponse, PartitionStatsResponse
from app.services.partition_service import PartitionService

router = APIRouter(prefix="/partitions", tags=["partitions"])


@router.get("/stats", response_model=PartitionStatsResponse)
async def get_partition_stats(
    nu: str = Query(..., description='Canonical partition text, e.g. "[3,1]"'),
    service: PartitionService = Depends(get_partition_service),
):
    """Statistics of a partition"""
    try:
        part = Partition.parse(nu)
        return PartitionStatsResponse.build(part, service.transpose(part), service.n_stat(part), service.stats(part))
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))


@router.get("/{n}", response_model=PartitionListResponse)
async def list_partitions(
    n: int,
    service: PartitionService = Depends(get_partition_service),
):
    """All partitions of n in reverse-lexicographic order"""
    try:
        parts = [p.to_list() for p in service.partitions_of(n)]
    except ValueError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return PartitionListResponse(n=n, count=len(parts), partitions=parts)
