"""
Run reporting utilities and decorators
"""
import logging
import time
from functools import wraps
from typing import Any, Dict, List, Optional, Sequence

from app.schemas import RunReport

logger = logging.getLogger(__name__)


def timed(action: str):
    """
    Decorator that logs how long a computation took

    Args:
        action: Label written to the log (e.g., "verify", "crosscheck")
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            result = func(*args, **kwargs)
            logger.info(f"{action} finished in {time.perf_counter() - start:.3f}s")
            return result
        return wrapper
    return decorator


class RunRecorder:
    """Collects per-item results and failures for one command"""

    def __init__(self, command: Sequence[str]):
        self.command = list(command)
        self.items: List[Dict[str, Any]] = []
        self.failures: List[Dict[str, Any]] = []
        self._start = time.perf_counter()

    def record(self, item: Dict[str, Any], failed: bool = False, reason: Optional[str] = None) -> None:
        self.items.append(item)
        if failed:
            failure = dict(item)
            if reason:
                failure["reason"] = reason
            self.failures.append(failure)
            logger.warning(f"failure #{len(self.failures)}: {failure}")
        elif len(self.items) % 500 == 0:
            logger.info(f"{len(self.items)} items recorded")

    def report(self) -> RunReport:
        wall_time = time.perf_counter() - self._start
        logger.info(f"{' '.join(self.command)}: {len(self.items)} items, {len(self.failures)} failures, {wall_time:.3f}s")
        return RunReport(
            command=self.command,
            items=self.items,
            failures=self.failures,
            wall_time=round(wall_time, 6),
        )
