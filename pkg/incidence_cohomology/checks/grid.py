from __future__ import annotations

from typing import Callable, List, Sequence, Tuple, TypeVar

import dask

from ..errors import InvalidArgumentError

__all__ = ["SCHEDULERS", "evaluate_grid"]

SCHEDULERS = ("synchronous", "threads")

T = TypeVar("T")


def evaluate_grid(
    func: Callable[..., T],
    points: Sequence[Tuple[int, ...]],
    *,
    scheduler: str = "synchronous",
) -> List[T]:
    """Evaluate ``func(*point)`` for every grid point as dask tasks.

    Results come back in the order of ``points`` whatever the scheduler, so
    reports built from them are identical across schedulers.
    """
    if scheduler not in SCHEDULERS:
        raise InvalidArgumentError(
            f"Unknown scheduler '{scheduler}'. Available schedulers: {', '.join(SCHEDULERS)}."
        )
    if not points:
        return []
    tasks = [dask.delayed(func)(*point) for point in points]
    return list(dask.compute(*tasks, scheduler=scheduler))
