"""Scan planning: exhaustive enumeration when small enough, seeded sampling otherwise.

A plan always records which of the two it chose, so reports can say whether a
verdict is exhaustive.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Callable, Generic, Iterable, Iterator, Optional, TypeVar

import config

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass
class ScanPlan(Generic[T]):
    label: str
    items: Iterable[T]
    exhaustive: bool

    def __iter__(self) -> Iterator[T]:
        return iter(self.items)


def _sample(sampler: Callable[[random.Random], Optional[T]], size: int, seed: int) -> list[T]:
    rng = random.Random(seed)
    drawn: list[T] = []
    attempts = 0
    while len(drawn) < size and attempts < 20 * size:
        attempts += 1
        item = sampler(rng)
        if item is not None:
            drawn.append(item)
    return drawn


def plan_scan(
    label: str,
    exhaustive: Callable[[], Iterable[T]],
    sampler: Callable[[random.Random], Optional[T]],
    *,
    limit: int,
    total: Optional[int] = None,
    sample_size: Optional[int] = None,
    seed: Optional[int] = None,
) -> ScanPlan[T]:
    """Choose between full enumeration and a seeded random sample.

    When ``total`` is known the decision is immediate; otherwise the
    enumeration is drawn lazily and abandoned once it exceeds ``limit``.
    """
    sample_size = config.SAMPLE_SIZE if sample_size is None else sample_size
    seed = config.RANDOM_SEED if seed is None else seed

    if total is not None:
        if total <= limit:
            logger.info("%s: exhaustive scan of %d item(s)", label, total)
            return ScanPlan(label, exhaustive(), True)
    else:
        head = list(itertools.islice(exhaustive(), limit + 1))
        if len(head) <= limit:
            logger.info("%s: exhaustive scan of %d item(s)", label, len(head))
            return ScanPlan(label, head, True)

    logger.info("%s: more than %d item(s), sampling %d with seed %d", label, limit, sample_size, seed)
    return ScanPlan(label, _sample(sampler, sample_size, seed), False)


def plan_tuples(label: str, universe: int, arity: int, *, limit: int) -> ScanPlan[tuple[int, ...]]:
    """Plan a scan over all ``arity``-tuples drawn from ``range(universe)``."""
    return plan_scan(
        label,
        lambda: itertools.product(range(universe), repeat=arity),
        lambda rng: tuple(rng.randrange(universe) for _ in range(arity)) if universe else None,
        limit=limit,
        total=universe ** arity,
    )
