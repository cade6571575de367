"""Run configuration, resource caps and order-preserving parallel map."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_MAX_TUPLES = 10**7
ENV_MAX_TUPLES = "SNAKECHAR_MAX_TUPLES"


class LimitExceeded(RuntimeError):
    """An enumeration would produce more tuples than the configured cap."""


def default_max_tuples() -> int:
    raw = os.environ.get(ENV_MAX_TUPLES)
    if raw is None:
        return DEFAULT_MAX_TUPLES
    value = int(raw)
    if value < 1:
        raise ValueError(f"{ENV_MAX_TUPLES} must be positive")
    return value


def check_limit(count: int, max_tuples: int | None) -> None:
    cap = default_max_tuples() if max_tuples is None else max_tuples
    if count > cap:
        raise LimitExceeded(f"limit exceeded: {count} tuples > max_tuples={cap}")


@dataclass(frozen=True)
class RunConfig:
    max_tuples: int = DEFAULT_MAX_TUPLES
    threads: int = 1
    output: str = "json"
    seed: int = 0

    def __post_init__(self):
        if self.max_tuples < 1:
            raise ValueError("max_tuples must be positive")
        if self.threads < 1:
            raise ValueError("threads must be positive")
        if self.output not in ("json", "csv", "pretty"):
            raise ValueError(f"unknown output format {self.output!r}")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")


def resolve_threads(threads: int | str | None) -> int:
    if threads in (None, "auto"):
        return os.cpu_count() or 1
    return int(threads)


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> list[R]:
    """``list(map(fn, items))``, optionally on a thread pool, in input order."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
