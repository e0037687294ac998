"""Run configuration: cell caps, thread counts, shared error types."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_CELL_CAP = 5_000_000
ENV_CELL_CAP = "DELJOIN_CELL_CAP"
ENV_GF2_BACKEND = "DELJOIN_GF2_BACKEND"


class CapExceeded(RuntimeError):
    """A construction or matrix would exceed the configured cell cap."""


class VerificationError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


def cell_cap(override: int | None = None) -> int:
    """Effective cell cap: explicit override, else env, else default."""
    if override is not None:
        if override < 1:
            raise ValueError("cell cap must be >= 1")
        return override
    raw = os.environ.get(ENV_CELL_CAP)
    if raw:
        value = int(raw)
        if value < 1:
            raise ValueError(f"{ENV_CELL_CAP} must be >= 1, got {value}")
        return value
    return DEFAULT_CELL_CAP


def guard_cells(count: int, cap: int | None, what: str) -> None:
    limit = cell_cap(cap)
    if count > limit:
        raise CapExceeded(f"{what}: {count} cells exceeds cap {limit}")


def default_threads() -> int:
    return os.cpu_count() or 1


@dataclass
class RunConfig:
    """Knobs shared by the CLI and the verification suite."""

    cap: int | None = None
    threads: int = field(default_factory=default_threads)
    out: str | None = None
    verbose: bool = False
    suite: str = "core"
    dump_matrices: str | None = None

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError("thread count must be >= 1")
        cell_cap(self.cap)  # validates
