"""Runtime configuration: working precision, tolerances, descent depth."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

_ENV_PRECISION = "DOUBLEBASE_PRECISION"


@dataclass(frozen=True)
class Config:
    """Knobs shared by the solvers and the critical-value descent.

    precision  -- decimal digits used by the multiprecision backend when
                  certifying or refining root brackets (>= 15)
    tol        -- default bracket width for root solvers (> 0)
    max_depth  -- default directive-tree descent depth (>= 1)
    output     -- default output path for table writers (None = stdout)
    """

    precision: int = 30
    tol: float = 1e-12
    max_depth: int = 48
    output: str | None = None

    def __post_init__(self):
        if self.precision < 15:
            raise ValueError("precision must be at least 15 decimal digits")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")

    def with_(self, **kw) -> "Config":
        return replace(self, **kw)


def _default_precision() -> int:
    raw = os.environ.get(_ENV_PRECISION)
    if raw is None:
        return 30
    return max(15, int(raw))


DEFAULT = Config(precision=_default_precision())


def resolve(config: Config | None) -> Config:
    return DEFAULT if config is None else config
