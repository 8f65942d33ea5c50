"""Central numeric tolerances and the degreewise resource cap."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ResourceLimitError

#: Default cap on estimated working-matrix cells for a degree-n ideal piece.
#: The estimate for generator count p at degree n is p^(2n-1): p^n columns
#: times a p^(n-1) row estimate.  With the default cap, p=5 is admitted up to
#: degree 5 (5^9 ~ 1.95e6) and refused from degree 6 (5^11 ~ 4.9e7).
DEFAULT_MAX_CELLS = 4_000_000

ENV_MAX_CELLS = "ALGTOOL_MAX_CELLS"


@dataclass(frozen=True)
class Tolerances:
    """Float tolerances used by the numeric (non-exact) code paths."""

    rank: float = 1e-8
    span: float = 1e-7
    residual: float = 1e-8


DEFAULT_TOLERANCES = Tolerances()


def max_cells() -> int:
    raw = os.environ.get(ENV_MAX_CELLS)
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError as exc:
        raise ResourceLimitError(f"{ENV_MAX_CELLS} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ResourceLimitError(f"{ENV_MAX_CELLS} must be positive, got {value}")
    return value


def check_degree_allowed(p: int, n: int, cap: int | None = None) -> None:
    """Refuse a degree-n piece whose estimated cell count exceeds the cap."""
    cap = max_cells() if cap is None else cap
    estimated = p ** max(2 * n - 1, 0)
    if estimated > cap:
        raise ResourceLimitError(
            f"degree {n} over {p} generators needs ~{estimated} cells, cap is {cap}"
        )
