"""Resource caps for the exponential-time routines.

The active profile is read from ``GRAPHSTIRLING_CAPS`` (``small``, ``desk`` or
``large``); ``desk`` is the default.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_VAR = "GRAPHSTIRLING_CAPS"


@dataclass(frozen=True)
class Caps:
    enumerate_vertices: int
    chromatic_vertices: int
    matching_edges: int
    real_root_degree: int


PROFILES = {
    "small": Caps(enumerate_vertices=10, chromatic_vertices=10, matching_edges=80, real_root_degree=100),
    "desk": Caps(enumerate_vertices=13, chromatic_vertices=14, matching_edges=400, real_root_degree=200),
    "large": Caps(enumerate_vertices=15, chromatic_vertices=18, matching_edges=2000, real_root_degree=1000),
}


def active_caps() -> Caps:
    name = os.environ.get(ENV_VAR, "desk").strip().lower() or "desk"
    try:
        return PROFILES[name]
    except KeyError:
        raise ValueError(f"{ENV_VAR}={name!r}; expected one of {sorted(PROFILES)}") from None
