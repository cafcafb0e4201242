"""Common result record for the three exponent estimators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

METHOD_WOLF = "wolf"
METHOD_ROSENSTEIN = "rosenstein"
METHOD_MAZHAR_ESLAM = "mazhar-eslam"

ALL_METHODS = (METHOD_MAZHAR_ESLAM, METHOD_WOLF, METHOD_ROSENSTEIN)


@dataclass(frozen=True)
class ExponentEstimate:
    """A Lyapunov exponent in nats per time unit plus provenance.

    ``params`` echoes every input needed to reproduce the run;
    ``diagnostics`` carries the method-specific payload (trace, curve,
    local-exponent set).
    """

    value: float
    method: str
    params: dict = field(default_factory=dict)
    diagnostics: Any = None
