"""Single-call front door: dispatch a run to the engine named in the config."""

from __future__ import annotations

from .buchberger import buchberger_gb
from .engine import EngineConfig, EngineReport
from .f4 import f4_gb
from .incremental import incremental_gb

ENGINES = {
    "buchberger": buchberger_gb,
    "f4": f4_gb,
    "incremental": incremental_gb,
}


def groebner_basis(polys, config: EngineConfig) -> EngineReport:
    """Run the configured engine on the input polynomials."""
    return ENGINES[config.engine](polys, config)
