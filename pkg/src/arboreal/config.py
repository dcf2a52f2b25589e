"""Configuration models for enumeration guards, verification runs and the search harness."""

import logging
import os
from typing import Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

DEFAULT_MAX_TREES = 10_000_000
DEFAULT_MAX_CYCLES = 10_000_000
HARNESS_VERTEX_CEILING = 8


class EnumerationLimits(BaseModel):
    max_trees: int = Field(default=DEFAULT_MAX_TREES, ge=1, description="Abort spanning-tree enumeration above this count")
    max_cycles: int = Field(default=DEFAULT_MAX_CYCLES, ge=1, description="Abort cycle enumeration above this count")


class VerifyConfig(BaseModel):
    n: int = Field(default=0, ge=0, description="Number of octahedron layers around the base copy")
    limits: EnumerationLimits = Field(default_factory=EnumerationLimits)
    witnesses: bool = Field(default=False, description="Attach a spanning sequence for every cycle to the report")


class HarnessConfig(BaseModel):
    seed: int = 42
    max_vertices: int = Field(default=5, ge=3, le=HARNESS_VERTEX_CEILING)
    samples: int = Field(default=1000, ge=0)
    max_trees_per_sample: int = Field(default=20_000, ge=1, description="Samples with more spanning trees are skipped")
    workers: int = Field(default=1, ge=1, description="Worker processes; results do not depend on this")
    include_octahedron: bool = Field(default=False, description="Evaluate the octahedron counterexample as sample 0")


def _env_int(name: str) -> Optional[int]:
    value = os.getenv(name)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={value!r}")
        return None


def load_limits(max_trees: Optional[int] = None, max_cycles: Optional[int] = None) -> EnumerationLimits:
    """Build limits from explicit values, then ARBOREAL_MAX_TREES / ARBOREAL_MAX_CYCLES, then defaults."""
    trees = max_trees if max_trees is not None else _env_int("ARBOREAL_MAX_TREES")
    cycles = max_cycles if max_cycles is not None else _env_int("ARBOREAL_MAX_CYCLES")
    return EnumerationLimits(
        max_trees=trees if trees is not None else DEFAULT_MAX_TREES,
        max_cycles=cycles if cycles is not None else DEFAULT_MAX_CYCLES,
    )
