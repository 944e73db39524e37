"""Game configuration and the fixed instrumentation layer names."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from ..errors import ConfigError

NUM_PLAYERS = 3
NUM_REGIONS = 16
NUM_LEVELS = 16

MELODY_LAYER = "melody"
HARMONY_LAYERS = ("harmony1", "harmony2", "harmony3")
LAYERS = (MELODY_LAYER,) + HARMONY_LAYERS

_SEED_LIMIT = 1 << 64


@dataclass(frozen=True)
class GameConfig:
    """Session parameters. The player/region/level counts are structural
    constants of this game; they are carried here so tests can assert the
    validation, not so they can vary."""

    seed: int
    num_players: int = NUM_PLAYERS
    num_regions: int = NUM_REGIONS
    num_levels: int = NUM_LEVELS
    muted: bool = False
    manifest_path: str | None = None

    def validate(self) -> "GameConfig":
        if not isinstance(self.seed, int) or not 0 <= self.seed < _SEED_LIMIT:
            raise ConfigError(f"seed must be a u64, got {self.seed!r}")
        if self.num_players != NUM_PLAYERS:
            raise ConfigError(f"num_players is fixed at {NUM_PLAYERS}, got {self.num_players}")
        if self.num_regions != NUM_REGIONS:
            raise ConfigError(f"num_regions is fixed at {NUM_REGIONS}, got {self.num_regions}")
        if self.num_levels != NUM_LEVELS:
            raise ConfigError(f"num_levels is fixed at {NUM_LEVELS}, got {self.num_levels}")
        if self.manifest_path is not None and not os.path.exists(self.manifest_path):
            raise ConfigError(f"manifest not found: {self.manifest_path}")
        return self
