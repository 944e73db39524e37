"""Seed-derived per-player assignments.

Three independent families of permutations hang off the session seed:

* region -> color index, one per player (each controller lays out all 16
  palette colors in its own order);
* region -> segment order 1..16, one per (player, harmony layer);
* level -> reference color index, shared by everyone.

Each family uses its own domain constant so the streams never collide for
a given seed. The golden vectors for seed 42 are frozen in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError
from .config import HARMONY_LAYERS, LAYERS, MELODY_LAYER, NUM_PLAYERS, NUM_REGIONS
from .rng import seeded_permutation, subseed

COLOR_MAP_DOMAIN = 0xC0105
SEGMENT_MAP_DOMAIN = 0x5E60000
REFERENCE_DOMAIN = 0x2EF000


@dataclass(frozen=True)
class RegionColorMap:
    """Bijection region 0..15 -> color index 0..15 for one controller."""

    player_id: int
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class RegionSegmentMap:
    """Bijection region 0..15 -> segment order 1..16 for one (player, layer)."""

    player_id: int
    layer_id: str
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class ReferenceSequence:
    """Reference color index per level: colors[k-1] is level k's target."""

    colors: tuple[int, ...]


def _check_player(player_id: int) -> None:
    if not isinstance(player_id, int) or not 0 <= player_id < NUM_PLAYERS:
        raise DomainError(f"player_id must be 0..{NUM_PLAYERS - 1}, got {player_id!r}")


def derive_player_color_map(seed: int, player_id: int) -> RegionColorMap:
    _check_player(player_id)
    perm = seeded_permutation(NUM_REGIONS, subseed(seed, COLOR_MAP_DOMAIN + player_id))
    return RegionColorMap(player_id=player_id, mapping=tuple(perm))


def derive_segment_map(seed: int, player_id: int, layer_id: str) -> RegionSegmentMap:
    _check_player(player_id)
    if layer_id not in LAYERS:
        raise DomainError(f"unknown layer: {layer_id!r}")
    if layer_id == MELODY_LAYER:
        raise DomainError("melody is the shared reference layer; only harmony layers get segment maps")
    layer_index = LAYERS.index(layer_id)
    sub = subseed(seed, SEGMENT_MAP_DOMAIN + 0x100 * layer_index + player_id)
    perm = seeded_permutation(NUM_REGIONS, sub, base=1)
    return RegionSegmentMap(player_id=player_id, layer_id=layer_id, mapping=tuple(perm))


def derive_reference_sequence(seed: int) -> ReferenceSequence:
    perm = seeded_permutation(NUM_REGIONS, subseed(seed, REFERENCE_DOMAIN))
    return ReferenceSequence(colors=tuple(perm))


__all__ = [
    "COLOR_MAP_DOMAIN",
    "HARMONY_LAYERS",
    "REFERENCE_DOMAIN",
    "SEGMENT_MAP_DOMAIN",
    "ReferenceSequence",
    "RegionColorMap",
    "RegionSegmentMap",
    "derive_player_color_map",
    "derive_reference_sequence",
    "derive_segment_map",
]
