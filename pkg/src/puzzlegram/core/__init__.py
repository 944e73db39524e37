from .config import GameConfig, HARMONY_LAYERS, LAYERS, MELODY_LAYER
from .mappings import (
    ReferenceSequence,
    RegionColorMap,
    RegionSegmentMap,
    derive_player_color_map,
    derive_reference_sequence,
    derive_segment_map,
)
from .palette import ColorPalette, build_palette
from .rng import SplitMix64, seeded_permutation, subseed

__all__ = [
    "ColorPalette",
    "GameConfig",
    "HARMONY_LAYERS",
    "LAYERS",
    "MELODY_LAYER",
    "ReferenceSequence",
    "RegionColorMap",
    "RegionSegmentMap",
    "SplitMix64",
    "build_palette",
    "derive_player_color_map",
    "derive_reference_sequence",
    "derive_segment_map",
    "seeded_permutation",
    "subseed",
]
