"""Seeded mappings: frozen golden vectors, bijectivity, domain separation."""

import pytest

from puzzlegram.core.config import HARMONY_LAYERS, MELODY_LAYER
from puzzlegram.core.mappings import (
    COLOR_MAP_DOMAIN,
    REFERENCE_DOMAIN,
    derive_player_color_map,
    derive_reference_sequence,
    derive_segment_map,
)
from puzzlegram.core.rng import seeded_permutation, subseed
from puzzlegram.errors import DomainError

# Frozen outputs of an out-of-repo reference implementation of the
# generator + shuffle pipeline, computed once and pinned here.
GOLDEN_COLOR_MAPS_SEED_42 = {
    0: [7, 14, 15, 13, 9, 4, 3, 11, 1, 12, 5, 0, 8, 6, 10, 2],
    1: [0, 4, 2, 13, 14, 5, 12, 7, 1, 10, 6, 8, 9, 11, 3, 15],
    2: [12, 9, 14, 1, 7, 11, 4, 2, 5, 6, 13, 8, 0, 3, 10, 15],
}
GOLDEN_COLOR_MAP_SEED_7_P0 = [3, 1, 10, 8, 5, 14, 0, 2, 7, 9, 13, 11, 4, 6, 12, 15]
GOLDEN_SEGMENT_MAPS_SEED_42_P0 = {
    "harmony1": [13, 9, 2, 15, 3, 14, 6, 12, 16, 5, 7, 10, 1, 4, 8, 11],
    "harmony2": [4, 5, 12, 7, 8, 10, 16, 11, 2, 14, 6, 9, 1, 13, 3, 15],
    "harmony3": [15, 12, 16, 14, 13, 1, 11, 3, 10, 6, 8, 7, 5, 2, 9, 4],
}
GOLDEN_REFERENCE_SEED_42 = [15, 4, 12, 5, 2, 8, 7, 1, 6, 10, 9, 0, 11, 13, 14, 3]
GOLDEN_REFERENCE_SEED_7 = [13, 0, 9, 7, 12, 11, 14, 2, 10, 15, 5, 8, 3, 1, 6, 4]


def test_color_maps_match_goldens():
    for pid, expected in GOLDEN_COLOR_MAPS_SEED_42.items():
        assert list(derive_player_color_map(42, pid).mapping) == expected
    assert list(derive_player_color_map(7, 0).mapping) == GOLDEN_COLOR_MAP_SEED_7_P0


def test_segment_maps_match_goldens():
    for layer, expected in GOLDEN_SEGMENT_MAPS_SEED_42_P0.items():
        assert list(derive_segment_map(42, 0, layer).mapping) == expected


def test_reference_sequence_matches_goldens():
    assert list(derive_reference_sequence(42).colors) == GOLDEN_REFERENCE_SEED_42
    assert list(derive_reference_sequence(7).colors) == GOLDEN_REFERENCE_SEED_7


def test_color_map_domain_offsets_by_player():
    for pid in range(3):
        sub = subseed(42, COLOR_MAP_DOMAIN + pid)
        assert list(derive_player_color_map(42, pid).mapping) == seeded_permutation(16, sub)


def test_reference_uses_its_own_domain():
    assert list(derive_reference_sequence(42).colors) == seeded_permutation(
        16, subseed(42, REFERENCE_DOMAIN)
    )


def test_all_maps_are_bijections():
    for seed in range(25):
        assert sorted(derive_reference_sequence(seed).colors) == list(range(16))
        for pid in range(3):
            assert sorted(derive_player_color_map(seed, pid).mapping) == list(range(16))
            for layer in HARMONY_LAYERS:
                segs = derive_segment_map(seed, pid, layer)
                assert sorted(segs.mapping) == list(range(1, 17))


def test_players_get_distinct_color_maps():
    for seed in range(25):
        maps = [tuple(derive_player_color_map(seed, p).mapping) for p in range(3)]
        assert len(set(maps)) == 3


def test_layers_get_distinct_segment_maps():
    for seed in range(25):
        maps = [tuple(derive_segment_map(seed, 0, layer).mapping) for layer in HARMONY_LAYERS]
        assert len(set(maps)) == 3


def test_derivations_are_pure_and_repeatable():
    assert derive_player_color_map(123, 1) == derive_player_color_map(123, 1)
    assert derive_reference_sequence(123) == derive_reference_sequence(123)
    assert derive_segment_map(123, 2, "harmony3") == derive_segment_map(123, 2, "harmony3")


def test_player_id_out_of_range_rejected():
    with pytest.raises(DomainError):
        derive_player_color_map(42, 3)
    with pytest.raises(DomainError):
        derive_player_color_map(42, -1)


def test_melody_has_no_segment_map():
    with pytest.raises(DomainError):
        derive_segment_map(42, 0, MELODY_LAYER)
    with pytest.raises(DomainError):
        derive_segment_map(42, 0, "bass")


def test_exactly_one_region_matches_reference_each_level():
    # The color map is a bijection, so for any player and level exactly one
    # region carries the reference color.
    for seed in (0, 1, 42, 7, 99):
        ref = derive_reference_sequence(seed).colors
        for pid in range(3):
            cmap = derive_player_color_map(seed, pid).mapping
            for level in range(1, 17):
                target = ref[level - 1]
                hits = [r for r in range(16) if cmap[r] == target]
                assert len(hits) == 1
