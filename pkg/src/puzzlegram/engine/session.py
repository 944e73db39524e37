"""The session state machine.

One Session value is the single source of truth for a game. It is a
single-writer machine: callers apply operations sequentially (the server
holds a per-session lock, the simulator is single-threaded) and views are
pure reads on the current snapshot.

Rules enforced here:

* the game starts only when the third player joins;
* every press reveals the pressed region's color, matched or not;
* a press matches iff the revealed color is the level's reference color;
* wrong presses cost nothing and never regress progress;
* a player who matched stays matched ("waiting") until the level advances;
* the level advances exactly when all three players have matched, and the
  sixteenth advance completes the game.

Time inside the engine is a caller-supplied monotone integer tick, so a
recorded operation sequence replays to a byte-identical state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..core.config import GameConfig, HARMONY_LAYERS, NUM_LEVELS, NUM_PLAYERS, NUM_REGIONS
from ..core.mappings import (
    ReferenceSequence,
    RegionColorMap,
    RegionSegmentMap,
    derive_player_color_map,
    derive_reference_sequence,
    derive_segment_map,
)
from ..core.palette import PALETTE
from ..errors import DomainError, NotStartedError, SessionFullError


class Phase(str, Enum):
    PAIRING = "pairing"
    ACTIVE = "active"
    COMPLETE = "complete"


@dataclass
class PlayerState:
    player_id: int
    name: str
    layer_id: str
    color_map: RegionColorMap
    segment_map: RegionSegmentMap
    matched: bool = False
    presses_this_level: int = 0
    # region -> RGB, precomputed from the palette for press handling
    region_rgb: tuple[tuple[int, int, int], ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class JoinResult:
    player_id: int
    layer_id: str


@dataclass(frozen=True)
class PressOutcome:
    player_id: int
    region: int
    shown_color: tuple[int, int, int]
    matched: bool
    audio_cue: tuple[str, int] | None
    level_advanced: bool
    game_complete: bool


@dataclass(frozen=True)
class PlayerView:
    reference_color: tuple[int, int, int]
    matched: bool
    level: int
    muted: bool


@dataclass(frozen=True)
class DisplayView:
    phase: Phase
    level: int
    reference_color: tuple[int, int, int] | None
    matched_flags: tuple[bool, ...]
    unlocked: int


class Session:
    """Mutable game session. Construct via create_session()."""

    def __init__(self, config: GameConfig):
        config.validate()
        self.config = config
        self.phase = Phase.PAIRING
        self.level = 0  # 1..16 once active; stays 16 when complete
        self.players: list[PlayerState] = []
        self.reference = derive_reference_sequence(config.seed)
        self.unlocked = 0
        self.muted = config.muted
        self.tick = 0

    # -- queries ------------------------------------------------------

    @property
    def reference_color_index(self) -> int | None:
        if self.phase is Phase.PAIRING:
            return None
        return self.reference.colors[self.level - 1]

    @property
    def reference_color(self) -> tuple[int, int, int] | None:
        idx = self.reference_color_index
        return None if idx is None else PALETTE[idx]

    def player(self, player_id: int) -> PlayerState:
        if not isinstance(player_id, int) or not 0 <= player_id < len(self.players):
            raise DomainError(f"unknown player: {player_id!r}")
        return self.players[player_id]

    # -- operations ---------------------------------------------------

    def join_player(self, name: str) -> JoinResult:
        if self.phase is not Phase.PAIRING:
            raise SessionFullError("session already has three players")
        player_id = len(self.players)
        layer_id = HARMONY_LAYERS[player_id]
        color_map = derive_player_color_map(self.config.seed, player_id)
        segment_map = derive_segment_map(self.config.seed, player_id, layer_id)
        self.players.append(
            PlayerState(
                player_id=player_id,
                name=name,
                layer_id=layer_id,
                color_map=color_map,
                segment_map=segment_map,
                region_rgb=tuple(PALETTE[c] for c in color_map.mapping),
            )
        )
        if len(self.players) == NUM_PLAYERS:
            self.phase = Phase.ACTIVE
            self.level = 1
        return JoinResult(player_id=player_id, layer_id=layer_id)

    def handle_press(self, player_id: int, region: int, tick: int) -> PressOutcome:
        if self.phase is Phase.PAIRING:
            raise NotStartedError("game has not started: waiting for three players")
        player = self.player(player_id)
        if not isinstance(region, int) or not 0 <= region < NUM_REGIONS:
            raise DomainError(f"region must be 0..{NUM_REGIONS - 1}, got {region!r}")
        if not isinstance(tick, int) or tick < self.tick:
            raise DomainError(f"tick must be monotone: got {tick!r} after {self.tick}")
        self.tick = tick

        shown = player.region_rgb[region]
        cue = None if self.muted else (player.layer_id, player.segment_map.mapping[region])

        if self.phase is Phase.COMPLETE or player.matched:
            # Exploration after matching (or after the game) still reveals
            # color and cues audio but changes nothing.
            return PressOutcome(player_id, region, shown, True, cue, False, False)

        player.presses_this_level += 1
        matched = player.color_map.mapping[region] == self.reference_color_index
        level_advanced = False
        game_complete = False
        if matched:
            player.matched = True
            if all(p.matched for p in self.players):
                self.unlocked += 1
                level_advanced = True
                if self.unlocked == NUM_LEVELS:
                    self.phase = Phase.COMPLETE
                    game_complete = True
                else:
                    self.level += 1
                    for p in self.players:
                        p.matched = False
                        p.presses_this_level = 0
        return PressOutcome(player_id, region, shown, matched, cue, level_advanced, game_complete)

    def set_muted(self, flag: bool) -> None:
        self.muted = bool(flag)

    # -- views --------------------------------------------------------

    def player_view(self, player_id: int) -> PlayerView:
        player = self.player(player_id)
        ref = self.reference_color
        if ref is None:
            raise NotStartedError("no reference color while pairing")
        return PlayerView(reference_color=ref, matched=player.matched, level=self.level, muted=self.muted)

    def display_view(self) -> DisplayView:
        return DisplayView(
            phase=self.phase,
            level=self.level,
            reference_color=self.reference_color,
            matched_flags=tuple(p.matched for p in self.players),
            unlocked=self.unlocked,
        )

    # -- determinism helpers -------------------------------------------

    def snapshot(self) -> dict:
        """Canonical value of the whole state, for equality in tests."""
        return {
            "seed": self.config.seed,
            "phase": self.phase.value,
            "level": self.level,
            "unlocked": self.unlocked,
            "muted": self.muted,
            "tick": self.tick,
            "players": [
                {
                    "player_id": p.player_id,
                    "name": p.name,
                    "layer_id": p.layer_id,
                    "color_map": list(p.color_map.mapping),
                    "segment_map": list(p.segment_map.mapping),
                    "matched": p.matched,
                    "presses_this_level": p.presses_this_level,
                }
                for p in self.players
            ],
        }


def create_session(config: GameConfig) -> Session:
    return Session(config)
