"""Scripted players.

random  -- uniform over regions not yet tried this level; no memory.
memory  -- remembers every color it has revealed across levels; presses
           the known region when the reference color is in memory, else
           explores uniformly among never-revealed regions.
noisy   -- per decision, acts like memory with probability
           recall_probability, else like random.

All choices come from the bot's own SplitMix64 stream, so a (strategy,
seed) pair is fully deterministic. Candidate sets are sorted before the
draw so the pick is platform-independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core.config import NUM_REGIONS
from ..core.rng import SplitMix64
from ..errors import DomainError

STRATEGY_KINDS = ("random", "memory", "noisy")


@dataclass(frozen=True)
class BotStrategy:
    kind: str
    recall_probability: float = 1.0

    def __post_init__(self):
        if self.kind not in STRATEGY_KINDS:
            raise DomainError(f"unknown bot kind: {self.kind!r}")
        if not 0.0 <= self.recall_probability <= 1.0:
            raise DomainError(f"recall_probability must be in [0,1], got {self.recall_probability}")


@dataclass(frozen=True)
class Observation:
    """What a bot may see: the target color index, the colors its own
    presses have revealed (region -> color index), and the regions it has
    already tried this level."""

    reference_color: int
    revealed: dict[int, int]
    tried_this_level: frozenset[int]


# Keeps the noisy bot's mode draws off the decision stream, so noisy with
# recall_probability 1.0 (or 0.0) is bit-identical to memory (or random).
_MODE_STREAM_DOMAIN = 0xB07D1CE


@dataclass
class Bot:
    strategy: BotStrategy
    rng_seed: int
    rng: SplitMix64 = field(init=False)
    mode_rng: SplitMix64 = field(init=False)

    def __post_init__(self):
        self.rng = SplitMix64(self.rng_seed)
        self.mode_rng = SplitMix64(self.rng_seed ^ _MODE_STREAM_DOMAIN)


def _pick(rng: SplitMix64, candidates: list[int]) -> int:
    return candidates[rng.below(len(candidates))]


def _decide_random(rng: SplitMix64, obs: Observation) -> int:
    candidates = sorted(set(range(NUM_REGIONS)) - obs.tried_this_level)
    if not candidates:
        raise AssertionError("no untried regions left; the match must have happened already")
    return _pick(rng, candidates)


def _decide_memory(rng: SplitMix64, obs: Observation) -> int:
    for region, color in obs.revealed.items():
        if color == obs.reference_color:
            return region
    unseen = sorted(set(range(NUM_REGIONS)) - set(obs.revealed))
    if not unseen:
        raise AssertionError("all colors revealed yet reference not found; maps are bijections")
    return _pick(rng, unseen)


def bot_decide(bot: Bot, obs: Observation) -> int:
    kind = bot.strategy.kind
    if kind == "random":
        return _decide_random(bot.rng, obs)
    if kind == "memory":
        return _decide_memory(bot.rng, obs)
    # noisy: one uniform draw from the mode stream decides the rule
    if bot.mode_rng.unit() < bot.strategy.recall_probability:
        return _decide_memory(bot.rng, obs)
    return _decide_random(bot.rng, obs)
