"""Headless Monte Carlo driver.

Each trial builds a fresh session and three bots, seeds drawn in a fixed
order (game, bot0, bot1, bot2) from one SplitMix64 stream over the master
seed, then plays to completion by round-robin polling of unmatched bots,
one press per turn. Logical ticks serve as timestamps so two runs with
the same master seed produce byte-identical logs.

The engine is driven directly; the network path has its own smoke test.
"""

from __future__ import annotations

import json
import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from ..core.config import GameConfig, NUM_LEVELS, NUM_PLAYERS
from ..core.palette import PALETTE
from ..core.rng import SplitMix64
from ..engine.session import Phase, create_session
from ..errors import SampleSizeError
from ..telemetry.events import EventRecord, JsonlEventLog, SessionRecorder
from .bots import Bot, BotStrategy, Observation, bot_decide


def play_one_game(
    game_seed: int,
    strategies: Sequence[BotStrategy],
    bot_seeds: Sequence[int],
    session_id: str,
    writer: JsonlEventLog | None = None,
    muted: bool = False,
) -> list[EventRecord]:
    session = create_session(GameConfig(seed=game_seed, muted=muted))
    recorder = SessionRecorder(session, session_id, writer=writer, clock=lambda: session.tick)
    bots = [Bot(strategy, seed) for strategy, seed in zip(strategies, bot_seeds)]
    revealed: list[dict[int, int]] = [{} for _ in range(NUM_PLAYERS)]
    tried: list[set[int]] = [set() for _ in range(NUM_PLAYERS)]

    for player_id in range(NUM_PLAYERS):
        recorder.join_player(f"bot-{player_id}", ts_ms=0)

    tick = 1
    while session.phase is Phase.ACTIVE:
        for player_id in range(NUM_PLAYERS):
            if session.phase is not Phase.ACTIVE:
                break
            if session.players[player_id].matched:
                continue
            obs = Observation(
                reference_color=session.reference_color_index,
                revealed=revealed[player_id],
                tried_this_level=frozenset(tried[player_id]),
            )
            region = bot_decide(bots[player_id], obs)
            outcome = recorder.handle_press(player_id, region, tick=tick, ts_ms=tick)
            tick += 1
            revealed[player_id][region] = PALETTE.index_of(outcome.shown_color)
            tried[player_id].add(region)
            if outcome.level_advanced:
                for t in tried:
                    t.clear()
    return recorder.records


def run_simulation(
    strategies: Sequence[BotStrategy],
    trials: int,
    master_seed: int,
    logs_dir: str | Path | None = None,
    muted: bool = False,
) -> list[list[EventRecord]]:
    if len(strategies) != NUM_PLAYERS:
        raise SampleSizeError(f"need {NUM_PLAYERS} strategies, got {len(strategies)}")
    if trials < 1:
        raise SampleSizeError("trials must be >= 1")

    master = SplitMix64(master_seed)
    logs: list[list[EventRecord]] = []
    for trial in range(trials):
        game_seed = master.next_u64()
        bot_seeds = [master.next_u64() for _ in range(NUM_PLAYERS)]
        writer = None
        if logs_dir is not None:
            writer = JsonlEventLog(Path(logs_dir) / f"trial-{trial:05d}.jsonl")
        try:
            logs.append(
                play_one_game(game_seed, strategies, bot_seeds, f"trial-{trial:05d}", writer, muted)
            )
        finally:
            if writer is not None:
                writer.close()
    return logs


@dataclass(frozen=True)
class SimReport:
    trials: int
    completion_rate: float
    mean_session_presses: float
    # strategy kind -> 16 per-level means / sample stddevs
    per_strategy: dict[str, dict[str, list[float]]]

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "completion_rate": self.completion_rate,
            "mean_session_presses": round(self.mean_session_presses, 6),
            "per_strategy": self.per_strategy,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        lines = ["strategy,level,mean_presses,std_presses"]
        for kind, stats in sorted(self.per_strategy.items()):
            for level in range(NUM_LEVELS):
                lines.append(
                    f"{kind},{level + 1},{stats['mean_presses_per_level'][level]},"
                    f"{stats['std_presses_per_level'][level]}"
                )
        return "\n".join(lines) + "\n"


def summarize(logs: list[list[EventRecord]], strategies: Sequence[BotStrategy]) -> SimReport:
    if not logs:
        raise SampleSizeError("no logs to summarize")

    completed = 0
    total_presses = 0
    # kind -> level -> list of press counts
    per_kind: dict[str, list[list[int]]] = {s.kind: [[] for _ in range(NUM_LEVELS)] for s in strategies}

    for records in logs:
        presses: dict[tuple[int, int], int] = {}
        for rec in records:
            if rec.event == "press":
                key = (rec.player_id, rec.level)
                presses[key] = presses.get(key, 0) + 1
                total_presses += 1
            elif rec.event == "complete":
                completed += 1
        for (player_id, level), count in presses.items():
            per_kind[strategies[player_id].kind][level - 1].append(count)

    per_strategy = {}
    for kind, levels in per_kind.items():
        means, stds = [], []
        for counts in levels:
            means.append(round(statistics.fmean(counts), 6) if counts else 0.0)
            stds.append(round(statistics.pstdev(counts), 6) if counts else 0.0)
        per_strategy[kind] = {"mean_presses_per_level": means, "std_presses_per_level": stds}

    return SimReport(
        trials=len(logs),
        completion_rate=completed / len(logs),
        mean_session_presses=total_presses / len(logs),
        per_strategy=per_strategy,
    )
