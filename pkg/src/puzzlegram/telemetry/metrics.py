"""Session metrics computed from an event log.

time_to_match for (player, level) is anchored at the moment the level
became current -- the third join for level 1, the preceding level_advance
for every later level -- which is when the new color and excerpt appear.
Metrics are pure functions of the log; prefix logs yield prefix metrics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .events import EventRecord, read_log


@dataclass(frozen=True)
class LevelStats:
    time_to_match_ms: int
    presses: int
    distinct_regions_touched: int


@dataclass
class SessionMetrics:
    session_id: str = ""
    per_player_level: dict[tuple[int, int], LevelStats] = field(default_factory=dict)
    total_duration_ms: int = 0
    levels_completed: int = 0
    exploration_entropy: dict[int, float] = field(default_factory=dict)
    parse_errors: int = 0

    def presses_at_level(self, level: int) -> list[int]:
        return [stats.presses for (pid, lv), stats in self.per_player_level.items() if lv == level]

    def to_dict(self) -> dict:
        players = sorted({pid for pid, _ in self.per_player_level})
        return {
            "session_id": self.session_id,
            "total_duration_ms": self.total_duration_ms,
            "levels_completed": self.levels_completed,
            "parse_errors": self.parse_errors,
            "exploration_entropy_bits": {str(p): round(self.exploration_entropy.get(p, 0.0), 6) for p in players},
            "per_player_level": [
                {
                    "player_id": pid,
                    "level": lv,
                    "time_to_match_ms": stats.time_to_match_ms,
                    "presses": stats.presses,
                    "distinct_regions_touched": stats.distinct_regions_touched,
                }
                for (pid, lv), stats in sorted(self.per_player_level.items())
            ],
        }


def shannon_entropy_bits(counts: Iterable[int]) -> float:
    total = sum(counts)
    if total == 0:
        return 0.0
    h = 0.0
    for c in counts:
        if c:
            p = c / total
            h -= p * math.log2(p)
    return h


def compute_session_metrics(source: str | Path | Iterable[EventRecord]) -> SessionMetrics:
    if isinstance(source, (str, Path)):
        records, parse_errors = read_log(source)
    else:
        records, parse_errors = list(source), 0

    metrics = SessionMetrics(parse_errors=parse_errors)
    if not records:
        return metrics
    metrics.session_id = records[0].session_id
    metrics.total_duration_ms = records[-1].ts_ms - records[0].ts_ms

    level_start_ts: dict[int, int] = {}
    presses: dict[tuple[int, int], int] = {}
    regions: dict[tuple[int, int], set[int]] = {}
    match_ts: dict[tuple[int, int], int] = {}
    region_counts: dict[int, dict[int, int]] = {}
    joins = 0

    for rec in records:
        if rec.event == "join":
            joins += 1
            if joins == 3:
                level_start_ts[1] = rec.ts_ms
        elif rec.event == "press":
            key = (rec.player_id, rec.level)
            presses[key] = presses.get(key, 0) + 1
            regions.setdefault(key, set()).add(rec.region)
            per_region = region_counts.setdefault(rec.player_id, {})
            per_region[rec.region] = per_region.get(rec.region, 0) + 1
        elif rec.event == "match":
            match_ts[(rec.player_id, rec.level)] = rec.ts_ms
        elif rec.event == "level_advance":
            metrics.levels_completed = rec.level
            level_start_ts[rec.level + 1] = rec.ts_ms

    for (pid, level), ts in match_ts.items():
        start = level_start_ts.get(level, records[0].ts_ms)
        metrics.per_player_level[(pid, level)] = LevelStats(
            time_to_match_ms=ts - start,
            presses=presses.get((pid, level), 0),
            distinct_regions_touched=len(regions.get((pid, level), ())),
        )

    for pid, counts in region_counts.items():
        metrics.exploration_entropy[pid] = shannon_entropy_bits(counts.values())

    return metrics
