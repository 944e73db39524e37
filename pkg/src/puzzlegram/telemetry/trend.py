"""Exposure trend: does search effort fall as levels progress?

Ordinary least-squares slope of mean presses against level index, with a
seeded bootstrap (resampling whole sessions) for a 95% confidence
interval. A strategy that learns from revealed colors should show a
negative slope whose CI excludes zero; a memoryless one should not.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core.config import NUM_LEVELS
from ..errors import SampleSizeError
from .metrics import SessionMetrics

MIN_SESSIONS = 30


@dataclass(frozen=True)
class TrendReport:
    sessions: int
    mean_presses_per_level: tuple[float, ...]
    slope: float
    ci_low: float
    ci_high: float
    resamples: int
    bootstrap_seed: int

    def to_dict(self) -> dict:
        return {
            "sessions": self.sessions,
            "mean_presses_per_level": [round(v, 6) for v in self.mean_presses_per_level],
            "slope": round(self.slope, 6),
            "ci_low": round(self.ci_low, 6),
            "ci_high": round(self.ci_high, 6),
            "resamples": self.resamples,
            "bootstrap_seed": self.bootstrap_seed,
        }


def _slope(levels: np.ndarray, means: np.ndarray) -> float:
    x = levels - levels.mean()
    return float((x * (means - means.mean())).sum() / (x * x).sum())


def exposure_trend(
    metrics: list[SessionMetrics],
    resamples: int = 1000,
    bootstrap_seed: int = 0,
) -> TrendReport:
    if len(metrics) < MIN_SESSIONS:
        raise SampleSizeError(f"need at least {MIN_SESSIONS} sessions, got {len(metrics)}")

    # sessions x levels matrix of mean presses across that session's players
    rows = []
    for m in metrics:
        row = []
        for level in range(1, NUM_LEVELS + 1):
            values = m.presses_at_level(level)
            row.append(np.mean(values) if values else np.nan)
        rows.append(row)
    mat = np.asarray(rows, dtype=float)

    levels = np.arange(1, NUM_LEVELS + 1, dtype=float)
    mean_per_level = np.nanmean(mat, axis=0)
    slope = _slope(levels, mean_per_level)

    rng = np.random.default_rng(bootstrap_seed)
    n = mat.shape[0]
    slopes = np.empty(resamples)
    for i in range(resamples):
        sample = mat[rng.integers(0, n, size=n)]
        slopes[i] = _slope(levels, np.nanmean(sample, axis=0))
    ci_low, ci_high = np.percentile(slopes, [2.5, 97.5])

    return TrendReport(
        sessions=n,
        mean_presses_per_level=tuple(float(v) for v in mean_per_level),
        slope=slope,
        ci_low=float(ci_low),
        ci_high=float(ci_high),
        resamples=resamples,
        bootstrap_seed=bootstrap_seed,
    )
