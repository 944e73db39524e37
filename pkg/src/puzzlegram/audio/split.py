"""Equal splitting of a stem into n segments.

Segment i covers frames [floor(i*N/n), floor((i+1)*N/n)). The boundaries
partition the input exactly (concatenation is bit-identical) and segment
lengths differ by at most one frame, remainder frames landing where the
floor steps -- no padding, no drift.
"""

from __future__ import annotations

from ..errors import StemTooShortError
from .wavio import Stem

NUM_SEGMENTS = 16


def segment_bounds(total_frames: int, n: int = NUM_SEGMENTS) -> list[tuple[int, int]]:
    return [(i * total_frames // n, (i + 1) * total_frames // n) for i in range(n)]


def split_stem(stem: Stem, n: int = NUM_SEGMENTS) -> list[Stem]:
    total = stem.num_frames
    if total < n:
        raise StemTooShortError(f"{stem.layer_id}: {total} frames cannot make {n} segments")
    frame_size = stem.frame_size
    segments = []
    for start, end in segment_bounds(total, n):
        segments.append(
            Stem(
                layer_id=stem.layer_id,
                sample_rate=stem.sample_rate,
                channels=stem.channels,
                data=stem.data[start * frame_size : end * frame_size],
            )
        )
    return segments
