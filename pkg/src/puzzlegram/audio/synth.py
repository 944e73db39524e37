"""Synthesized four-layer test song.

A 32-second placeholder (16 segments of 2 s): a sine melody walking a
pentatonic-ish line, two sine harmony pads and one triangle bass line.
Pure integer math on fixed parameters, so the output is byte-identical
across runs -- the manifest idempotence tests rely on that.
"""

from __future__ import annotations

import math
import struct
from pathlib import Path

from ..core.config import HARMONY_LAYERS, MELODY_LAYER
from .wavio import Stem, write_stem

# One base frequency per segment index; loosely "Ode to Joy"-shaped.
_MELODY_HZ = [330, 330, 349, 392, 392, 349, 330, 294, 262, 262, 294, 330, 330, 294, 294, 330]

_AMPLITUDE = 12000


def _sine(freq: float, i: int, rate: int) -> float:
    return math.sin(2.0 * math.pi * freq * i / rate)


def _triangle(freq: float, i: int, rate: int) -> float:
    phase = (freq * i / rate) % 1.0
    return 4.0 * abs(phase - 0.5) - 1.0


def synth_layer(layer_id: str, sample_rate: int = 8000, seconds_per_segment: float = 2.0) -> Stem:
    frames_per_segment = int(sample_rate * seconds_per_segment)
    total = frames_per_segment * 16
    samples = bytearray()
    for i in range(total):
        seg = min(i // frames_per_segment, 15)
        base = _MELODY_HZ[seg]
        if layer_id == MELODY_LAYER:
            value = _sine(base, i, sample_rate)
        elif layer_id == "harmony1":
            value = 0.6 * _sine(base * 5 / 4, i, sample_rate)
        elif layer_id == "harmony2":
            value = 0.5 * _sine(base * 3 / 2, i, sample_rate)
        else:  # harmony3: triangle bass an octave down
            value = 0.7 * _triangle(base / 2, i, sample_rate)
        samples += struct.pack("<h", int(value * _AMPLITUDE))
    return Stem(layer_id=layer_id, sample_rate=sample_rate, channels=1, data=bytes(samples))


def write_test_stems(out_dir: str | Path, sample_rate: int = 8000, seconds_per_segment: float = 2.0) -> list[Path]:
    """Write melody.wav + harmony1..3.wav into out_dir; returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for layer in (MELODY_LAYER, *HARMONY_LAYERS):
        stem = synth_layer(layer, sample_rate, seconds_per_segment)
        path = out_dir / f"{layer}.wav"
        write_stem(stem, path)
        paths.append(path)
    return paths
