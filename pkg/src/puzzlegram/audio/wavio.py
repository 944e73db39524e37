"""Minimal 16-bit PCM WAV I/O on top of the stdlib wave module.

PCM payloads are kept as raw little-endian bytes so splitting and
re-concatenation are trivially bit-exact.
"""

from __future__ import annotations

import wave
from dataclasses import dataclass
from pathlib import Path

from ..errors import AudioDecodeError

SAMPLE_WIDTH = 2  # bytes per sample: 16-bit PCM only


@dataclass(frozen=True)
class Stem:
    """One instrumentation layer (or one segment of it) as PCM frames."""

    layer_id: str
    sample_rate: int
    channels: int
    data: bytes  # interleaved 16-bit little-endian PCM

    @property
    def frame_size(self) -> int:
        return SAMPLE_WIDTH * self.channels

    @property
    def num_frames(self) -> int:
        return len(self.data) // self.frame_size


def read_stem(path: str | Path, layer_id: str | None = None) -> Stem:
    path = Path(path)
    try:
        with wave.open(str(path), "rb") as wav:
            if wav.getsampwidth() != SAMPLE_WIDTH:
                raise AudioDecodeError(
                    f"{path}: only 16-bit PCM is supported, got {8 * wav.getsampwidth()}-bit"
                )
            if wav.getcomptype() != "NONE":
                raise AudioDecodeError(f"{path}: compressed WAV is not supported")
            channels = wav.getnchannels()
            sample_rate = wav.getframerate()
            n_frames = wav.getnframes()
            data = wav.readframes(n_frames)
    except wave.Error as exc:
        raise AudioDecodeError(f"{path}: {exc}") from exc
    if len(data) != n_frames * SAMPLE_WIDTH * channels:
        raise AudioDecodeError(f"{path}: truncated PCM payload")
    return Stem(
        layer_id=layer_id or path.stem,
        sample_rate=sample_rate,
        channels=channels,
        data=data,
    )


def write_stem(stem: Stem, path: str | Path) -> None:
    with wave.open(str(path), "wb") as wav:
        wav.setnchannels(stem.channels)
        wav.setsampwidth(SAMPLE_WIDTH)
        wav.setframerate(stem.sample_rate)
        wav.writeframes(stem.data)
