"""Song manifests: build segments from four stems, validate the result.

The manifest stores segments in song order; which region cues which
segment is a per-session mapping derived from the seed at runtime, so the
same assets serve every game. The seed passed at build time is only
recorded for provenance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..core.config import LAYERS
from ..errors import StemConsistencyError, StemLayoutError
from .split import NUM_SEGMENTS, split_stem
from .wavio import Stem, read_stem, write_stem

MANIFEST_NAME = "manifest.json"


@dataclass(frozen=True)
class SongManifest:
    song_id: str
    sample_rate: int
    channels: int
    segment_frames: tuple[int, ...]
    layers: dict[str, list[str]]  # layer_id -> 16 paths relative to the manifest
    created_with_seed: int

    def to_json(self) -> str:
        doc = {
            "song_id": self.song_id,
            "sample_rate": self.sample_rate,
            "channels": self.channels,
            "segment_frames": list(self.segment_frames),
            "layers": {layer: list(paths) for layer, paths in sorted(self.layers.items())},
            "created_with_seed": self.created_with_seed,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SongManifest":
        doc = json.loads(text)
        return cls(
            song_id=doc["song_id"],
            sample_rate=doc["sample_rate"],
            channels=doc["channels"],
            segment_frames=tuple(doc["segment_frames"]),
            layers={layer: list(paths) for layer, paths in doc["layers"].items()},
            created_with_seed=doc["created_with_seed"],
        )


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _load_stems(stem_dir: Path) -> dict[str, Stem]:
    wavs = {p.stem: p for p in stem_dir.glob("*.wav")}
    missing = [layer for layer in LAYERS if layer not in wavs]
    extra = sorted(set(wavs) - set(LAYERS))
    if missing or extra:
        raise StemLayoutError(
            f"{stem_dir}: expected exactly {list(LAYERS)}.wav"
            + (f"; missing {missing}" if missing else "")
            + (f"; unexpected {extra}" if extra else "")
        )
    return {layer: read_stem(wavs[layer], layer) for layer in LAYERS}


def build_manifest(stem_dir: str | Path, seed: int, out_dir: str | Path) -> SongManifest:
    stem_dir = Path(stem_dir)
    out_dir = Path(out_dir)
    stems = _load_stems(stem_dir)

    first = stems[LAYERS[0]]
    for layer, stem in stems.items():
        if (stem.sample_rate, stem.channels, stem.num_frames) != (
            first.sample_rate,
            first.channels,
            first.num_frames,
        ):
            raise StemConsistencyError(
                f"{layer}: rate/channels/frames {stem.sample_rate}/{stem.channels}/{stem.num_frames}"
                f" differ from {LAYERS[0]}'s {first.sample_rate}/{first.channels}/{first.num_frames}"
            )

    out_dir.mkdir(parents=True, exist_ok=True)
    layers: dict[str, list[str]] = {}
    segment_frames: tuple[int, ...] = ()
    for layer, stem in stems.items():
        segments = split_stem(stem, NUM_SEGMENTS)
        segment_frames = tuple(seg.num_frames for seg in segments)
        names = []
        for order, seg in enumerate(segments, start=1):
            name = f"{layer}_{order:02d}.wav"
            write_stem(seg, out_dir / name)
            names.append(name)
        layers[layer] = names

    manifest = SongManifest(
        song_id=stem_dir.name,
        sample_rate=first.sample_rate,
        channels=first.channels,
        segment_frames=segment_frames,
        layers=layers,
        created_with_seed=seed,
    )
    (out_dir / MANIFEST_NAME).write_text(manifest.to_json(), encoding="utf-8")
    return manifest


def load_manifest(path: str | Path) -> SongManifest:
    return SongManifest.from_json(Path(path).read_text(encoding="utf-8"))


def validate_manifest(manifest: SongManifest, base_dir: str | Path) -> ValidationReport:
    """Check manifest invariants plus existence/decodability of every file."""
    base_dir = Path(base_dir)
    report = ValidationReport()

    if sorted(manifest.layers) != sorted(LAYERS):
        report.violations.append(f"layers must be exactly {sorted(LAYERS)}, got {sorted(manifest.layers)}")
    if len(manifest.segment_frames) != NUM_SEGMENTS:
        report.violations.append(f"segment_frames must have {NUM_SEGMENTS} entries")
    elif max(manifest.segment_frames) - min(manifest.segment_frames) > 1:
        report.violations.append("segment lengths differ by more than one frame")

    for layer, names in sorted(manifest.layers.items()):
        if len(names) != NUM_SEGMENTS:
            report.violations.append(f"{layer}: expected {NUM_SEGMENTS} segments, got {len(names)}")
            continue
        total = 0
        for order, name in enumerate(names, start=1):
            path = base_dir / name
            if not path.exists():
                report.violations.append(f"{layer} segment {order}: missing file {name}")
                continue
            try:
                seg = read_stem(path, layer)
            except Exception as exc:
                report.violations.append(f"{layer} segment {order}: {exc}")
                continue
            total += seg.num_frames
            if seg.sample_rate != manifest.sample_rate:
                report.violations.append(f"{layer} segment {order}: sample rate {seg.sample_rate} != {manifest.sample_rate}")
            if seg.channels != manifest.channels:
                report.violations.append(f"{layer} segment {order}: channels {seg.channels} != {manifest.channels}")
            if order <= len(manifest.segment_frames) and seg.num_frames != manifest.segment_frames[order - 1]:
                report.violations.append(
                    f"{layer} segment {order}: {seg.num_frames} frames != manifest's {manifest.segment_frames[order - 1]}"
                )
        if total and total != sum(manifest.segment_frames):
            report.violations.append(
                f"{layer}: on-disk frames {total} != segment_frames sum {sum(manifest.segment_frames)}"
            )
    return report
