"""puzzlegram-audio: offline stem tools.

    puzzlegram-audio split --stems stems/ --out segments/ --seed 42
    puzzlegram-audio validate --manifest segments/manifest.json
    puzzlegram-audio synth --out stems/ [--rate 8000] [--segment-seconds 2.0]

split expects melody.wav, harmony1.wav, harmony2.wav, harmony3.wav in the
stems directory; synth writes a small generated test song in that layout.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import PuzzlegramError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="puzzlegram-audio", description="Puzzlegram audio pipeline")
    sub = parser.add_subparsers(dest="command", required=True)

    split = sub.add_parser("split", help="split four stems into 16 segments each and write a manifest")
    split.add_argument("--stems", required=True, help="directory with melody/harmony1..3 .wav stems")
    split.add_argument("--out", required=True, help="output directory for segments + manifest.json")
    split.add_argument("--seed", type=int, required=True, help="seed recorded in the manifest")

    validate = sub.add_parser("validate", help="check a manifest and its segment files")
    validate.add_argument("--manifest", required=True)

    synth = sub.add_parser("synth", help="write the synthesized four-layer test song")
    synth.add_argument("--out", required=True)
    synth.add_argument("--rate", type=int, default=8000)
    synth.add_argument("--segment-seconds", type=float, default=2.0)
    return parser


def main(argv: list[str] | None = None) -> int:
    from ..audio.manifest import build_manifest, load_manifest, validate_manifest
    from ..audio.synth import write_test_stems

    args = build_parser().parse_args(argv)
    try:
        if args.command == "split":
            manifest = build_manifest(args.stems, args.seed, args.out)
            print(f"wrote {sum(len(v) for v in manifest.layers.values())} segments and manifest.json to {args.out}")
            return 0
        if args.command == "validate":
            path = Path(args.manifest)
            report = validate_manifest(load_manifest(path), path.parent)
            if report.ok:
                print(f"{path}: ok")
                return 0
            for violation in report.violations:
                print(f"{path}: {violation}", file=sys.stderr)
            return 1
        if args.command == "synth":
            paths = write_test_stems(args.out, args.rate, args.segment_seconds)
            print(f"wrote {len(paths)} stems to {args.out}")
            return 0
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    except PuzzlegramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
