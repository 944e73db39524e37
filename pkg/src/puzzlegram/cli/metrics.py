"""puzzlegram-metrics: session metrics and the cross-session exposure trend.

    puzzlegram-metrics --log logs/demo.jsonl --out json
    puzzlegram-metrics --trend 'logs/*.jsonl' --out csv [--resamples 1000] [--bootstrap-seed 0]

--log prints one session's metrics; --trend aggregates many session logs
into a mean-presses-per-level trend with a bootstrap confidence interval.
--out selects json or csv on stdout.
"""

from __future__ import annotations

import argparse
import glob
import json
import sys

from ..errors import PuzzlegramError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="puzzlegram-metrics", description="Puzzlegram telemetry metrics")
    parser.add_argument("--log", help="one session log (JSONL)")
    parser.add_argument("--trend", help="glob of session logs for the exposure trend")
    parser.add_argument("--out", choices=("json", "csv"), default="json")
    parser.add_argument("--resamples", type=int, default=1000)
    parser.add_argument("--bootstrap-seed", type=int, default=0)
    return parser


def _metrics_csv(doc: dict) -> str:
    lines = ["player_id,level,time_to_match_ms,presses,distinct_regions_touched"]
    for row in doc["per_player_level"]:
        lines.append(
            f"{row['player_id']},{row['level']},{row['time_to_match_ms']},"
            f"{row['presses']},{row['distinct_regions_touched']}"
        )
    return "\n".join(lines) + "\n"


def _trend_csv(doc: dict) -> str:
    lines = ["level,mean_presses"]
    for level, mean in enumerate(doc["mean_presses_per_level"], start=1):
        lines.append(f"{level},{mean}")
    lines.append(f"# slope={doc['slope']} ci=[{doc['ci_low']},{doc['ci_high']}] sessions={doc['sessions']}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    from ..telemetry.metrics import compute_session_metrics
    from ..telemetry.trend import exposure_trend

    args = build_parser().parse_args(argv)
    if bool(args.log) == bool(args.trend):
        print("error: pass exactly one of --log or --trend", file=sys.stderr)
        return 2
    try:
        if args.log:
            doc = compute_session_metrics(args.log).to_dict()
            sys.stdout.write(_metrics_csv(doc) if args.out == "csv" else json.dumps(doc, indent=2) + "\n")
            return 0
        paths = sorted(glob.glob(args.trend))
        metrics = [compute_session_metrics(path) for path in paths]
        report = exposure_trend(metrics, resamples=args.resamples, bootstrap_seed=args.bootstrap_seed)
        doc = report.to_dict()
        sys.stdout.write(_trend_csv(doc) if args.out == "csv" else json.dumps(doc, indent=2) + "\n")
        return 0
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    except PuzzlegramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
