"""puzzlegram-sim: play full games headlessly with scripted bots.

    puzzlegram-sim --bots memory,memory,memory --trials 1000 --seed 7 \
        --out report.json [--logs-dir logs/] [--csv report.csv] [--recall 0.5]

--bots takes three comma-separated strategies (random, memory, noisy);
--recall sets the noisy bots' recall probability.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import PuzzlegramError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="puzzlegram-sim", description="Puzzlegram bot simulation")
    parser.add_argument("--bots", required=True, help="three strategies, e.g. memory,memory,memory")
    parser.add_argument("--trials", type=int, required=True)
    parser.add_argument("--seed", type=int, required=True, help="master seed")
    parser.add_argument("--out", required=True, help="JSON report path ('-' for stdout)")
    parser.add_argument("--csv", default=None, help="also write the per-level table as CSV")
    parser.add_argument("--logs-dir", default=None, help="write one telemetry log per trial")
    parser.add_argument("--recall", type=float, default=0.5, help="recall probability for noisy bots")
    parser.add_argument("--muted", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    from ..sim.bots import BotStrategy
    from ..sim.runner import run_simulation, summarize

    args = build_parser().parse_args(argv)
    kinds = [k.strip() for k in args.bots.split(",")]
    try:
        strategies = [BotStrategy(kind=k, recall_probability=args.recall) for k in kinds]
        logs = run_simulation(strategies, args.trials, args.seed, logs_dir=args.logs_dir, muted=args.muted)
        report = summarize(logs, strategies)
    except PuzzlegramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out == "-":
        sys.stdout.write(report.to_json())
    else:
        Path(args.out).write_text(report.to_json(), encoding="utf-8")
        print(f"wrote {args.out}: {args.trials} trials, completion rate {report.completion_rate}")
    if args.csv:
        Path(args.csv).write_text(report.to_csv(), encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
