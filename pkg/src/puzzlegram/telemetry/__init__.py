from .events import EventRecord, JsonlEventLog, SessionRecorder, parse_log_lines, read_log
from .metrics import LevelStats, SessionMetrics, compute_session_metrics
from .replay import replay_log
from .trend import TrendReport, exposure_trend

__all__ = [
    "EventRecord",
    "JsonlEventLog",
    "LevelStats",
    "SessionMetrics",
    "SessionRecorder",
    "TrendReport",
    "compute_session_metrics",
    "exposure_trend",
    "parse_log_lines",
    "read_log",
    "replay_log",
]
