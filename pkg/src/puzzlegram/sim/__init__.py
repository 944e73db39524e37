from .bots import Bot, BotStrategy, Observation, bot_decide
from .runner import SimReport, run_simulation, summarize

__all__ = [
    "Bot",
    "BotStrategy",
    "Observation",
    "SimReport",
    "bot_decide",
    "run_simulation",
    "summarize",
]
