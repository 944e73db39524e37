"""Bot strategies and the Monte Carlo runner."""

import pytest

from puzzlegram.core.rng import SplitMix64
from puzzlegram.errors import DomainError, SampleSizeError
from puzzlegram.sim.bots import Bot, BotStrategy, Observation, bot_decide
from puzzlegram.sim.runner import play_one_game, run_simulation, summarize


def fresh_obs(reference=0, revealed=None, tried=()):
    return Observation(
        reference_color=reference,
        revealed=dict(revealed or {}),
        tried_this_level=frozenset(tried),
    )


def strategies(*kinds, recall=1.0):
    return [BotStrategy(k, recall) if k == "noisy" else BotStrategy(k) for k in kinds]


def test_strategy_validation():
    with pytest.raises(DomainError):
        BotStrategy("psychic")
    with pytest.raises(DomainError):
        BotStrategy("noisy", recall_probability=1.5)
    with pytest.raises(DomainError):
        BotStrategy("noisy", recall_probability=-0.1)
    assert BotStrategy("noisy", 0.35).recall_probability == 0.35


def test_random_bot_never_repeats_within_a_level():
    bot = Bot(BotStrategy("random"), rng_seed=5)
    tried = set()
    for _ in range(16):
        choice = bot_decide(bot, fresh_obs(tried=tried))
        assert choice not in tried
        tried.add(choice)
    assert tried == set(range(16))


def test_memory_bot_presses_the_known_region():
    bot = Bot(BotStrategy("memory"), rng_seed=5)
    obs = fresh_obs(reference=9, revealed={3: 1, 12: 9, 7: 4})
    assert bot_decide(bot, obs) == 12


def test_memory_bot_explores_only_unseen_regions():
    bot = Bot(BotStrategy("memory"), rng_seed=5)
    revealed = {r: r for r in range(12)}  # reference 15 not among them
    for _ in range(50):
        choice = bot_decide(bot, fresh_obs(reference=15, revealed=revealed))
        assert choice in {12, 13, 14, 15}


def test_same_seed_same_decisions():
    a = Bot(BotStrategy("random"), rng_seed=77)
    b = Bot(BotStrategy("random"), rng_seed=77)
    tried_a, tried_b = set(), set()
    for _ in range(10):
        ca = bot_decide(a, fresh_obs(tried=tried_a))
        cb = bot_decide(b, fresh_obs(tried=tried_b))
        assert ca == cb
        tried_a.add(ca)
        tried_b.add(cb)


def test_noisy_with_full_recall_equals_memory():
    seeds = [101, 102, 103]
    mem = play_one_game(42, strategies("memory", "memory", "memory"), seeds, "m")
    noisy = play_one_game(42, strategies("noisy", "noisy", "noisy", recall=1.0), seeds, "m")
    assert noisy == mem


def test_noisy_with_zero_recall_equals_random():
    seeds = [101, 102, 103]
    rnd = play_one_game(42, strategies("random", "random", "random"), seeds, "r")
    noisy = play_one_game(42, strategies("noisy", "noisy", "noisy", recall=0.0), seeds, "r")
    assert noisy == rnd


def test_partial_recall_sits_between_the_extremes():
    kinds = [("random", 0.0), ("noisy", 0.5), ("memory", 1.0)]
    means = {}
    for kind, recall in kinds:
        st = [BotStrategy(kind, recall)] * 3
        logs = run_simulation(st, trials=120, master_seed=5)
        report = summarize(logs, st)
        late = report.per_strategy[kind]["mean_presses_per_level"][12:]
        means[kind] = sum(late) / len(late)
    assert means["memory"] < means["noisy"] < means["random"]


def test_every_game_completes_with_monotone_ticks():
    logs = run_simulation(strategies("random", "memory", "noisy"), trials=25, master_seed=9)
    for records in logs:
        kinds = [r.event for r in records]
        assert kinds[-1] == "complete"
        assert kinds.count("level_advance") == 16
        ticks = [r.tick for r in records]
        assert ticks == sorted(ticks)
        for r in records:
            if r.event == "press":
                assert r.ts_ms == r.tick  # logical time in the logs


def test_first_exploration_press_is_uniform():
    # First decision on a fresh level is a single modulo-16 draw; a chi-square
    # over 4000 independently seeded bots must look uniform (df=15).
    counts = [0] * 16
    for seed in range(4000):
        bot = Bot(BotStrategy("random"), rng_seed=seed)
        counts[bot_decide(bot, fresh_obs())] += 1
    expected = 4000 / 16
    chi2 = sum((c - expected) ** 2 / expected for c in counts)
    assert chi2 < 37.70  # 99.9th percentile of chi-square with 15 dof


def test_memory_cuts_late_level_presses():
    mem = strategies("memory", "memory", "memory")
    rnd = strategies("random", "random", "random")
    mem_report = summarize(run_simulation(mem, 150, master_seed=1), mem)
    rnd_report = summarize(run_simulation(rnd, 150, master_seed=1), rnd)
    mem_levels = mem_report.per_strategy["memory"]["mean_presses_per_level"]
    rnd_levels = rnd_report.per_strategy["random"]["mean_presses_per_level"]
    assert mem_report.completion_rate == 1.0
    assert rnd_report.completion_rate == 1.0
    early = sum(mem_levels[:4]) / 4
    late = sum(mem_levels[12:]) / 4
    assert late < early * 0.5  # effort collapses once the palette is memorized
    assert late < sum(rnd_levels[12:]) / 4


def test_simulation_is_reproducible(tmp_path):
    st = strategies("memory", "random", "noisy")
    a = run_simulation(st, trials=10, master_seed=2024, logs_dir=tmp_path / "a")
    b = run_simulation(st, trials=10, master_seed=2024, logs_dir=tmp_path / "b")
    assert a == b
    for i in range(10):
        name = f"trial-{i:05d}.jsonl"
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    c = run_simulation(st, trials=10, master_seed=2025)
    assert a != c


def test_trial_seeds_are_drawn_in_document_order():
    st = strategies("memory", "memory", "memory")
    logs = run_simulation(st, trials=2, master_seed=31337)
    master = SplitMix64(31337)
    for trial in range(2):
        game_seed = master.next_u64()
        bot_seeds = [master.next_u64() for _ in range(3)]
        direct = play_one_game(game_seed, st, bot_seeds, f"trial-{trial:05d}")
        assert direct == logs[trial]


def test_summarize_shapes_and_validation():
    st = strategies("memory", "memory", "memory")
    logs = run_simulation(st, trials=5, master_seed=0)
    report = summarize(logs, st)
    assert report.trials == 5
    assert set(report.per_strategy) == {"memory"}
    for key in ("mean_presses_per_level", "std_presses_per_level"):
        assert len(report.per_strategy["memory"][key]) == 16
    csv = report.to_csv()
    assert csv.splitlines()[0] == "strategy,level,mean_presses,std_presses"
    assert len(csv.splitlines()) == 1 + 16
    with pytest.raises(SampleSizeError):
        summarize([], st)
    with pytest.raises(SampleSizeError):
        run_simulation(st[:2], trials=1, master_seed=0)
    with pytest.raises(SampleSizeError):
        run_simulation(st, trials=0, master_seed=0)
