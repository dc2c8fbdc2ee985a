import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goshawk.benchmarks import FUNCTION_IDS, SPECS, benchmark_spec, evaluate_benchmark, make_objective, penalty
from goshawk.campaign import aggregate_stats, run_campaign
from goshawk.core import make_rng

EXACT = [fid for fid in FUNCTION_IDS if fid not in ("F7", "F8")]


def test_table_metadata():
    assert len(SPECS) == 15
    for fid in [f"F{i}" for i in range(1, 14)]:
        assert benchmark_spec(fid).dim == 30
    assert (benchmark_spec("F5").low, benchmark_spec("F5").high) == (-30, 30)
    s14, s15 = benchmark_spec("F14"), benchmark_spec("F15")
    assert (s14.dim, s14.low, s14.high) == (2, -65, 65)
    assert (s15.dim, s15.low, s15.high) == (4, -5, 5)
    assert benchmark_spec(11) is benchmark_spec("f11")


def test_unknown_id():
    with pytest.raises(ValueError):
        benchmark_spec("F16")
    with pytest.raises(ValueError):
        evaluate_benchmark("F0", np.zeros(30))


def test_wrong_dimension():
    with pytest.raises(ValueError):
        evaluate_benchmark("F1", np.zeros(3))


def test_point_values():
    assert evaluate_benchmark("F1", np.zeros(30)) == 0
    assert evaluate_benchmark("F1", np.ones(30)) == 30
    assert evaluate_benchmark("F9", np.zeros(30)) == 0
    assert abs(evaluate_benchmark("F10", np.zeros(30))) <= 1e-15
    assert evaluate_benchmark("F8", np.full(30, 420.9687)) == pytest.approx(-12569.487, abs=1e-2)


def _direct(fid, x):
    """Loop transcriptions of the formulas, independent of the vectorized code."""
    n = len(x)
    if fid == "F3":
        return sum(sum(x[: i + 1]) ** 2 for i in range(n))
    if fid == "F5":
        return sum(100 * (x[i + 1] - x[i] ** 2) ** 2 + (x[i] - 1) ** 2 for i in range(n - 1))
    if fid == "F11":
        prod = 1.0
        for i in range(n):
            prod *= math.cos(x[i] / math.sqrt(i + 1))
        return sum(v * v for v in x) / 4000 - prod + 1
    if fid == "F12":
        y = [1 + (v + 1) / 4 for v in x]
        s = 10 * math.sin(math.pi * y[0]) ** 2 + (y[-1] - 1) ** 2
        s += sum((y[i] - 1) ** 2 * (1 + 10 * math.sin(math.pi * y[i + 1]) ** 2) for i in range(n - 1))
        u = sum(100 * (v - 10) ** 4 if v > 10 else 100 * (-v - 10) ** 4 if v < -10 else 0 for v in x)
        return math.pi / n * s + u
    if fid == "F13":
        s = math.sin(3 * math.pi * x[0]) ** 2
        s += sum((x[i] - 1) ** 2 * (1 + math.sin(3 * math.pi * x[i + 1]) ** 2) for i in range(n - 1))
        s += (x[-1] - 1) ** 2 * (1 + math.sin(2 * math.pi * x[-1]) ** 2)
        u = sum(100 * (v - 5) ** 4 if v > 5 else 100 * (-v - 5) ** 4 if v < -5 else 0 for v in x)
        return 0.1 * s + u
    if fid == "F14":
        grid = [-32, -16, 0, 16, 32]
        total = 0.0
        for j in range(25):
            a1, a2 = grid[j % 5], grid[j // 5]
            total += 1 / (j + 1 + (x[0] - a1) ** 6 + (x[1] - a2) ** 6)
        return 1 / (1 / 500 + total)
    raise KeyError(fid)


@pytest.mark.parametrize("fid", ["F3", "F5", "F11", "F12", "F13", "F14"])
def test_formulas_match_loop_transcription(fid):
    spec = benchmark_spec(fid)
    rng = make_rng(hash(fid) % 1000)
    for _ in range(20):
        x = spec.low + rng.random(spec.dim) * (spec.high - spec.low)
        assert evaluate_benchmark(fid, x) == pytest.approx(_direct(fid, list(x)), rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("fid", EXACT)
def test_known_optimum(fid):
    spec = benchmark_spec(fid)
    assert abs(evaluate_benchmark(fid, spec.optimizer_array()) - spec.known_optimum_value) <= 1e-12


def test_literature_optima_for_tabulated_functions():
    assert evaluate_benchmark("F14", benchmark_spec("F14").optimizer_array()) == pytest.approx(0.998003837794449, abs=1e-12)
    assert evaluate_benchmark("F15", benchmark_spec("F15").optimizer_array()) == pytest.approx(3.0748598e-4, abs=1e-10)


def test_f7_noise_is_additive_and_bounded():
    x = np.full(30, 0.3)
    base = sum((i + 1) * 0.3**4 for i in range(30))
    rng = make_rng(0)
    values = [evaluate_benchmark("F7", x, rng) for _ in range(200)]
    assert all(0 <= v - base < 1 for v in values)
    assert len(set(values)) > 1
    obj = make_objective("F7", make_rng(1))
    assert obj(x) != obj(x)


@settings(max_examples=50)
@given(st.sampled_from(["F1", "F9", "F10", "F11"]), st.integers(0, 10_000))
def test_even_functions(fid, seed):
    spec = benchmark_spec(fid)
    x = spec.low + make_rng(seed).random(spec.dim) * (spec.high - spec.low)
    assert evaluate_benchmark(fid, x) == pytest.approx(evaluate_benchmark(fid, -x), rel=1e-12, abs=1e-12)


@given(st.floats(-5, 5), st.floats(5.0, 20.0))
def test_penalty_zero_inside(x, a):
    assert penalty(x, a, 100, 4) == 0
    assert penalty(a + 1, a, 100, 4) == pytest.approx(100)
    assert penalty(-a - 2, a, 100, 4) == pytest.approx(1600)


def test_aggregate_stats():
    s = aggregate_stats([5])
    assert (s.best, s.worst, s.mean, s.std, s.runs) == (5, 5, 5, 0, 1)
    assert aggregate_stats([0, 0, 0]).as_dict() == {"best": 0, "worst": 0, "mean": 0, "std": 0, "runs": 3}
    s = aggregate_stats([1, 2, 3])
    assert (s.mean, s.std) == (2, 1.0)
    s = aggregate_stats([0.9, 0.8], maximize=True)
    assert (s.best, s.worst) == (0.9, 0.8)
    with pytest.raises(ValueError):
        aggregate_stats([])


@given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=40))
def test_aggregate_stats_invariants(values):
    s = aggregate_stats(values)
    assert s.best <= s.mean <= s.worst and s.std >= 0
    if len(values) > 1:
        assert s.std == pytest.approx(np.std(values, ddof=1), rel=1e-9, abs=1e-9)


def test_campaign_singleton():
    result = run_campaign(["NGO"], ["F15"], 1, base_seed=3, n=10, t_max=5)
    (stats,) = result.stats().values()
    assert stats.best == stats.worst == stats.mean and stats.std == 0 and stats.runs == 1
    assert result.records[0].seed == 3


def test_campaign_seeds_and_shape():
    result = run_campaign(["NGO", "ABC"], ["F1", "F14"], 2, base_seed=10, n=6, t_max=4)
    assert len(result.records) == 8
    assert {r.seed for r in result.records} == {10, 11}
    assert set(result.stats()) == {("NGO", "F1"), ("NGO", "F14"), ("ABC", "F1"), ("ABC", "F14")}
    with pytest.raises(ValueError):
        run_campaign(["NGO"], ["F1"], 0)
