import numpy as np
import pytest

from goshawk.baselines import BaselineConfig, abc_run, fa_run, firefly_step, random_search_run
from goshawk.campaign import run_campaign
from goshawk.core import SearchSpace

RUNNERS = [abc_run, fa_run, random_search_run]


def sphere(x):
    return float(np.sum(x * x))


def test_config_validation():
    with pytest.raises(ValueError):
        BaselineConfig(fa_alpha=0)
    with pytest.raises(ValueError):
        BaselineConfig(fa_gamma=-1)
    with pytest.raises(ValueError):
        BaselineConfig(abc_limit=0)
    assert BaselineConfig(n=30).limit_for(70) == 1050
    assert BaselineConfig(fa_gamma=0).fa_gamma == 0


@pytest.mark.parametrize("runner", [abc_run, fa_run])
def test_solves_small_sphere(runner):
    result = runner(BaselineConfig(n=30, t_max=200, seed=1), sphere, SearchSpace.uniform(-30, 30, 2))
    assert result.best_fitness < 1e-2


def test_random_search_small_sphere():
    result = random_search_run(BaselineConfig(n=30, t_max=200, seed=1), sphere, SearchSpace.uniform(-30, 30, 2))
    assert result.evaluations == 6000
    assert result.best_fitness < 1


def test_random_search_single_sample():
    space = SearchSpace.uniform(-1, 1, 3)
    result = random_search_run(BaselineConfig(n=1, t_max=1, seed=5), sphere, space)
    assert result.best_fitness == sphere(result.best_position)
    assert result.curve.tolist() == [result.best_fitness]


@pytest.mark.parametrize("runner", RUNNERS)
def test_curve_contract_and_determinism(runner):
    space = SearchSpace.uniform(-5, 5, 4)
    cfg = BaselineConfig(n=12, t_max=25, seed=8)
    a, b = runner(cfg, sphere, space), runner(cfg, sphere, space)
    assert (np.diff(a.curve) <= 0).all() and a.curve[-1] == a.best_fitness
    np.testing.assert_array_equal(a.curve, b.curve)
    np.testing.assert_array_equal(a.best_position, b.best_position)
    assert space.contains(a.best_position)


def test_firefly_step_attraction():
    step = firefly_step([0.0, 0.0], [1.0, 0.0], 1.0, 0.0, 0.1, np.array([1.0, 1.0]), np.array([0.5, 0.5]))
    np.testing.assert_allclose(step, [1.0, 0.0])


def test_firefly_step_large_gamma_is_pure_random_walk():
    xi, xj = np.array([0.0, 0.0]), np.array([3.0, 4.0])
    noise = np.array([0.9, 0.1])
    step = firefly_step(xi, xj, 1.0, 1e12, 0.2, np.array([10.0, 10.0]), noise)
    np.testing.assert_array_equal(step, xi + 0.2 * (noise - 0.5) * 10.0)


def test_ingo_beats_baselines_on_sphere():
    campaign = run_campaign(["INGO", "ABC", "FA", "RANDOM"], ["F1"], 5, 0)
    means = {a: np.mean(campaign.values(a, "F1")) for a in ("INGO", "ABC", "FA", "RANDOM")}
    assert all(means["INGO"] < means[a] for a in ("ABC", "FA", "RANDOM")), means
