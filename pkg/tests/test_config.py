import logging

from shared.util_config import get_config, reset_config
from shared.util_responses import json_response, render_fitness
from shared.util_rng import derive_seed, make_rng
from solver.utility.util_classes import SolverParams


def test_defaults():
    config = get_config()
    assert (config.max_gens, config.pop_size, config.beta) == (60, 20, 0.2)
    assert (config.max_iters, config.history_len, config.time_limit) == (5000, 5, 7200.0)
    assert config.jobs == 1
    assert config.results_db is None
    assert config.log_level == "WARNING"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("RANKAGG_MAX_GENS", "15")
    monkeypatch.setenv("RANKAGG_BETA", "0.3")
    monkeypatch.setenv("RANKAGG_RESULTS_DB", "sqlite:///bench.db")
    monkeypatch.setenv("RANKAGG_LOG_LEVEL", "debug")
    reset_config()
    config = get_config()
    assert config.max_gens == 15
    assert config.beta == 0.3
    assert config.results_db == "sqlite:///bench.db"
    assert config.log_level == "DEBUG"

    params = SolverParams.from_config()
    assert (params.max_gens, params.beta) == (15, 0.3)


def test_config_is_cached(monkeypatch):
    first = get_config()
    monkeypatch.setenv("RANKAGG_POP_SIZE", "4")
    assert get_config() is first
    reset_config()
    assert get_config().pop_size == 4


def test_invalid_values_fall_back(monkeypatch, caplog):
    monkeypatch.setenv("RANKAGG_POP_SIZE", "many")
    monkeypatch.setenv("RANKAGG_JOBS", "0")
    reset_config()
    with caplog.at_level(logging.WARNING):
        config = get_config()
    assert config.pop_size == 20
    assert config.jobs == 1
    assert "RANKAGG_POP_SIZE" in caplog.text
    assert "RANKAGG_JOBS" in caplog.text


def test_render_fitness():
    assert render_fitness(3, 2) == "1.500"
    assert render_fitness(2, 3) == "0.667"
    assert render_fitness(0, 7) == "0.000"
    # exact halves round to even
    assert render_fitness(1, 2000) == "0.000"
    assert render_fitness(3, 2000) == "0.002"


def test_json_response(capsys):
    text = json_response({"fitness_sum": 3, "fitness": 1.5})
    assert capsys.readouterr().out == text + "\n"
    assert text == '{"fitness_sum": 3, "fitness": 1.5}'


def test_derive_seed_is_stable():
    assert derive_seed(0, "MM50n0.200_01.txt", "her", 1) == derive_seed(0, "MM50n0.200_01.txt", "her", 1)
    assert derive_seed(0, "a", 1) != derive_seed(0, "a", 2)
    assert 0 <= derive_seed("x") < 2**63


def test_make_rng_is_reproducible():
    assert make_rng(5).random(3).tolist() == make_rng(5).random(3).tolist()
