from __future__ import annotations

import pytest

from quintic_theta.config import DEFAULT_ORDER, ORDER_ENV_VAR, RunConfig, default_order, env_order
from quintic_theta.errors import ConfigError


def test_default_order(monkeypatch):
    monkeypatch.delenv(ORDER_ENV_VAR, raising=False)
    assert default_order() == DEFAULT_ORDER
    assert env_order() is None
    assert RunConfig().requested_order is None


def test_environment_override(monkeypatch):
    monkeypatch.setenv(ORDER_ENV_VAR, "40")
    assert default_order() == 40
    assert RunConfig().effective_order == 40
    assert RunConfig(order=12).effective_order == 12


@pytest.mark.parametrize("raw", ["abc", "0", "-3"])
def test_bad_environment_value(monkeypatch, raw):
    monkeypatch.setenv(ORDER_ENV_VAR, raw)
    with pytest.raises(ConfigError):
        default_order()


@pytest.mark.parametrize(
    "kwargs", [{"order": 0}, {"output_format": "yaml"}, {"jobs": 0}]
)
def test_run_config_validation(kwargs):
    with pytest.raises(ConfigError):
        RunConfig(**kwargs)
