"""Shared pytest fixtures for wqsdc tests."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from wqsdc.kernel import make_rng
from wqsdc.protocol import RunConfig, SecretState, WStateParams


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so every test draws the same numbers."""
    return make_rng(1234)


@pytest.fixture
def secret() -> SecretState:
    """Generic real secret 0.6|0> + 0.8|1>."""
    return SecretState(0.6, 0.8)


@pytest.fixture
def balanced() -> WStateParams:
    return WStateParams.from_squared(1 / 3, 1 / 3, 1 / 3)


@pytest.fixture
def quarter_w() -> WStateParams:
    """Shared state with |alpha|^2 = |gamma|^2 = 1/4, so P_s = 1/4."""
    return WStateParams.from_squared(0.25, 0.5, 0.25)


@pytest.fixture
def run_config(secret: SecretState, quarter_w: WStateParams) -> RunConfig:
    """Generous retry budget: exhausting it has probability 0.75^201."""
    return RunConfig(secret, quarter_w, seed=7, max_retries=200)


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    path = tmp_path / "out"
    path.mkdir()
    return path
