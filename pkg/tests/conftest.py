"""Shared fixtures."""

from __future__ import annotations

import random

import pytest


@pytest.fixture
def small_order() -> int:
    return 20


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20)
