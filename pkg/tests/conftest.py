import numpy as np
import pytest

from angledev.geometry import Configuration


def random_config(rng: np.random.Generator, n: int, box: float = 100.0) -> Configuration:
    return Configuration(rng.uniform(0.0, box, size=(n, 2)))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20250810)
