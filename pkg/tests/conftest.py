import time

import pytest

from prepush import SynthParams, generate

# One seeded million-visit workload shared by the calibration and trend
# tests; building it twice would double the slowest part of the suite.
CALIBRATION_PARAMS = SynthParams(
    n_users=5000,
    n_titles=5000,
    n_cells=1000,
    n_visits=1_000_000,
    seed=12345,
)

_build_seconds = {}


@pytest.fixture(scope="session")
def million_dataset():
    start = time.perf_counter()
    dataset = generate(CALIBRATION_PARAMS)
    _build_seconds["generate"] = time.perf_counter() - start
    return dataset


@pytest.fixture(scope="session")
def million_dataset_build_seconds(million_dataset):
    return _build_seconds["generate"]
