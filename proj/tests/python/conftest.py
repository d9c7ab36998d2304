import os

import pytest

import zosc


@pytest.fixture(scope="session")
def zeros_path():
    path = os.environ.get("ZOSC_ZEROS_FILE")
    if not path or not os.path.exists(path):
        pytest.skip("ZOSC_ZEROS_FILE not set")
    return path


@pytest.fixture(scope="session")
def zeros(zeros_path):
    return zosc.load_zeros(zeros_path)


@pytest.fixture(scope="session")
def tables():
    return zosc.build_tables(100_000, True)
