import os

import pytest

from comkit.comkit_configuration import get_config

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(autouse=True)
def fresh_config():
    # the configuration is a process-wide singleton; start every test from the environment
    return get_config(refresh=True)


@pytest.fixture
def data_path():
    def path(name):
        return os.path.join(DATA_DIR, name)
    return path
