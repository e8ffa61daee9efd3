import os

import pytest

from shared.util_config import ENV_PREFIX, reset_config


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """Every test starts from built-in defaults."""
    for name in list(os.environ):
        if name.startswith(ENV_PREFIX):
            monkeypatch.delenv(name)
    reset_config()
    yield
    reset_config()
