import os

import pytest

from dotgraph.domain.model.errors import InvalidParameterError
from dotgraph.infrastructure.config import Config


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("DOTGRAPH_VERTEX_CAP", "DOTGRAPH_BLOCK_SIZE", "DOTGRAPH_SWEEP_WORKERS", "DOTGRAPH_OUTPUT_DIR"):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


def test_defaults(clean_env):
    config = Config()

    assert config.VERTEX_CAP == 20000
    assert config.BLOCK_SIZE == 512
    assert config.SWEEP_WORKERS == 1
    assert config.to_dict()["graph"] == {"vertex_cap": 20000, "block_size": 512}


def test_environment_overrides(clean_env):
    clean_env.setenv("DOTGRAPH_VERTEX_CAP", "500")
    clean_env.setenv("DOTGRAPH_SWEEP_WORKERS", "4")

    config = Config()

    assert config.VERTEX_CAP == 500
    assert config.SWEEP_WORKERS == 4


def test_explicit_cap_wins(clean_env):
    clean_env.setenv("DOTGRAPH_VERTEX_CAP", "500")

    assert Config(vertex_cap=64).VERTEX_CAP == 64
    with pytest.raises(InvalidParameterError):
        Config(vertex_cap=0)


@pytest.mark.parametrize("value", ["0", "-3", "many"])
def test_invalid_environment(clean_env, value):
    clean_env.setenv("DOTGRAPH_BLOCK_SIZE", value)

    with pytest.raises(InvalidParameterError):
        Config()


def test_output_path(clean_env, temp_dir):
    clean_env.setenv("DOTGRAPH_OUTPUT_DIR", os.path.join(temp_dir, "out"))
    config = Config()

    bare = config.output_path("gf4.dot")
    explicit = config.output_path(os.path.join(temp_dir, "elsewhere.dot"))

    assert bare == os.path.join(temp_dir, "out", "gf4.dot")
    assert os.path.isdir(os.path.join(temp_dir, "out"))
    assert explicit == os.path.join(temp_dir, "elsewhere.dot")
