"""
Common pytest fixtures and configuration for tests.
"""
import shutil
import tempfile
from typing import Generator

import pytest

from dotgraph.application.service.graph_service import GraphService
from dotgraph.application.service.verification_service import VerificationService
from dotgraph.domain.service.dot_graph_builder import DotGraphBuilder
from dotgraph.infrastructure.config import Config
from dotgraph.infrastructure.di.container import Container
from dotgraph.infrastructure.service.dot_exporter import DotExporter


@pytest.fixture
def temp_dir() -> Generator[str, None, None]:
    """Fixture providing a temporary directory for tests."""
    dir_path = tempfile.mkdtemp()
    try:
        yield dir_path
    finally:
        shutil.rmtree(dir_path)


@pytest.fixture
def mock_config(monkeypatch) -> Generator[Config, None, None]:
    """Fixture providing a configuration with default limits and a temporary output directory."""
    for name in ("DOTGRAPH_VERTEX_CAP", "DOTGRAPH_BLOCK_SIZE", "DOTGRAPH_SWEEP_WORKERS", "DOTGRAPH_OUTPUT_DIR"):
        monkeypatch.delenv(name, raising=False)
    config = Config()
    config.DEBUG_MODE = True
    config.OUTPUT_DIR = tempfile.mkdtemp()

    try:
        yield config
    finally:
        shutil.rmtree(config.OUTPUT_DIR, ignore_errors=True)


@pytest.fixture
def test_container(mock_config: Config) -> Container:
    """Fixture providing a Container with mock configuration."""
    return Container(mock_config)


@pytest.fixture
def builder() -> DotGraphBuilder:
    """Fixture providing a graph builder with the default cap and a small block size."""
    return DotGraphBuilder(vertex_cap=20000, block_size=64)


@pytest.fixture
def graph_service(builder: DotGraphBuilder) -> GraphService:
    return GraphService(builder=builder, exporter=DotExporter())


@pytest.fixture
def verification_service(graph_service: GraphService) -> VerificationService:
    return VerificationService(graph_service=graph_service)
