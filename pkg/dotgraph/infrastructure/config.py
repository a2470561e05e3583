# dotgraph/infrastructure/config.py
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from dotgraph.domain.model.errors import InvalidParameterError


def _positive_int(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameterError(f"{name} must be an integer, got '{raw}'")
    if value < 1:
        raise InvalidParameterError(f"{name} must be positive, got {value}")
    return value


class Config:
    """
    Configuration class for the application.
    Loads configuration from environment variables with sensible defaults.
    """

    def __init__(self, vertex_cap: Optional[int] = None):
        """
        Initialize configuration from environment variables.

        Loads variables from .env file if present and sets default values
        for missing variables.

        Args:
            vertex_cap: Explicit cap taking precedence over DOTGRAPH_VERTEX_CAP
        """
        load_dotenv()

        # Graph construction
        self.VERTEX_CAP = _positive_int("DOTGRAPH_VERTEX_CAP", 20000)
        if vertex_cap is not None:
            if vertex_cap < 1:
                raise InvalidParameterError(f"vertex cap must be positive, got {vertex_cap}")
            self.VERTEX_CAP = vertex_cap
        self.BLOCK_SIZE = _positive_int("DOTGRAPH_BLOCK_SIZE", 512)

        # Sweeps
        self.SWEEP_WORKERS = _positive_int("DOTGRAPH_SWEEP_WORKERS", 1)

        # Output
        self.OUTPUT_DIR = os.getenv("DOTGRAPH_OUTPUT_DIR", os.path.join(os.getcwd(), "output"))

        # Application configuration
        self.DEBUG_MODE = os.getenv("DEBUG_MODE", "False").lower() == "true"
        self.LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
        self.API_PORT = int(os.getenv("API_PORT", "5000"))
        self.API_HOST = os.getenv("API_HOST", "0.0.0.0")

    def output_path(self, filename: str) -> str:
        """
        Resolve an output file name.

        Bare file names land in OUTPUT_DIR (created on demand); paths with a
        directory part are used as given.
        """
        if os.path.dirname(filename):
            return filename
        os.makedirs(self.OUTPUT_DIR, exist_ok=True)
        return os.path.join(self.OUTPUT_DIR, filename)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert configuration to a dictionary.

        Returns:
            Dictionary with all configuration values
        """
        return {
            "graph": {
                "vertex_cap": self.VERTEX_CAP,
                "block_size": self.BLOCK_SIZE,
            },
            "sweep": {
                "workers": self.SWEEP_WORKERS,
            },
            "storage": {
                "output_dir": self.OUTPUT_DIR,
            },
            "app": {
                "debug_mode": self.DEBUG_MODE,
                "log_level": self.LOG_LEVEL,
                "api_port": self.API_PORT,
                "api_host": self.API_HOST,
            },
        }
