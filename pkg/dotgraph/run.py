"""
Entry point for the application.
Loads configuration, sets up logging and dispatches the command line.
"""

import logging
import os
import sys
from typing import Optional, Sequence

# Add the root directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from dotgraph.domain.model.errors import InvalidParameterError
from dotgraph.infrastructure.cli.command_line import EXIT_INVALID, CommandLineAdapter
from dotgraph.infrastructure.config import Config


def setup_logging(config: Config) -> logging.Logger:
    """
    Set up application logging based on configuration.

    Log records go to stderr so that stdout carries only results.

    Args:
        config: Application configuration

    Returns:
        Logger instance
    """
    log_level = getattr(logging, config.LOG_LEVEL.upper(), logging.INFO)

    logger = logging.getLogger('dotgraph')
    logger.setLevel(log_level)

    if not logger.handlers:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(log_level)
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    return logger


def create_app():
    """
    Create and configure the HTTP application.

    Returns:
        Flask application instance
    """
    from dotgraph.infrastructure.api.flask_app import FlaskApiAdapter

    config = Config()
    setup_logging(config)
    adapter = FlaskApiAdapter(config)
    return adapter.get_app()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for the application.

    Args:
        argv: Command-line arguments without the program name

    Returns:
        Process exit code
    """
    try:
        config = Config()
    except InvalidParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID

    setup_logging(config)
    return CommandLineAdapter(config).run(argv)


if __name__ == "__main__":
    sys.exit(main())
