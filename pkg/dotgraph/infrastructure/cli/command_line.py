# dotgraph/infrastructure/cli/command_line.py
"""
Command-line front end.

Subcommands:

- ``build``: construct a graph, print its signature, optionally write DOT
- ``verify``: check every applicable prediction for one ring and graph
- ``sweep``: check the primary prediction over a parameter range, one JSON line each
- ``export``: write the DOT rendering of a graph
- ``audit``: recompute the reference decompositions
- ``serve``: start the HTTP API

Exit codes: 0 success, 1 mismatch, 2 invalid parameters, 3 vertex cap exceeded.
"""
import argparse
import copy
import json
import logging
import sys
from typing import List, Optional, Sequence, TextIO

from dotgraph import __version__
from dotgraph.application.dto.cli_config_dto import CliConfig
from dotgraph.domain.model.errors import DotGraphError, InvalidParameterError, VertexCapExceededError
from dotgraph.domain.model.prediction import GraphKind
from dotgraph.domain.model.ring import RingKind
from dotgraph.infrastructure.config import Config
from dotgraph.infrastructure.di.container import Container
from dotgraph.infrastructure.repository.jsonl_report_repository import encode_report

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_IO = 4

GRAPH_CHOICES = [kind.value for kind in GraphKind]


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vertex-cap", type=int, default=None,
                        help="largest vertex count a graph may have (overrides DOTGRAPH_VERTEX_CAP)")

    graph_args = argparse.ArgumentParser(add_help=False)
    graph_args.add_argument("--graph", choices=GRAPH_CHOICES, required=True, help="graph family")
    graph_args.add_argument("-k", "--arity", type=int, default=2, help="number of factors of R = A^k")

    parser = argparse.ArgumentParser(
        prog="dotgraph",
        description="Dot product graphs over Z_n x ... x Z_n and GF(p^d) x GF(p^d).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    build = subparsers.add_parser("build", parents=[common, graph_args], help="build a graph and print its signature")
    build.add_argument("--ring", required=True, help="zn:<n> or gf:<p>:<d>")
    build.add_argument("-o", "--output", help="write the DOT rendering to this file")

    verify = subparsers.add_parser("verify", parents=[common, graph_args], help="verify all applicable predictions")
    verify.add_argument("--ring", required=True, help="zn:<n> or gf:<p>:<d>")
    verify.add_argument("-o", "--output", help="also append the JSON-lines reports to this file")

    sweep = subparsers.add_parser("sweep", parents=[common, graph_args], help="verify over a parameter range")
    sweep.add_argument("--range", required=True, help="inclusive range lo..hi")
    sweep.add_argument("--family", choices=[kind.value for kind in RingKind], default=RingKind.MODULAR.value,
                       help="sweep n for zn, or prime powers q for gf")
    sweep.add_argument("--workers", type=int, default=None,
                       help="worker processes (overrides DOTGRAPH_SWEEP_WORKERS)")
    sweep.add_argument("-o", "--output", help="also append the JSON-lines reports to this file")

    export = subparsers.add_parser("export", parents=[common, graph_args], help="write a graph as DOT")
    export.add_argument("--ring", required=True, help="zn:<n> or gf:<p>:<d>")
    export.add_argument("-o", "--output", help="DOT file (stdout when omitted)")

    subparsers.add_parser("audit", parents=[common], help="recompute the reference decompositions")

    serve = subparsers.add_parser("serve", parents=[common], help="start the HTTP API")
    serve.add_argument("--host", default=None, help="bind address (overrides API_HOST)")
    serve.add_argument("--port", type=int, default=None, help="port (overrides API_PORT)")

    return parser


class CommandLineAdapter:
    """
    Adapter exposing the application services on the command line.

    Results go to stdout; logging and error messages go to stderr.
    """

    def __init__(self, config: Config, stdout: Optional[TextIO] = None):
        """
        Initialize the adapter.

        Args:
            config: Application configuration
            stdout: Stream for results (sys.stdout at call time by default)
        """
        self.config = config
        self._stdout = stdout
        self.logger = logging.getLogger(__name__)

    @property
    def out(self) -> TextIO:
        return self._stdout or sys.stdout

    def _emit(self, line: str) -> None:
        self.out.write(line + "\n")
        self.out.flush()

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Parse arguments and run one command.

        Args:
            argv: Arguments without the program name (sys.argv[1:] by default)

        Returns:
            Process exit code
        """
        args = build_parser().parse_args(argv)
        try:
            cfg = CliConfig.from_namespace(args)
            config = self.config
            if cfg.vertex_cap is not None:
                config = copy.copy(self.config)
                config.VERTEX_CAP = cfg.vertex_cap
            report_path = cfg.output if cfg.command in ("verify", "sweep") else None
            container = Container(config, report_path=report_path)
            handler = getattr(self, f"run_{cfg.command}")
            return handler(cfg, container)
        except VertexCapExceededError as e:
            self.logger.error(str(e))
            print(f"error: {e}", file=sys.stderr)
            return EXIT_CAP
        except InvalidParameterError as e:
            self.logger.error(str(e))
            print(f"error: {e}", file=sys.stderr)
            return EXIT_INVALID
        except OSError as e:
            self.logger.error(f"I/O failure: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_IO
        except DotGraphError as e:
            self.logger.error(f"{type(e).__name__}: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_MISMATCH

    # Commands

    def run_build(self, cfg: CliConfig, container: Container) -> int:
        graph_service = container.get_graph_service()
        ring = graph_service.resolve_ring(cfg.ring)
        graph = graph_service.build(ring, cfg.graph, cfg.arity)
        result = graph_service.describe(graph, ring, cfg.graph, cfg.arity)
        for line in result.summary_lines():
            self._emit(line)
        if cfg.output:
            path = container.config.output_path(cfg.output)
            with open(path, "w", encoding="utf-8") as f:
                graph_service.export(graph, f)
            self.logger.info(f"Wrote {graph.name} to {path}")
        return EXIT_OK

    def run_export(self, cfg: CliConfig, container: Container) -> int:
        graph_service = container.get_graph_service()
        graph = graph_service.build(cfg.ring, cfg.graph, cfg.arity)
        if cfg.output:
            path = container.config.output_path(cfg.output)
            with open(path, "w", encoding="utf-8") as f:
                graph_service.export(graph, f)
            self.logger.info(f"Wrote {graph.name} to {path}")
        else:
            graph_service.export(graph, self.out)
        return EXIT_OK

    def run_verify(self, cfg: CliConfig, container: Container) -> int:
        ring = container.get_graph_service().resolve_ring(cfg.ring)
        reports = container.get_verification_service().verify_all(ring, cfg.graph, cfg.arity)
        for report in reports:
            self._emit(encode_report(report))
        return EXIT_OK if all(report.match for report in reports) else EXIT_MISMATCH

    def run_sweep(self, cfg: CliConfig, container: Container) -> int:
        lo, hi = cfg.sweep_range
        workers = cfg.workers or container.config.SWEEP_WORKERS
        mismatches: List[str] = []
        count = 0
        for report in container.get_verification_service().sweep(
            cfg.graph, lo, hi, family=cfg.family, k=cfg.arity, workers=workers
        ):
            self._emit(encode_report(report))
            count += 1
            if not report.match:
                mismatches.append(report.summary())
        self.logger.info(f"Sweep finished: {count} reports, {len(mismatches)} mismatches")
        for summary in mismatches:
            print(f"mismatch: {summary}", file=sys.stderr)
        if count == 0:
            raise InvalidParameterError(f"no prediction applies to {cfg.graph.value} over {cfg.family.value} {lo}..{hi}")
        return EXIT_OK if not mismatches else EXIT_MISMATCH

    def run_audit(self, cfg: CliConfig, container: Container) -> int:
        entries = container.get_reference_audit_service().audit_all()
        for entry in entries:
            self._emit(json.dumps(entry.to_dict(), ensure_ascii=False))
        return EXIT_OK if all(entry.consistent for entry in entries) else EXIT_MISMATCH

    def run_serve(self, cfg: CliConfig, container: Container) -> int:
        from waitress import serve

        from dotgraph.infrastructure.api.flask_app import FlaskApiAdapter

        config = container.config
        host = cfg.host or config.API_HOST
        port = cfg.port or config.API_PORT
        adapter = FlaskApiAdapter(config, container)

        self.logger.info(f"Starting application in {'DEBUG' if config.DEBUG_MODE else 'PRODUCTION'} mode")
        if config.DEBUG_MODE:
            self.logger.info("Starting Flask development server...")
            adapter.run(host=host, port=port, debug=True)
        else:
            self.logger.info("Starting Waitress production server...")
            serve(adapter.get_app(), host=host, port=port, threads=6, url_scheme='http')
        return EXIT_OK
