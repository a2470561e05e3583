# dotgraph/infrastructure/api/flask_app.py
import logging
import os
from typing import Optional, Tuple

from flask import Flask, Response, jsonify, request
from flask_cors import CORS

from dotgraph import __version__
from dotgraph.domain.model.errors import InvalidParameterError, VertexCapExceededError
from dotgraph.domain.model.prediction import GraphKind
from dotgraph.domain.model.ring import RingRequest
from dotgraph.infrastructure.config import Config
from dotgraph.infrastructure.di.container import Container


class FlaskApiAdapter:
    """
    Adapter for the Flask web framework to expose graph construction and
    verification over HTTP.

    Domain errors are translated at this boundary: invalid parameters give
    400, an exceeded vertex cap gives 413, anything else 500.
    """

    def __init__(self, config: Config, container: Optional[Container] = None):
        """
        Initialize the Flask application with configuration and dependencies.

        Args:
            config: Application configuration
            container: Dependency container (built from the configuration by default)
        """
        self.config = config
        self.container = container or Container(config)
        self.logger = logging.getLogger(__name__)

        self.app = Flask(__name__)
        CORS(self.app, resources={r"/*": {"origins": "*"}})

        self._setup_routes()

    def _setup_routes(self) -> None:
        """Set up the API routes."""
        self.app.route("/")(self.health_check)
        self.app.route("/health")(self.health_check)

        self.app.route("/graphs", methods=["GET"])(self.get_graph)
        self.app.route("/verify", methods=["GET"])(self.verify)
        self.app.route("/reference", methods=["GET"])(self.get_reference_audit)

    def get_app(self) -> Flask:
        """
        Get the configured Flask application.

        Returns:
            Flask application instance
        """
        return self.app

    def run(self, **kwargs) -> None:
        """
        Run the Flask application.

        Args:
            **kwargs: Keyword arguments to pass to Flask's run method
        """
        self.app.run(**kwargs)

    # Request parsing

    @staticmethod
    def _graph_params() -> Tuple[RingRequest, GraphKind, int]:
        ring_text = request.args.get("ring")
        graph_text = request.args.get("graph")
        if not ring_text or not graph_text:
            raise InvalidParameterError("query parameters 'ring' and 'graph' are required")
        try:
            kind = GraphKind(graph_text.lower())
        except ValueError:
            choices = ", ".join(kind.value for kind in GraphKind)
            raise InvalidParameterError(f"unknown graph '{graph_text}', expected one of {choices}")
        arity_text = request.args.get("arity", "2")
        try:
            arity = int(arity_text)
        except ValueError:
            raise InvalidParameterError(f"arity must be an integer, got '{arity_text}'")
        return RingRequest.parse(ring_text), kind, arity

    def _error(self, error: Exception) -> Tuple[Response, int]:
        if isinstance(error, InvalidParameterError):
            return jsonify({"error": str(error)}), 400
        if isinstance(error, VertexCapExceededError):
            return jsonify({"error": str(error), "vertex_count": error.vertex_count, "cap": error.cap}), 413
        self.logger.error(f"Request {request.path} failed: {error}", exc_info=True)
        return jsonify({"error": str(error)}), 500

    # Route handlers

    def health_check(self) -> Response:
        """Health check endpoint."""
        return jsonify({
            "status": "healthy",
            "environment": {
                "DOTGRAPH_VERTEX_CAP": self.config.VERTEX_CAP,
                "DOTGRAPH_BLOCK_SIZE": self.config.BLOCK_SIZE,
                "DOTGRAPH_SWEEP_WORKERS": self.config.SWEEP_WORKERS,
                "DEBUG_MODE": self.config.DEBUG_MODE,
                "WORKING_DIRECTORY": os.getcwd(),
                "VERSION": __version__
            }
        })

    def get_graph(self):
        """Build a graph and return its decomposition, or its DOT text with format=dot."""
        try:
            ring, kind, arity = self._graph_params()
            as_dot = request.args.get("format", "json").lower() == "dot"
            graph_service = self.container.get_graph_service()
            result = graph_service.build_result(ring, kind, arity, include_dot=as_dot)
            if as_dot:
                return Response(result.dot, mimetype="text/vnd.graphviz")
            return jsonify(result.to_dict())
        except Exception as e:
            return self._error(e)

    def verify(self):
        """Verify every applicable prediction for one parameter set."""
        try:
            ring_request, kind, arity = self._graph_params()
            graph_service = self.container.get_graph_service()
            verification_service = self.container.get_verification_service()
            ring = graph_service.resolve_ring(ring_request)
            reports = verification_service.verify_all(ring, kind, arity)
            return jsonify({
                "ring": ring.label,
                "graph": kind.value,
                "arity": arity,
                "all_match": all(report.match for report in reports),
                "reports": [report.to_dict() for report in reports]
            })
        except Exception as e:
            return self._error(e)

    def get_reference_audit(self):
        """Recompute the reference decompositions."""
        try:
            entries = self.container.get_reference_audit_service().audit_all()
            return jsonify({
                "consistent": all(entry.consistent for entry in entries),
                "entries": [entry.to_dict() for entry in entries]
            })
        except Exception as e:
            return self._error(e)
