# dotgraph/application/dto/cli_config_dto.py
from argparse import Namespace
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from dotgraph.domain.model.errors import InvalidParameterError
from dotgraph.domain.model.prediction import GraphKind
from dotgraph.domain.model.ring import RingKind, RingRequest

COMMANDS = ("build", "verify", "sweep", "export", "audit", "serve")


def parse_range(text: str) -> Tuple[int, int]:
    """
    Parse an inclusive range written "lo..hi".

    Raises:
        InvalidParameterError: If the text is malformed or the range is empty
    """
    lo_text, sep, hi_text = text.partition("..")
    try:
        if not sep:
            raise ValueError(text)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise InvalidParameterError(f"malformed range '{text}', expected lo..hi")
    if lo > hi:
        raise InvalidParameterError(f"empty range {lo}..{hi}")
    return lo, hi


@dataclass
class CliConfig:
    """
    Data Transfer Object for one command-line invocation.
    """
    command: str
    ring: Optional[RingRequest] = None
    graph: Optional[GraphKind] = None
    arity: int = 2
    output: Optional[str] = None
    vertex_cap: Optional[int] = None
    sweep_range: Optional[Tuple[int, int]] = None
    family: RingKind = RingKind.MODULAR
    workers: Optional[int] = None
    host: Optional[str] = None
    port: Optional[int] = None

    @classmethod
    def from_namespace(cls, args: Namespace) -> 'CliConfig':
        """Create from parsed arguments, parsing ring, graph and range texts."""
        ring_text = getattr(args, "ring", None)
        graph_text = getattr(args, "graph", None)
        range_text = getattr(args, "range", None)
        family_text = getattr(args, "family", None)
        try:
            graph = GraphKind(graph_text) if graph_text else None
            family = RingKind(family_text) if family_text else RingKind.MODULAR
        except ValueError as e:
            raise InvalidParameterError(str(e))
        config = cls(
            command=args.command,
            ring=RingRequest.parse(ring_text) if ring_text else None,
            graph=graph,
            arity=getattr(args, "arity", 2),
            output=getattr(args, "output", None),
            vertex_cap=getattr(args, "vertex_cap", None),
            sweep_range=parse_range(range_text) if range_text else None,
            family=family,
            workers=getattr(args, "workers", None),
            host=getattr(args, "host", None),
            port=getattr(args, "port", None),
        )
        config.validate()
        return config

    def validate(self) -> None:
        """
        Check the cross-field rules of a command.

        Raises:
            InvalidParameterError: On a missing or inconsistent parameter
        """
        if self.command not in COMMANDS:
            raise InvalidParameterError(f"unknown command '{self.command}'")
        if self.arity < 1:
            raise InvalidParameterError(f"arity k must be >= 1, got {self.arity}")
        if self.vertex_cap is not None and self.vertex_cap < 1:
            raise InvalidParameterError(f"vertex cap must be positive, got {self.vertex_cap}")
        if self.workers is not None and self.workers < 1:
            raise InvalidParameterError(f"workers must be positive, got {self.workers}")

        if self.command in ("build", "verify", "export"):
            if self.ring is None or self.graph is None:
                raise InvalidParameterError(f"{self.command} needs --ring and --graph")
        if self.command == "sweep":
            if self.graph is None or self.sweep_range is None:
                raise InvalidParameterError("sweep needs --graph and --range")

        if self.graph is not None:
            if self.graph.is_quotient and self.arity != 2:
                raise InvalidParameterError(f"{self.graph.value} is defined for k = 2 only")
            ring_kind = self.ring.kind if self.ring is not None else self.family
            if self.graph.needs_modular_ring and ring_kind is not RingKind.MODULAR:
                raise InvalidParameterError(f"{self.graph.value} needs a ring zn:<n>")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "ring": str(self.ring) if self.ring else None,
            "graph": self.graph.value if self.graph else None,
            "arity": self.arity,
            "output": self.output,
            "vertex_cap": self.vertex_cap,
            "range": list(self.sweep_range) if self.sweep_range else None,
            "family": self.family.value,
            "workers": self.workers,
        }
