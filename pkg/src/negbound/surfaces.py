"""Base surface models: the projective plane and the Hirzebruch surfaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParseError


@dataclass(frozen=True)
class ProjectivePlane:
    """The projective plane, with Picard group generated by a line."""

    def __str__(self) -> str:
        return "p2"


@dataclass(frozen=True)
class Hirzebruch:
    """The ruled surface of invariant ``delta``, generated by fiber and section.

    The section class M has M^2 = delta; the special section M0 = M - delta*F
    has M0^2 = -delta.
    """

    delta: int

    def __post_init__(self) -> None:
        if not isinstance(self.delta, int) or self.delta < 0:
            raise ValueError(f"delta must be a nonnegative integer, got {self.delta!r}")

    def __str__(self) -> str:
        return f"f {self.delta}"


SurfaceModel = Union[ProjectivePlane, Hirzebruch]


def is_plane(surface: SurfaceModel) -> bool:
    return isinstance(surface, ProjectivePlane)


def parse_surface(text: str, *, line: int | None = None,
                  source: str | None = None) -> SurfaceModel:
    """Parse a surface spec: ``p2`` or ``f <delta>``."""
    tokens = text.split()
    if tokens and tokens[0].lower() == "surface":
        tokens = tokens[1:]
    if len(tokens) == 1 and tokens[0].lower() == "p2":
        return ProjectivePlane()
    if len(tokens) == 2 and tokens[0].lower() == "f":
        try:
            delta = int(tokens[1])
        except ValueError:
            delta = -1
        if delta >= 0:
            return Hirzebruch(delta)
    raise ParseError(f"invalid surface spec {text!r} (expected 'p2' or 'f <delta>')",
                     line=line, source=source)


def surface_json_fields(surface: SurfaceModel) -> dict:
    """JSON fields describing a surface: {'surface': 'p2'} or {'surface': 'f', 'delta': d}."""
    if is_plane(surface):
        return {"surface": "p2"}
    return {"surface": "f", "delta": surface.delta}


def surface_from_json_fields(data: dict) -> SurfaceModel:
    kind = data.get("surface")
    if kind == "p2":
        return ProjectivePlane()
    if kind == "f":
        return Hirzebruch(int(data["delta"]))
    raise ParseError(f"invalid surface fields {data!r}")
