"""Clusters of infinitely near points: validation and proximity combinatorics.

A cluster (configuration) is an ordered list of blowup centers over a base
surface.  Each point past an origin records the points it is proximate to:
exactly one (a free point, proximate to its parent) or two (a satellite,
proximate to its parent and to one of the parent's own proximity targets).
Everything downstream (proximity matrix, multiplicity vector, exceptional
self-intersections) is derived from this data with exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, NamedTuple, Sequence

from .errors import (
    ConfigurationError,
    DanglingProximityError,
    DuplicateIdError,
    ForwardReferenceError,
    InvalidSatelliteError,
    NormalizationError,
    TooManyProximitiesError,
    UnknownPointError,
)
from .surfaces import ProjectivePlane, SurfaceModel, surface_json_fields

PointSpec = tuple[int, Sequence[int]]
IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Point:
    """One blowup center.

    ``proximities`` lists the ids this point is proximate to, parent first
    (the parent is the proximate point of maximal id).  Origins have none,
    free points one, satellites two.
    """

    id: int
    proximities: tuple[int, ...]
    level: int

    @property
    def parent(self) -> int | None:
        return self.proximities[0] if self.proximities else None

    @property
    def is_origin(self) -> bool:
        return not self.proximities

    @property
    def is_free(self) -> bool:
        return len(self.proximities) == 1

    @property
    def is_satellite(self) -> bool:
        return len(self.proximities) == 2

    @property
    def kind(self) -> str:
        return ("origin", "free", "satellite")[len(self.proximities)]


@dataclass(frozen=True)
class Configuration:
    """A validated cluster: points in blowup order (ids 1..n) over a surface."""

    points: tuple[Point, ...]
    surface: SurfaceModel = ProjectivePlane()

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def point(self, point_id: int) -> Point:
        if not 1 <= point_id <= len(self.points):
            raise UnknownPointError(f"no point with id {point_id}", point_id=point_id)
        return self.points[point_id - 1]

    @cached_property
    def successors(self) -> dict[int, tuple[int, ...]]:
        """For each id, the ids of the points proximate to it (ascending)."""
        succ: dict[int, list[int]] = {pt.id: [] for pt in self.points}
        for pt in self.points:
            for target in pt.proximities:
                succ[target].append(pt.id)
        return {pid: tuple(ids) for pid, ids in succ.items()}

    @property
    def origins(self) -> tuple[int, ...]:
        return tuple(pt.id for pt in self.points if pt.is_origin)

    @property
    def ends(self) -> tuple[int, ...]:
        return tuple(pt.id for pt in self.points if not self.successors[pt.id])


def build_configuration(point_specs: Iterable[PointSpec],
                        surface: SurfaceModel | None = None) -> Configuration:
    """Validate ``(id, proximity ids)`` specs and assemble a Configuration.

    Ids must form 1..n (any input order); proximity lists must reference
    strictly smaller ids, parent (largest target) first.
    """
    specs = sorted(((pid, tuple(prox)) for pid, prox in point_specs),
                   key=lambda item: item[0])
    if not specs:
        raise ConfigurationError("a configuration must contain at least one point")
    seen: set[int] = set()
    for pid, _ in specs:
        if pid in seen:
            raise DuplicateIdError(f"duplicate point id {pid}", point_id=pid)
        seen.add(pid)
    if specs[0][0] != 1 or specs[-1][0] != len(specs):
        missing = sorted(set(range(1, len(specs) + 1)) - seen)
        raise ConfigurationError(
            f"ids must be exactly 1..{len(specs)} (missing {missing})")

    points: list[Point] = []
    by_id: dict[int, Point] = {}
    for pid, prox in specs:
        if len(prox) > 2:
            raise TooManyProximitiesError(
                f"point {pid} lists {len(prox)} proximities (at most 2 allowed)",
                point_id=pid)
        for target in prox:
            if not 1 <= target < pid:
                raise ForwardReferenceError(
                    f"point {pid} is proximate to {target}, "
                    f"which is not a strictly smaller id", point_id=pid)
        if len(prox) == 2:
            parent, second = prox
            if parent == second:
                raise NormalizationError(
                    f"point {pid} lists the same proximity {parent} twice",
                    point_id=pid)
            if parent < second:
                raise NormalizationError(
                    f"point {pid}: parent (largest id) must be listed first, "
                    f"got {prox}", point_id=pid)
            if second not in by_id[parent].proximities:
                raise InvalidSatelliteError(
                    f"point {pid}: second target {second} is not among the "
                    f"proximities of its parent {parent}", point_id=pid)
        level = 0 if not prox else by_id[prox[0]].level + 1
        point = Point(id=pid, proximities=prox, level=level)
        points.append(point)
        by_id[pid] = point
    return Configuration(points=tuple(points),
                         surface=surface if surface is not None else ProjectivePlane())


@dataclass(frozen=True)
class ProximityMatrix:
    """Unit lower triangular proximity matrix P and its exact integer inverse.

    Entry (i, j) is -1 iff point i is proximate to point j; the inverse is
    computed by forward substitution and has nonnegative integer entries.
    """

    entries: IntMatrix
    inverse: IntMatrix

    @property
    def n(self) -> int:
        return len(self.entries)


def proximity_matrix(c: Configuration) -> ProximityMatrix:
    n = len(c)
    entries = [[0] * n for _ in range(n)]
    for pt in c.points:
        i = pt.id - 1
        entries[i][i] = 1
        for target in pt.proximities:
            entries[i][target - 1] = -1
    # Row i of the inverse is e_i plus the inverse rows of i's proximity
    # targets; nonnegativity is immediate from this recursion.
    inverse = [[0] * n for _ in range(n)]
    for pt in c.points:
        i = pt.id - 1
        row = inverse[i]
        row[i] = 1
        for target in pt.proximities:
            trow = inverse[target - 1]
            for j in range(target):
                row[j] += trow[j]
    return ProximityMatrix(entries=tuple(tuple(r) for r in entries),
                           inverse=tuple(tuple(r) for r in inverse))


@dataclass(frozen=True)
class MultiplicityVector:
    """Multiplicities of a generic germ through the cluster: 1 at the ends,
    the sum over proximate successors elsewhere."""

    values: tuple[int, ...]


def multiplicity_vector(c: Configuration) -> MultiplicityVector:
    values = [0] * len(c)
    for pt in reversed(c.points):
        succ = c.successors[pt.id]
        values[pt.id - 1] = sum(values[s - 1] for s in succ) if succ else 1
    return MultiplicityVector(values=tuple(values))


@dataclass(frozen=True)
class PointClassification:
    id: int
    level: int
    origin: bool
    end: bool
    kind: str  # origin | free | satellite


def classify(c: Configuration) -> tuple[PointClassification, ...]:
    """Per-point report: origin/end flags, free or satellite, level."""
    ends = set(c.ends)
    return tuple(
        PointClassification(id=pt.id, level=pt.level, origin=pt.is_origin,
                            end=pt.id in ends, kind=pt.kind)
        for pt in c.points)


def _ancestor_chain(c: Configuration, point_id: int) -> set[int]:
    chain = {point_id}
    current = c.point(point_id)
    while current.parent is not None:
        chain.add(current.parent)
        current = c.point(current.parent)
    return chain


def subconfiguration(c: Configuration, point_id: int,
                     direction: Literal["below", "above"]) -> Configuration:
    """The subcluster at or above/below ``point_id``, renumbered to 1..k.

    ``below`` keeps the point and everything infinitely near it (transitive
    closure of the parent relation); ``above`` keeps its ancestor chain.
    Proximities to removed points are dropped; if dropping were to leave an
    invalid point the error surfaces as DanglingProximityError.
    """
    c.point(point_id)
    if direction == "above":
        retained = _ancestor_chain(c, point_id)
    elif direction == "below":
        retained = {pid for pid in range(1, len(c) + 1)
                    if point_id in _ancestor_chain(c, pid)}
    else:
        raise ValueError(f"direction must be 'below' or 'above', got {direction!r}")

    kept = sorted(retained)
    renumber = {old: new for new, old in enumerate(kept, start=1)}
    specs = []
    for old in kept:
        pt = c.point(old)
        prox = [renumber[t] for t in pt.proximities if t in retained]
        if direction == "above" and len(prox) != len(pt.proximities):
            raise DanglingProximityError(
                f"point {old} is proximate to a point outside the ancestor set",
                point_id=old)
        specs.append((renumber[old], prox))
    try:
        return build_configuration(specs, c.surface)
    except ConfigurationError as err:
        raise DanglingProximityError(
            f"subconfiguration at {point_id} ({direction}) is not a valid "
            f"cluster: {err}", point_id=point_id) from err


class ExceptionalSelfIntersections(NamedTuple):
    values: dict[int, int]
    gamma: int


def exceptional_self_intersections(c: Configuration) -> ExceptionalSelfIntersections:
    """Self-intersection of each strict exceptional transform on the sky,
    E_q^2 = -1 - #{p : p proximate to q}, and gamma = max(-E_q^2)."""
    values = {pt.id: -1 - len(c.successors[pt.id]) for pt in c.points}
    return ExceptionalSelfIntersections(values=values,
                                        gamma=max(-v for v in values.values()))


def dot_export(c: Configuration) -> str:
    """Render the proximity graph in DOT format.

    Solid edges point from each non-origin to its parent; dashed edges mark
    the extra proximity of a satellite.  Vertices are ranked by level.
    """
    lines = ["digraph cluster {", "  rankdir=BT;", "  node [shape=circle];"]
    by_level: dict[int, list[int]] = {}
    for pt in c.points:
        by_level.setdefault(pt.level, []).append(pt.id)
    for level in sorted(by_level):
        names = " ".join(f'"p{pid}";' for pid in by_level[level])
        lines.append(f"  {{ rank=same; {names} }}")
    for pt in c.points:
        for idx, target in enumerate(pt.proximities):
            style = "" if idx == 0 else " [style=dashed]"
            lines.append(f'  "p{pt.id}" -> "p{target}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def analysis_report(c: Configuration) -> dict:
    """JSON-ready report: per-point data, gamma, origins and ends."""
    esi = exceptional_self_intersections(c)
    report = surface_json_fields(c.surface)
    report["points"] = [
        {"id": pt.id, "level": pt.level, "kind": pt.kind,
         "proximities": list(pt.proximities), "e_sq": esi.values[pt.id]}
        for pt in c.points]
    report["gamma"] = esi.gamma
    report["origins"] = list(c.origins)
    report["ends"] = list(c.ends)
    return report
