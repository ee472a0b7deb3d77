"""Satellite completion of single-origin clusters and the minimal degree d.

For a cluster with a unique origin, the completion adds, above each free end,
the one satellite point of the exceptional divisor created by blowing up that
end.  The degree d is the least positive integer making every component of
P^{-1} (d*e_1 - m) strictly positive over the completed cluster, where P is
the proximity matrix and m the multiplicity vector.  A generic germ through
the cluster is then determined, up to equisingularity, by its terms of degree
below d, which is what the downstream bound formulas consume.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .config import (
    Configuration,
    build_configuration,
    multiplicity_vector,
    proximity_matrix,
    subconfiguration,
)
from .errors import MultipleOriginsError, NonPositiveCoefficientError


class AddedPoint(NamedTuple):
    id: int        # id of the new satellite in the extended cluster
    free_end: int  # the free end it sits above


@dataclass(frozen=True)
class HatConfiguration:
    """A single-origin cluster together with its satellite completion."""

    base: Configuration
    extended: Configuration
    added: tuple[AddedPoint, ...]

    def __post_init__(self) -> None:
        assert len(self.extended) == len(self.base) + len(self.added)


def hat_configuration(c: Configuration) -> HatConfiguration:
    """Complete a single-origin cluster by one satellite above each free end.

    A singleton is returned unchanged.  The new points are appended after the
    base points, in the order the free ends appear; each is proximate to its
    free end and to that end's unique proximity target (its parent).
    """
    origins = c.origins
    if len(origins) != 1:
        raise MultipleOriginsError(
            f"expected a unique origin, found {len(origins)}: {origins}")
    if len(c) == 1:
        return HatConfiguration(base=c, extended=c, added=())

    specs = [(pt.id, list(pt.proximities)) for pt in c.points]
    added = []
    next_id = len(c)
    for end_id in c.ends:
        end = c.point(end_id)
        if not end.is_free:
            continue
        # With >= 2 points the origin is never an end, so every free end has
        # a parent.
        assert end.parent is not None and end.level >= 1
        next_id += 1
        specs.append((next_id, [end_id, end.parent]))
        added.append(AddedPoint(id=next_id, free_end=end_id))
    return HatConfiguration(base=c,
                            extended=build_configuration(specs, c.surface),
                            added=tuple(added))


@dataclass(frozen=True)
class DValue:
    """The minimal degree d for a single-origin cluster, with certificates.

    ``certificate`` is P^{-1}(d*e_1 - m) over the completed cluster (all
    entries positive); ``previous`` is the same vector at d - 1 (some entry
    nonpositive), witnessing minimality.
    """

    origin: int
    d: int
    certificate: tuple[int, ...]
    previous: tuple[int, ...]
    hat: HatConfiguration

    def __post_init__(self) -> None:
        assert self.d >= 2
        assert all(v > 0 for v in self.certificate)
        assert any(v <= 0 for v in self.previous)

    @property
    def hat_size(self) -> int:
        return len(self.hat.extended)


def d_value(c: Configuration) -> DValue:
    """Compute the minimal degree of a single-origin cluster in closed form.

    With a = P^{-1} e_1 and b = P^{-1} m over the completed cluster, the
    component conditions d*a_i - b_i > 0 give d = max_i(floor(b_i/a_i) + 1).
    """
    hat = hat_configuration(c)
    inv = proximity_matrix(hat.extended).inverse
    m = multiplicity_vector(hat.extended).values
    a = [row[0] for row in inv]
    b = [sum(row[j] * m[j] for j in range(i + 1)) for i, row in enumerate(inv)]
    bad = [i + 1 for i, ai in enumerate(a) if ai <= 0]
    if bad:
        raise NonPositiveCoefficientError(
            f"nonpositive unloading coefficients at points {bad}; "
            f"the cluster is not a single-origin cluster")
    d = max(bi // ai + 1 for ai, bi in zip(a, b))
    return DValue(origin=c.origins[0], d=d,
                  certificate=tuple(d * ai - bi for ai, bi in zip(a, b)),
                  previous=tuple((d - 1) * ai - bi for ai, bi in zip(a, b)),
                  hat=hat)


class OriginDValue(NamedTuple):
    origin: int   # origin id in the full cluster
    value: DValue


def origin_d_values(c: Configuration) -> tuple[OriginDValue, ...]:
    """The d-value of each connected component, keyed by its origin id."""
    results = []
    for origin in c.origins:
        sub = subconfiguration(c, origin, "below")
        results.append(OriginDValue(origin=origin, value=d_value(sub)))
    return tuple(results)


def total_d(c: Configuration) -> int:
    """Sum of the per-origin d-values over the whole cluster."""
    return sum(item.value.d for item in origin_d_values(c))


def d_value_report(c: Configuration) -> dict:
    """JSON-ready report: per-origin d with certificates, and the total."""
    per_origin = origin_d_values(c)
    return {
        "origins": [
            {"id": origin, "d": dv.d, "hat_size": dv.hat_size,
             "certificate": list(dv.certificate)}
            for origin, dv in per_origin],
        "total_d": sum(dv.d for _, dv in per_origin),
    }
