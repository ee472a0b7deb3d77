"""Explicit lower bounds on C^2/(D.C) for blowups of the plane or F_delta.

All bounds are exact rationals computed from three integers read off the
cluster: n (number of points), d (total minimal degree over the origins) and
gamma (maximal negativity of a strict exceptional transform).  Two counting
conventions for n are supported, ``stated`` (the plain cardinality) and
``example`` (the cardinality of the satellite completions summed over the
origins); reports always record both so callers can see when they diverge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from .config import Configuration, exceptional_self_intersections
from .errors import (
    NonPositiveEpsilonError,
    SurfaceMismatchError,
)
from .lattice import DivisorClass, Rational, _exact, pairing
from .surfaces import SurfaceModel, is_plane, surface_json_fields
from .sufficiency import origin_d_values

N_CONVENTIONS = ("stated", "example")


def _positive_epsilon(epsilon: Rational) -> Fraction:
    value = _exact(epsilon)
    if value <= 0:
        raise NonPositiveEpsilonError(f"epsilon must be positive, got {value}")
    return value


class ClusterData(NamedTuple):
    n_stated: int
    n_example: int
    d: int
    gamma: int
    per_origin: tuple[tuple[int, int, int], ...]  # (origin id, d, hat size)


def cluster_bound_data(c: Configuration | None) -> ClusterData:
    """n, d and gamma of a cluster; the empty cluster contributes zeros."""
    if c is None:
        return ClusterData(0, 0, 0, 0, ())
    per = origin_d_values(c)
    return ClusterData(
        n_stated=len(c),
        n_example=sum(dv.hat_size for _, dv in per),
        d=sum(dv.d for _, dv in per),
        gamma=exceptional_self_intersections(c).gamma,
        per_origin=tuple((origin, dv.d, dv.hat_size) for origin, dv in per))


def rational_json(value: Fraction) -> int | str:
    return int(value) if value.denominator == 1 else str(value)


@dataclass(frozen=True)
class BoundReport:
    """An evaluated bound: named term values and their minimum."""

    surface: SurfaceModel
    n_stated: int
    n_example: int
    convention: str
    n: int
    d: int
    gamma: int
    epsilon: Fraction | None
    terms: tuple[tuple[str, Fraction], ...]
    bound: Fraction
    case_bounds: tuple[tuple[str, Fraction], ...] | None = None

    @property
    def conventions_disagree(self) -> bool:
        return self.n_stated != self.n_example

    def term(self, name: str) -> Fraction:
        for key, value in self.terms:
            if key == name:
                return value
        raise KeyError(name)

    def as_json_dict(self) -> dict:
        data = surface_json_fields(self.surface)
        data.update({
            "n_stated": self.n_stated,
            "n_example": self.n_example,
            "d": self.d,
            "gamma": self.gamma,
            "terms": [{"name": name, "value": rational_json(value)}
                      for name, value in self.terms],
            "bound": rational_json(self.bound),
            "convention": self.convention,
        })
        if self.epsilon is not None:
            data["epsilon"] = rational_json(self.epsilon)
        if self.case_bounds is not None:
            data["cases"] = {name: rational_json(value)
                             for name, value in self.case_bounds}
        return data


def _resolve(c: Configuration | None, n_convention: str,
             surface: SurfaceModel | None, gamma: int | None):
    if n_convention not in N_CONVENTIONS:
        raise ValueError(f"n_convention must be one of {N_CONVENTIONS}")
    if c is None and surface is None:
        raise ValueError("a surface is required when no cluster is given")
    data = cluster_bound_data(c)
    return (c.surface if c is not None else surface,
            data,
            data.n_stated if n_convention == "stated" else data.n_example,
            data.gamma if gamma is None else gamma)


def _report(surface, data: ClusterData, convention, n, gamma, epsilon, terms,
            case_bounds=None) -> BoundReport:
    return BoundReport(surface=surface, n_stated=data.n_stated,
                       n_example=data.n_example, convention=convention, n=n,
                       d=data.d, gamma=gamma, epsilon=epsilon,
                       terms=tuple(terms),
                       bound=min(value for _, value in terms),
                       case_bounds=case_bounds)


def polarization_bounds(c: Configuration,
                        n_convention: str = "stated") -> BoundReport:
    """Bounds on C^2/(D.C) for the pullback polarization D = L* or F* + M*.

    Case one applies to curves not invariant under the attached foliation,
    case two to invariant ones; ``bound`` is their minimum.
    """
    surface, data, n, gamma = _resolve(c, n_convention, None, None)
    d = data.d
    if is_plane(surface):
        terms = [("3-2d", Fraction(3 - 2 * d)),
                 ("d(1-n)", Fraction(d * (1 - n)))]
        cases = (("non_invariant", terms[0][1]), ("invariant", terms[1][1]))
    else:
        delta = surface.delta
        terms = [("2-2d-delta", Fraction(2 - 2 * d - delta)),
                 ("-n-delta", Fraction(-n - delta)),
                 ("-(delta+2)dn", Fraction(-(delta + 2) * d * n))]
        cases = (("non_invariant", terms[0][1]),
                 ("invariant", min(terms[1][1], terms[2][1])))
    return _report(surface, data, n_convention, n, gamma, None, terms, cases)


def epsilon_family_bounds(c: Configuration | None, epsilon: Rational,
                          n_convention: str = "stated", *,
                          gamma: int | None = None,
                          surface: SurfaceModel | None = None) -> BoundReport:
    """Bound on nu_D for every nef divisor in the epsilon family of the
    pullback polarization: min of the scaled case terms and -gamma."""
    eps = _positive_epsilon(epsilon)
    surface, data, n, gamma = _resolve(c, n_convention, surface, gamma)
    d = data.d
    if is_plane(surface):
        terms = [("(3-2d)/eps", Fraction(3 - 2 * d) / eps),
                 ("d(1-n)/eps", Fraction(d * (1 - n)) / eps),
                 ("-gamma", Fraction(-gamma))]
    else:
        delta = surface.delta
        terms = [("(2-2d-delta)/eps", Fraction(2 - 2 * d - delta) / eps),
                 ("(-n-delta)/eps", Fraction(-n - delta) / eps),
                 ("(-delta-2)dn/eps", Fraction(-(delta + 2) * d * n) / eps),
                 ("-gamma", Fraction(-gamma))]
    return _report(surface, data, n_convention, n, gamma, eps, terms)


def nef_pullback_bounds(c: Configuration | None,
                        n_convention: str = "stated", *,
                        surface: SurfaceModel | None = None) -> BoundReport:
    """Bound on nu_{D*} for the pullback of any nef divisor on the base."""
    surface, data, n, _gamma = _resolve(c, n_convention, surface, None)
    d = data.d
    if is_plane(surface):
        terms = [("3-2d", Fraction(3 - 2 * d)),
                 ("d(1-n)", Fraction(d * (1 - n)))]
    else:
        delta = surface.delta
        terms = [("2-2d-delta", Fraction(2 - 2 * d - delta)),
                 ("-n-delta", Fraction(-n - delta)),
                 ("-(delta+2)dn", Fraction(-(delta + 2) * d * n))]
    return _report(surface, data, n_convention, n, _gamma, None, terms)


@dataclass(frozen=True)
class PlaneDegree:
    """Degree of a foliation on the plane (canonical class (r-1) L)."""

    r: int

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("the degree of a plane foliation is nonnegative")


@dataclass(frozen=True)
class HirzebruchBidegree:
    """Bidegree of a foliation on a Hirzebruch surface (canonical r1 F + r2 M)."""

    r1: int
    r2: int


FoliationDegree = Union[PlaneDegree, HirzebruchBidegree]


def degree_sum(degree: FoliationDegree) -> int:
    """r - 1 on the plane, r1 + r2 on a Hirzebruch surface."""
    if isinstance(degree, PlaneDegree):
        return degree.r - 1
    return degree.r1 + degree.r2


@dataclass(frozen=True)
class FoliationBoundReport:
    """Negativity bounds determined by a foliation of known (bi)degree.

    ``bound`` (minus the degree sum) covers non-invariant curves for the
    pullback polarization; ``scaled_bound`` divides it by epsilon for the
    epsilon family; ``generic_bound`` is the -1/epsilon bound available for
    any foliation with finitely many negative invariant curves.  When the
    caller supplies the invariant-curve data alpha_hat (and optionally gamma),
    ``combined_bound`` is the resulting minimum for nu_D.
    """

    beta: int
    bound: Fraction
    epsilon: Fraction | None = None
    scaled_bound: Fraction | None = None
    generic_bound: Fraction | None = None
    alpha_hat: Fraction | None = None
    gamma: int | None = None
    combined_bound: Fraction | None = None


def foliation_negativity_bound(degree: FoliationDegree, surface: SurfaceModel,
                               epsilon: Rational | None = None, *,
                               alpha_hat: Rational | None = None,
                               gamma: int | None = None) -> FoliationBoundReport:
    if isinstance(degree, PlaneDegree) != is_plane(surface):
        raise SurfaceMismatchError(
            f"foliation degree {degree} does not match surface {surface}")
    beta = degree_sum(degree)
    bound = Fraction(-beta)
    eps = None if epsilon is None else _positive_epsilon(epsilon)
    scaled = None if eps is None else bound / eps
    generic = None if eps is None else Fraction(-1) / eps
    alpha = None if alpha_hat is None else _exact(alpha_hat)
    combined = None
    if alpha is not None or gamma is not None:
        pieces = [scaled if scaled is not None else bound]
        if alpha is not None:
            pieces.append(-alpha)
        if gamma is not None:
            pieces.append(Fraction(-gamma))
        combined = min(pieces)
    return FoliationBoundReport(beta=beta, bound=bound, epsilon=eps,
                                scaled_bound=scaled, generic_bound=generic,
                                alpha_hat=alpha, gamma=gamma,
                                combined_bound=combined)


@dataclass(frozen=True)
class AttachedFoliationReport:
    """Degree bounds for a foliation attached to the cluster, together with
    the degree data of its rational first integral."""

    surface: SurfaceModel
    d: int
    r_max: int | None = None
    r1_max: int | None = None
    r2_max: int | None = None
    first_integral_degree: int | None = None
    first_integral_d1_max: int | None = None
    first_integral_d2: int | None = None


def attached_foliation_degree_bounds(c: Configuration) -> AttachedFoliationReport:
    """Plane: degree <= 2d - 2, first integral of degree exactly d.
    Hirzebruch: (r1, r2) <= (2d + delta - 2, 2d - 2), first integral of
    bidegree (d1 <= d, d)."""
    d = sum(dv.d for _, dv in origin_d_values(c))
    if is_plane(c.surface):
        return AttachedFoliationReport(surface=c.surface, d=d, r_max=2 * d - 2,
                                       first_integral_degree=d)
    delta = c.surface.delta
    return AttachedFoliationReport(surface=c.surface, d=d,
                                   r1_max=2 * d + delta - 2, r2_max=2 * d - 2,
                                   first_integral_d1_max=d,
                                   first_integral_d2=d)


@dataclass(frozen=True)
class CurveRatio:
    index: int
    self_intersection: Fraction
    pairing_with_divisor: Fraction
    qualifies: bool  # C^2 < 0 and D.C > 0
    ratio: Fraction | None


@dataclass(frozen=True)
class NuReport:
    """Empirical infimum of C^2/(D.C) over a supplied list of curve classes.

    ``value`` is None when no supplied curve qualifies (the quantity is
    undefined on the list); this is a reporting device over the given list,
    not the true infimum over all negative curves.
    """

    value: Fraction | None
    ratios: tuple[CurveRatio, ...]


def empirical_nu(curves: Sequence[DivisorClass],
                 big_nef: DivisorClass) -> NuReport:
    ratios = []
    for index, curve in enumerate(curves, start=1):
        big_nef._check_compatible(curve)
        c_sq = pairing(curve, curve)
        dc = pairing(big_nef, curve)
        qualifies = c_sq < 0 and dc > 0
        ratios.append(CurveRatio(index=index, self_intersection=c_sq,
                                 pairing_with_divisor=dc, qualifies=qualifies,
                                 ratio=c_sq / dc if qualifies else None))
    qualifying = [r.ratio for r in ratios if r.qualifies]
    return NuReport(value=min(qualifying) if qualifying else None,
                    ratios=tuple(ratios))


@dataclass(frozen=True)
class WitnessCheck:
    index: int
    pairing_with_divisor: Fraction  # D.C
    slack: Fraction                 # (D - eps*G).C
    applicable: bool                # D.C > 0
    ok: bool | None                 # slack >= 0, when applicable


@dataclass(frozen=True)
class DeltaMembershipReport:
    """Necessary checks for D to lie in the epsilon family of G, evaluated
    against the supplied witness curves only (a sufficient-condition tester,
    not a decision procedure)."""

    epsilon: Fraction
    checks: tuple[WitnessCheck, ...]
    violations: tuple[int, ...]
    nef_on_witnesses: bool  # (D - eps*G).C >= 0 for every witness

    @property
    def passed(self) -> bool:
        return not self.violations


def delta_membership_check(d: DivisorClass, g: DivisorClass,
                           epsilon: Rational,
                           witnesses: Sequence[DivisorClass]) -> DeltaMembershipReport:
    eps = _positive_epsilon(epsilon)
    d._check_compatible(g)
    shifted = d - eps * g
    checks = []
    for index, witness in enumerate(witnesses, start=1):
        d._check_compatible(witness)
        dc = pairing(d, witness)
        slack = pairing(shifted, witness)
        applicable = dc > 0
        checks.append(WitnessCheck(index=index, pairing_with_divisor=dc,
                                   slack=slack, applicable=applicable,
                                   ok=(slack >= 0) if applicable else None))
    return DeltaMembershipReport(
        epsilon=eps,
        checks=tuple(checks),
        violations=tuple(ch.index for ch in checks if ch.ok is False),
        nef_on_witnesses=all(ch.slack >= 0 for ch in checks))
