"""Text formats: cluster files, divisor literals and curve lists.

Cluster file, one statement per line ('#' starts a comment):

    surface p2            # or: surface f <delta>
    1 origin
    2 -> 1                # free point, proximate to its parent
    5 -> 4 2              # satellite: parent first, then the second target

Divisor literals are whitespace-insensitive sums of signed terms over the
generators, e.g. ``3L - 2E1 - E4`` or ``2F + 1M - E3``; coefficients are
integers or rationals ``p/q``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .config import Configuration, build_configuration
from .errors import ConfigurationError, ParseError
from .lattice import DivisorClass
from .surfaces import SurfaceModel, is_plane, parse_surface


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as err:
        raise ParseError(f"invalid rational {text!r}") from err


def _statements(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        statement = raw.split("#", 1)[0].strip()
        if statement:
            yield lineno, statement


def parse_configuration(text: str, *, source: str = "<config>") -> Configuration:
    """Parse a cluster file; raises ParseError carrying the offending line."""
    surface: SurfaceModel | None = None
    specs: list[tuple[int, list[int]]] = []
    line_of_id: dict[int, int] = {}
    for lineno, statement in _statements(text):
        tokens = statement.split()
        if surface is None:
            if tokens[0].lower() != "surface":
                raise ParseError("the first statement must declare the surface",
                                 line=lineno, source=source)
            surface = parse_surface(statement, line=lineno, source=source)
            continue
        try:
            pid = int(tokens[0])
        except ValueError:
            raise ParseError(f"expected a point id, got {tokens[0]!r}",
                             line=lineno, source=source) from None
        if len(tokens) == 2 and tokens[1].lower() == "origin":
            prox: list[int] = []
        elif 3 <= len(tokens) <= 4 and tokens[1] == "->":
            try:
                prox = [int(tok) for tok in tokens[2:]]
            except ValueError:
                raise ParseError(f"invalid proximity targets in {statement!r}",
                                 line=lineno, source=source) from None
        else:
            raise ParseError(
                f"malformed point statement {statement!r} (expected "
                f"'<id> origin' or '<id> -> <parent> [<second>]')",
                line=lineno, source=source)
        specs.append((pid, prox))
        line_of_id.setdefault(pid, lineno)
    if surface is None:
        raise ParseError("empty input: no surface declaration", source=source)
    if not specs:
        raise ParseError("no points declared", source=source)
    try:
        return build_configuration(specs, surface)
    except ConfigurationError as err:
        raise ParseError(str(err), line=line_of_id.get(err.point_id),
                         source=source) from err


def load_configuration(path: str | Path) -> Configuration:
    path = Path(path)
    return parse_configuration(path.read_text(encoding="utf-8"),
                               source=str(path))


def serialize_configuration(c: Configuration) -> str:
    lines = [f"surface {c.surface}"]
    for pt in c.points:
        if pt.is_origin:
            lines.append(f"{pt.id} origin")
        else:
            targets = " ".join(str(t) for t in pt.proximities)
            lines.append(f"{pt.id} -> {targets}")
    return "\n".join(lines) + "\n"


_TERM_RE = re.compile(r"([+-]?)((?:\d+(?:/\d+)?)?)(L|F|M|E(\d+))",
                      re.IGNORECASE)


def parse_divisor(text: str, surface: SurfaceModel, n: int) -> DivisorClass:
    """Parse a divisor literal over the given surface with n exceptional
    generators."""
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty divisor literal")
    base = [Fraction(0)] * (1 if is_plane(surface) else 2)
    exceptional = [Fraction(0)] * n
    pos = 0
    first = True
    while pos < len(compact):
        match = _TERM_RE.match(compact, pos)
        if match is None:
            raise ParseError(f"cannot parse divisor literal {text!r} "
                             f"near {compact[pos:]!r}")
        sign, coeff, generator, e_index = match.groups()
        if not first and not sign:
            raise ParseError(f"missing sign between terms in {text!r}")
        try:
            value = Fraction(coeff) if coeff else Fraction(1)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in coefficient {coeff!r} "
                             f"of {text!r}") from None
        if sign == "-":
            value = -value
        generator = generator.upper()
        if generator.startswith("E"):
            index = int(e_index)
            if not 1 <= index <= n:
                raise ParseError(f"exceptional index E{index} out of range "
                                 f"1..{n} in {text!r}")
            exceptional[index - 1] += value
        elif generator == "L":
            if not is_plane(surface):
                raise ParseError(f"generator L is not valid over {surface}")
            base[0] += value
        elif generator == "F":
            if is_plane(surface):
                raise ParseError("generator F is not valid over p2")
            base[0] += value
        else:  # M
            if is_plane(surface):
                raise ParseError("generator M is not valid over p2")
            base[1] += value
        pos = match.end()
        first = False
    return DivisorClass(surface, tuple(base), tuple(exceptional))


def parse_curves(text: str, surface: SurfaceModel, n: int, *,
                 source: str = "<curves>") -> tuple[DivisorClass, ...]:
    """Parse a file with one divisor literal per line."""
    curves = []
    for lineno, statement in _statements(text):
        try:
            curves.append(parse_divisor(statement, surface, n))
        except ParseError as err:
            raise ParseError(str(err), line=lineno, source=source) from err
    return tuple(curves)


def load_curves(path: str | Path, surface: SurfaceModel,
                n: int) -> tuple[DivisorClass, ...]:
    path = Path(path)
    return parse_curves(path.read_text(encoding="utf-8"), surface, n,
                        source=str(path))
