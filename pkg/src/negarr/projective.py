"""Points and lines of the projective plane over an exact field.

Homogeneous triples are stored in canonical form: the leftmost nonzero
coordinate is scaled to 1, so equality and hashing are structural.
"""

from __future__ import annotations

from .errors import EqualLines, EqualPoints, FieldMismatch
from .fields import Field


def _canonical_triple(field: Field, triple):
    elems = [field.element(v) for v in triple]
    if len(elems) != 3:
        raise ValueError("expected exactly three homogeneous coordinates")
    pivot = next((e for e in elems if e), None)
    if pivot is None:
        raise ValueError("projective triple must have a nonzero coordinate")
    return tuple(e / pivot for e in elems)


class ProjPoint:
    """A point of P^2, canonical homogeneous coordinates."""

    __slots__ = ("coords",)

    def __init__(self, field: Field, coords):
        self.coords = _canonical_triple(field, coords)

    @property
    def field(self) -> Field:
        return self.coords[0].field

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and other.coords == self.coords

    def __hash__(self):
        return hash(("pt", self.coords))

    def __repr__(self):
        return "[" + ":".join(repr(c) for c in self.coords) + "]"

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)


class ProjLine:
    """A line of P^2, canonical homogeneous coefficients a, b, c for ax+by+cz = 0."""

    __slots__ = ("coeffs",)

    def __init__(self, field: Field, coeffs):
        self.coeffs = _canonical_triple(field, coeffs)

    @property
    def field(self) -> Field:
        return self.coeffs[0].field

    def __eq__(self, other):
        return isinstance(other, ProjLine) and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(("ln", self.coeffs))

    def __repr__(self):
        return "(" + ":".join(repr(c) for c in self.coeffs) + ")"

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coeffs)


def _cross(u, v):
    (a1, b1, c1), (a2, b2, c2) = u, v
    return (b1 * c2 - b2 * c1, c1 * a2 - c2 * a1, a1 * b2 - a2 * b1)


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique intersection point of two distinct lines."""
    if l1.field != l2.field:
        raise FieldMismatch(f"lines live over {l1.field} and {l2.field}")
    if l1 == l2:
        raise EqualLines(f"lines coincide: {l1!r}")
    return ProjPoint(l1.field, _cross(l1.coeffs, l2.coeffs))


def join(p1: ProjPoint, p2: ProjPoint) -> ProjLine:
    """The unique line through two distinct points."""
    if p1.field != p2.field:
        raise FieldMismatch(f"points live over {p1.field} and {p2.field}")
    if p1 == p2:
        raise EqualPoints(f"points coincide: {p1!r}")
    return ProjLine(p1.field, _cross(p1.coords, p2.coords))


def incident(point: ProjPoint, line: ProjLine) -> bool:
    """Exact incidence test: does the point lie on the line?"""
    if point.field != line.field:
        raise FieldMismatch(f"point over {point.field}, line over {line.field}")
    (x, y, z), (a, b, c) = point.coords, line.coeffs
    return not (a * x + b * y + c * z)
