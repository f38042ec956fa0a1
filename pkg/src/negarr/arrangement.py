"""Line configurations, their singular points, and multiplicity spectra.

A CoordArrangement holds actual coordinates; an IncidenceStructure records
which lines pass through which singular points; a Spectrum only counts how
many points have each multiplicity.  All three levels stay exact.
"""

from __future__ import annotations

from collections import Counter
from math import comb

from .errors import (
    EmptyPointSet,
    EmptyResult,
    FieldMismatch,
    IdentityViolation,
    NoIncidenceData,
    ProfileInconsistent,
    RemovingAll,
    SingleLine,
)
from .fields import RationalField
from .projective import ProjLine, ProjPoint, incident, meet

KEEP_ORIGINAL_POINTS = "keep_original_points"
RESTRICT_TO_NEW_SINGULAR = "restrict_to_new_singular"


class PointSet:
    """A nonempty set of distinct points over one field, in a fixed order."""

    __slots__ = ("points",)

    def __init__(self, points):
        pts = tuple(points)
        if not pts:
            raise EmptyPointSet("point set is empty")
        field = pts[0].field
        for p in pts:
            if p.field != field:
                raise FieldMismatch("points over different fields")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        self.points = pts

    @property
    def field(self):
        return self.points[0].field

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"PointSet({list(self.points)!r})"


class CoordArrangement:
    """A reduced set of distinct lines over one field.

    real is True when the coefficients are real under some embedding; it is
    asserted by generators (and forced for rational coordinates), never
    inferred for extensions.
    """

    __slots__ = ("field", "lines", "real")

    def __init__(self, lines, real=None):
        lines = tuple(lines)
        if not lines:
            raise ValueError("arrangement needs at least one line")
        field = lines[0].field
        for l in lines:
            if l.field != field:
                raise FieldMismatch("lines over different fields")
        if len(set(lines)) != len(lines):
            raise ValueError("lines must be pairwise distinct")
        self.field = field
        self.lines = lines
        if isinstance(field, RationalField):
            real = True
        elif real is None:
            real = False
        self.real = bool(real)

    @property
    def d(self) -> int:
        return len(self.lines)

    def without(self, labels) -> "CoordArrangement":
        labels = set(labels)
        kept = [l for i, l in enumerate(self.lines) if i not in labels]
        return CoordArrangement(kept, real=self.real)

    def __repr__(self):
        return f"CoordArrangement(d={self.d}, field={self.field!r}, real={self.real})"


class IncidenceStructure:
    """Points with member-line sets for an arrangement of labeled lines.

    complete means the points are exactly the full singular locus of the
    lines, in which case the pair-count identity sum C(m_i,2) = C(d,2) is
    enforced.  Points of multiplicity below 2 are allowed (and only appear)
    when a removal kept the original point set.
    """

    __slots__ = ("line_labels", "points", "complete", "origin", "real", "field_order")

    def __init__(self, line_labels, points, *, complete, origin="abstract",
                 real=False, field_order=None):
        labels = tuple(line_labels)
        if len(set(labels)) != len(labels):
            raise ValueError("line labels must be distinct")
        if not labels:
            raise ValueError("at least one line required")
        pts = tuple((key, frozenset(members)) for key, members in points)
        if not pts:
            raise EmptyResult("incidence structure has no points")
        label_set = set(labels)
        for key, members in pts:
            if not members <= label_set:
                raise ValueError(f"point {key!r} references unknown lines")
        if complete:
            lhs = sum(comb(len(members), 2) for _, members in pts)
            rhs = comb(len(labels), 2)
            if lhs != rhs:
                raise IdentityViolation(lhs, rhs)
        self.line_labels = labels
        self.points = pts
        self.complete = bool(complete)
        self.origin = origin
        self.real = bool(real)
        self.field_order = field_order

    @property
    def d(self) -> int:
        return len(self.line_labels)

    @property
    def s(self) -> int:
        return len(self.points)

    def multiplicities(self):
        return [len(members) for _, members in self.points]

    def __repr__(self):
        return (f"IncidenceStructure(d={self.d}, s={self.s}, "
                f"complete={self.complete}, origin={self.origin!r})")


class Spectrum:
    """Multiplicity spectrum: t[k] points where exactly k lines meet.

    complete means the counts describe the full singular locus, in which case
    sum C(k,2) t_k = C(d,2) is enforced.  profile, when present, gives for
    every line the number of k-fold points on it and must satisfy
    d * profile[k] = k * t_k.  field_order is the size of the coordinate
    field when the spectrum came from one of positive characteristic.
    """

    __slots__ = ("d", "t", "real", "complete", "profile", "field_order")

    def __init__(self, d, t, *, real=False, complete=True, profile=None,
                 field_order=None):
        if d < 1:
            raise ValueError("d must be positive")
        clean = {}
        for k in sorted(t):
            v = t[k]
            if not isinstance(k, int) or k < 2:
                raise ValueError(f"multiplicity {k!r} must be an integer >= 2")
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"count t_{k} = {v!r} must be a nonnegative integer")
            if v:
                clean[k] = v
        if not clean:
            raise ValueError("spectrum has no points")
        if complete:
            lhs = sum(comb(k, 2) * v for k, v in clean.items())
            rhs = comb(d, 2)
            if lhs != rhs:
                raise IdentityViolation(lhs, rhs)
        if profile is not None:
            prof = {k: profile[k] for k in sorted(profile) if profile[k]}
            if set(prof) != set(clean):
                raise ProfileInconsistent(
                    f"profile multiplicities {sorted(prof)} != spectrum {sorted(clean)}")
            for k, c in prof.items():
                if d * c != k * clean[k]:
                    raise ProfileInconsistent(
                        f"d*profile[{k}] = {d * c} but k*t_{k} = {k * clean[k]}")
            profile = prof
        self.d = d
        self.t = clean
        self.real = bool(real)
        self.complete = bool(complete)
        self.profile = profile
        self.field_order = field_order

    @property
    def s(self) -> int:
        return sum(self.t.values())

    @property
    def sum_m(self) -> int:
        return sum(k * v for k, v in self.t.items())

    @property
    def sum_m_sq(self) -> int:
        return sum(k * k * v for k, v in self.t.items())

    @property
    def max_mult(self) -> int:
        return max(self.t)

    def is_pencil(self) -> bool:
        return self.t.get(self.d, 0) == 1

    def __eq__(self, other):
        return (isinstance(other, Spectrum)
                and other.d == self.d and other.t == self.t
                and other.real == self.real and other.complete == self.complete
                and other.profile == self.profile
                and other.field_order == self.field_order)

    def __hash__(self):
        return hash((self.d, tuple(sorted(self.t.items()))))

    def __repr__(self):
        return f"Spectrum(d={self.d}, t={self.t}, real={self.real}, complete={self.complete})"


def abstract_spectrum(d, t, *, real=False, complete=True, profile=None,
                      field_order=None) -> Spectrum:
    """Validated spectrum from raw counts (no coordinates behind it)."""
    return Spectrum(d, t, real=real, complete=complete, profile=profile,
                    field_order=field_order)


def singular_points(arr: CoordArrangement) -> IncidenceStructure:
    """All points where at least two lines of the arrangement meet.

    Deduplication is exact via canonical coordinates; member sets accumulate
    from the pairwise meets, so a point's multiplicity is the number of lines
    through it.  A pencil yields a single point of multiplicity d.
    """
    if arr.d < 2:
        raise SingleLine("need at least two lines to intersect")
    acc: dict[ProjPoint, set[int]] = {}
    lines = arr.lines
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = meet(lines[i], lines[j])
            acc.setdefault(p, set()).update((i, j))
    ordered = sorted(acc.items(), key=lambda kv: kv[0].sort_key())
    return IncidenceStructure(
        range(arr.d),
        [(p, frozenset(members)) for p, members in ordered],
        complete=True,
        origin="coordinates",
        real=arr.real,
        field_order=arr.field.order,
    )


def multiplicity(arr: CoordArrangement, point: ProjPoint) -> int:
    """Number of arrangement lines through the point (0, 1, or more)."""
    if point.field != arr.field:
        raise FieldMismatch("point and arrangement over different fields")
    return sum(1 for l in arr.lines if incident(point, l))


def _derive_profile(inc: IncidenceStructure):
    if not inc.complete:
        return None
    per_line = {lab: Counter() for lab in inc.line_labels}
    for _, members in inc.points:
        m = len(members)
        for lab in members:
            per_line[lab][m] += 1
    profiles = list(per_line.values())
    first = profiles[0]
    if all(p == first for p in profiles):
        return {k: first[k] for k in sorted(first)}
    return None


def spectrum_of(inc: IncidenceStructure) -> Spectrum:
    """Collapse an incidence structure to its multiplicity spectrum.

    Flags are copied; a per-line profile is attached when every line carries
    the same multiset of point multiplicities.  Points of multiplicity below
    2 (possible only on incomplete structures) are not counted.
    """
    t = Counter(m for m in inc.multiplicities() if m >= 2)
    return Spectrum(
        inc.d,
        dict(t),
        real=inc.real,
        complete=inc.complete,
        profile=_derive_profile(inc),
        field_order=inc.field_order,
    )


def restrict_to_singular(points, arr: CoordArrangement) -> PointSet:
    """The subset of the given points that are singular for the arrangement."""
    pts = points.points if isinstance(points, PointSet) else tuple(points)
    kept = [p for p in pts if multiplicity(arr, p) >= 2]
    if not kept:
        raise EmptyResult("no singular points among the given ones")
    return PointSet(kept)


def remove_lines(inc: IncidenceStructure, removed,
                 policy: str = RESTRICT_TO_NEW_SINGULAR) -> IncidenceStructure:
    """Drop the given line labels and update every point's member set.

    keep_original_points keeps all points (multiplicity may fall below 2, the
    result is marked incomplete); restrict_to_new_singular keeps only points
    still on at least two surviving lines, which is exactly the full singular
    locus of the subarrangement.
    """
    removed = frozenset(removed)
    label_set = set(inc.line_labels)
    if not removed <= label_set:
        raise ValueError(f"unknown line labels: {sorted(removed - label_set)}")
    if removed == label_set:
        raise RemovingAll("cannot remove every line")
    new_labels = tuple(l for l in inc.line_labels if l not in removed)
    stripped = [(key, members - removed) for key, members in inc.points]
    if policy == RESTRICT_TO_NEW_SINGULAR:
        new_points = [(key, members) for key, members in stripped if len(members) >= 2]
        complete = True
    elif policy == KEEP_ORIGINAL_POINTS:
        new_points = stripped
        complete = False
    else:
        raise ValueError(f"unknown policy {policy!r}")
    if not new_points:
        raise EmptyResult("subarrangement has no singular points")
    return IncidenceStructure(
        new_labels,
        new_points,
        complete=complete,
        origin=inc.origin,
        real=inc.real,
        field_order=inc.field_order,
    )


def equidistribution(x):
    """The common number of recorded points per line, or None if it varies.

    Works from member sets for an IncidenceStructure and from the per-line
    profile for a Spectrum; a spectrum without profile has no incidence data
    to answer from.
    """
    if isinstance(x, Spectrum):
        if x.profile is None:
            raise NoIncidenceData("spectrum carries no per-line profile")
        return sum(x.profile.values())
    counts = {lab: 0 for lab in x.line_labels}
    for _, members in x.points:
        for lab in members:
            counts[lab] += 1
    values = set(counts.values())
    if len(values) == 1:
        return values.pop()
    return None
