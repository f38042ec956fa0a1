"""H-constants, inequality certificates, and lower bounds for line configurations.

For d lines and s marked points with multiplicities m_i (number of lines
through the i-th point), the quadratic form is

    h = (d^2 - sum m_i^2) / s.

On the full singular locus the pair-count identity sum m_i(m_i-1) = d(d-1)
collapses it to the linear form (d - sum m_i)/s = d/s - mbar.  Everything here
is exact Fraction arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import (
    CoordArrangement,
    IncidenceStructure,
    PointSet,
    Spectrum,
    multiplicity,
)
from .errors import (
    BadMultiplicity,
    IncompleteLocus,
    InvalidSubsize,
    MelchiorViolated,
    NoIncidenceData,
)
from .fields import compare_with_surd_mean

FORMULA_GENERAL = "general_quadratic"
FORMULA_FULL = "full_locus_linear"

HIRZEBRUCH = "hirzebruch"
MELCHIOR = "melchior"
MAIN_LOWER_BOUND = "main_lower_bound"
REAL_LOWER_BOUND = "real_lower_bound"
INDEX_BOUND = "index_bound"


@dataclass(frozen=True)
class HReport:
    """One H-constant evaluation with the ingredients that produced it."""

    h: Fraction
    d: int
    s: int
    sum_m: int
    sum_m_sq: int
    mbar: Fraction
    formula: str


@dataclass(frozen=True)
class HCurveReport(HReport):
    infimum_attained: bool = False


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of one inequality check.

    holds is meaningful only when applicable; slack >= 0 iff the certificate
    holds.  note carries realizability advisories for violated inequalities.
    """

    kind: str
    applicable: bool
    holds: bool
    slack: Fraction
    reason: str | None = None
    bound_value: Fraction | None = None
    e_slack: Fraction | None = None
    note: str | None = None


@dataclass(frozen=True)
class MeanComparison:
    """Average multiplicity against the root of m(m-1) = sum m_i(m_i-1)/s."""

    mbar: Fraction
    c: Fraction
    ordering: int
    chain_holds: bool


@dataclass(frozen=True)
class PairRemovalReport:
    meeting_multiplicity: int
    over_original: HReport
    over_new: HReport
    new_spectrum: Spectrum


def _report(d, s, sum_m, sum_m_sq, formula) -> HReport:
    if formula == FORMULA_FULL:
        h = Fraction(d - sum_m, s)
    else:
        h = Fraction(d * d - sum_m_sq, s)
    return HReport(h=h, d=d, s=s, sum_m=sum_m, sum_m_sq=sum_m_sq,
                   mbar=Fraction(sum_m, s), formula=formula)


def _complete_counts(x):
    """(d, t, s, sum_m, sum_m_sq) of a complete structure or spectrum."""
    if isinstance(x, Spectrum):
        if not x.complete:
            raise IncompleteLocus("spectrum is not flagged complete")
        return x.d, dict(x.t), x.s, x.sum_m, x.sum_m_sq
    if isinstance(x, IncidenceStructure):
        if not x.complete:
            raise IncompleteLocus("incidence structure is not the full singular locus")
        mults = x.multiplicities()
        t = dict(Counter(mults))
        return x.d, t, len(mults), sum(mults), sum(m * m for m in mults)
    raise TypeError(f"expected Spectrum or IncidenceStructure, got {type(x).__name__}")


def h_at_points(arr: CoordArrangement, points) -> HReport:
    """Quadratic-form H of the arrangement over an arbitrary point set.

    Multiplicities 0 and 1 are allowed; they simply contribute to s.
    """
    pts = points if isinstance(points, PointSet) else PointSet(points)
    mults = [multiplicity(arr, p) for p in pts]
    return _report(arr.d, len(mults), sum(mults), sum(m * m for m in mults),
                   FORMULA_GENERAL)


def h_quadratic(inc: IncidenceStructure) -> HReport:
    """Quadratic-form H over all recorded points of an incidence structure.

    Intended for the keep-original-points result of a removal, where the
    structure is deliberately not the full singular locus.
    """
    mults = inc.multiplicities()
    return _report(inc.d, len(mults), sum(mults), sum(m * m for m in mults),
                   FORMULA_GENERAL)


def h_full(x) -> HReport:
    """Linear-form H over the full singular locus, cross-checked quadratically."""
    d, _, s, sum_m, sum_m_sq = _complete_counts(x)
    rep = _report(d, s, sum_m, sum_m_sq, FORMULA_FULL)
    assert rep.h == Fraction(d * d - sum_m_sq, s), "linear and quadratic forms disagree"
    return rep


def h_curve(x) -> HCurveReport:
    """h_full plus the flag recording whether the curve infimum h <= -1 is met."""
    rep = h_full(x)
    return HCurveReport(h=rep.h, d=rep.d, s=rep.s, sum_m=rep.sum_m,
                        sum_m_sq=rep.sum_m_sq, mbar=rep.mbar, formula=rep.formula,
                        infimum_attained=rep.h <= -1)


def h_fattened(x, k: int) -> Fraction:
    """H after replacing the configuration by its k-fold thickening: k^2 * h.

    Both the scaled value and the direct quadratic evaluation with d -> kd,
    m_i -> k m_i are computed and must agree.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("fattening order must be a positive integer")
    base = h_full(x)
    direct = Fraction(k * k * base.d * base.d - k * k * base.sum_m_sq, base.s)
    scaled = k * k * base.h
    assert direct == scaled, "fattening paths disagree"
    return scaled


def _melchior_excess(d, t):
    return t.get(2, 0) - 3 - sum((k - 3) * v for k, v in t.items() if k > 3)


def hirzebruch_check(spec: Spectrum) -> CertificateReport:
    """t_2 + (3/4) t_3 >= d + sum_{k>=5} (k-4) t_k.

    Valid for arrangements over the complex numbers with no point on d or
    d-1 of the lines and d >= 4; inapplicable otherwise, in particular over
    positive characteristic.  A violation by an abstract spectrum certifies
    that no complex line arrangement realizes it.
    """
    d, t, s, _, _ = _complete_counts(spec)
    lhs = t.get(2, 0) + Fraction(3, 4) * t.get(3, 0)
    rhs = d + sum((k - 4) * v for k, v in t.items() if k >= 5)
    slack = lhs - rhs
    reason = None
    if t.get(d, 0):
        reason = "a point lies on every line (pencil)"
    elif t.get(d - 1, 0):
        reason = "a point lies on all lines but one (quasi-pencil)"
    elif d < 4:
        reason = "fewer than four lines"
    elif spec.field_order is not None:
        reason = "positive characteristic coordinates"
    applicable = reason is None
    note = None
    if slack < 0 and not t.get(d, 0) and not t.get(d - 1, 0) and d >= 4:
        note = "violates the Hirzebruch inequality: not realizable as a complex line arrangement"
    return CertificateReport(kind=HIRZEBRUCH, applicable=applicable,
                             holds=slack >= 0, slack=slack, reason=reason, note=note)


def melchior_check(spec: Spectrum) -> CertificateReport:
    """t_2 >= 3 + sum_{k>3} (k-3) t_k for real arrangements that are not pencils.

    The excess e = t_2 - 3 - sum_{k>3}(k-3) t_k is reported as e_slack even
    when the certificate is inapplicable; a negative excess on a non-pencil
    spectrum certifies that no real line arrangement realizes it.
    """
    d, t, s, _, _ = _complete_counts(spec)
    e = Fraction(_melchior_excess(d, t))
    pencil = t.get(d, 0) == 1
    reason = None
    if not spec.real:
        reason = "spectrum not flagged real"
    elif pencil:
        reason = "concurrent lines (pencil)"
    applicable = reason is None
    note = None
    if e < 0 and not pencil:
        note = "violates the Melchior inequality: not realizable as a real line arrangement"
    return CertificateReport(kind=MELCHIOR, applicable=applicable, holds=e >= 0,
                             slack=e, reason=reason, e_slack=e, note=note)


def main_lower_bound(spec: Spectrum) -> CertificateReport:
    """Case-split lower bound for H on the full singular locus.

    Pencil: h = 0.  Quasi-pencil (a point on d-1 lines): h = -2 + 3/d.
    Otherwise h >= -4 + (2d + t_2 + t_3/4)/s, which is strictly above -4.
    The general case rests on the Hirzebruch inequality, so it is advisory
    only in characteristic 0; the two degenerate cases are combinatorial and
    hold over any field.
    """
    d, t, s, _, _ = _complete_counts(spec)
    h = h_full(spec).h
    reason = None
    if t.get(d, 0) == 1:
        bound = Fraction(0)
        case = "pencil"
    elif t.get(d - 1, 0) == 1:
        bound = Fraction(-2) + Fraction(3, d)
        case = "quasi-pencil"
    else:
        bound = Fraction(-4) + Fraction(2 * d + t.get(2, 0), s) + Fraction(t.get(3, 0), 4 * s)
        case = "general"
        if spec.field_order is not None:
            reason = "positive characteristic coordinates"
    slack = h - bound
    applicable = reason is None
    note = None
    if slack < 0 and case == "general" and spec.field_order is None:
        note = "below the complex lower bound: not realizable as a complex line arrangement"
    return CertificateReport(kind=MAIN_LOWER_BOUND, applicable=applicable,
                             holds=slack >= 0, slack=slack, reason=reason,
                             bound_value=bound, note=note)


def real_identity_and_bound(spec: Spectrum) -> CertificateReport:
    """Exact decomposition of H for real non-concurrent arrangements.

    With e the Melchior excess and S' = sum_{k>=3}(k-2) t_k the identity

        h = d/s - 3 + (e+3)/(e+3+S')

    holds, so h exceeds the never-attained bound -3 + (e+3)/(e+3+S') by
    exactly d/s > 0.  Requires the Melchior inequality to hold.
    """
    d, t, s, _, _ = _complete_counts(spec)
    pencil = t.get(d, 0) == 1
    reason = None
    if not spec.real:
        reason = "spectrum not flagged real"
    elif pencil:
        reason = "concurrent lines (pencil)"
    if reason is not None:
        return CertificateReport(kind=REAL_LOWER_BOUND, applicable=False,
                                 holds=False, slack=Fraction(0), reason=reason)
    e = _melchior_excess(d, t)
    if e < 0:
        raise MelchiorViolated(f"Melchior excess e = {e} is negative")
    sprime = sum((k - 2) * v for k, v in t.items() if k >= 3)
    h = h_full(spec).h
    bound = Fraction(-3) + Fraction(e + 3, e + 3 + sprime)
    identity_rhs = Fraction(d, s) + bound
    assert h == identity_rhs, "real identity failed"
    slack = h - bound
    return CertificateReport(kind=REAL_LOWER_BOUND, applicable=True,
                             holds=slack >= 0, slack=slack,
                             bound_value=bound, e_slack=Fraction(e),
                             note="identity h = d/s - 3 + (e+3)/(e+3+S') verified")


def finite_field_bound(spec: Spectrum, q: int) -> CertificateReport:
    """h > -q - 1 for configurations with coordinates in a field of q elements.

    The full point-line incidence of the projective plane over that field
    attains h = -q with s = d = q^2 + q + 1, which is flagged in the note.
    """
    if not isinstance(q, int) or q < 2:
        raise ValueError("field order must be an integer >= 2")
    d, _, s, _, _ = _complete_counts(spec)
    h = h_full(spec).h
    bound = Fraction(-q - 1)
    slack = h - bound
    note = None
    if s == d == q * q + q + 1 and h == -q:
        note = f"full point-line incidence over the {q}-element field: h = -q"
    return CertificateReport(kind=INDEX_BOUND, applicable=True, holds=slack >= 0,
                             slack=slack, bound_value=bound, note=note)


def mean_multiplicity_bound(x) -> MeanComparison:
    """Compare mbar with the m solving m(m-1) = sum m_i(m_i-1)/s, exactly.

    The average never exceeds that root, with equality iff all multiplicities
    coincide; equivalently h_full = d/s - mbar >= d/s - m.  chain_holds
    records the rearranged inequality.
    """
    d, t, s, sum_m, sum_m_sq = _complete_counts(x)
    mbar = Fraction(sum_m, s)
    c = Fraction(sum_m_sq - sum_m, s)
    ordering = compare_with_surd_mean(mbar, c)
    return MeanComparison(mbar=mbar, c=c, ordering=ordering, chain_holds=ordering <= 0)


def subconfig_formula(h, d: int, d_prime: int, n: int, s: int) -> Fraction:
    """H over the original locus after shrinking d lines to d', each line
    carrying n of the s marked points:  h + (d - d')(n - 1)/s."""
    if not 1 <= d_prime <= d:
        raise InvalidSubsize(f"need 1 <= d' <= d, got d' = {d_prime}, d = {d}")
    if n < 1:
        raise ValueError("points per line must be at least 1")
    if s < 1:
        raise ValueError("s must be at least 1")
    return Fraction(h) + Fraction((d - d_prime) * (n - 1), s)


def pair_removal_from_profile(spec: Spectrum, meeting_multiplicity: int) -> PairRemovalReport:
    """Remove two lines meeting at a point of the given multiplicity.

    Uses the per-line profile: every point on exactly one removed line drops
    by 1, the meeting point drops by 2, everything else is untouched.  Valid
    because the profile asserts all lines look alike.  Reports H both over
    the original point set and over the new full singular locus, with the
    exact new spectrum.
    """
    m = meeting_multiplicity
    if spec.profile is None:
        raise NoIncidenceData("spectrum carries no per-line profile")
    if not spec.complete:
        raise IncompleteLocus("spectrum is not flagged complete")
    if m not in spec.t:
        raise BadMultiplicity(f"no point of multiplicity {m} in the spectrum")
    if spec.d < 3:
        raise InvalidSubsize("need at least three lines to remove two")
    new_counts: Counter = Counter()
    for k, tk in spec.t.items():
        on_removed = 2 * (spec.profile.get(k, 0) - (1 if k == m else 0))
        meeting = 1 if k == m else 0
        if on_removed < 0 or on_removed + meeting > tk:
            raise BadMultiplicity(
                f"profile places more multiplicity-{k} points on the pair than exist")
        new_counts[k] += tk - on_removed - meeting
        new_counts[k - 1] += on_removed
    new_counts[m - 2] += 1
    d_new = spec.d - 2
    s_orig = spec.s
    sum_m = sum(k * v for k, v in new_counts.items())
    sum_sq = sum(k * k * v for k, v in new_counts.items())
    over_original = _report(d_new, s_orig, sum_m, sum_sq, FORMULA_GENERAL)
    new_t = {k: v for k, v in new_counts.items() if k >= 2 and v > 0}
    new_spectrum = Spectrum(d_new, new_t, real=spec.real, complete=True,
                            field_order=spec.field_order)
    return PairRemovalReport(meeting_multiplicity=m,
                             over_original=over_original,
                             over_new=h_full(new_spectrum),
                             new_spectrum=new_spectrum)


def wiman_pair_removal(meeting_multiplicity: int) -> PairRemovalReport:
    """Pair removal for the 45-line Wiman configuration, by meeting multiplicity."""
    if meeting_multiplicity not in (3, 4, 5):
        raise BadMultiplicity(
            f"Wiman points have multiplicity 3, 4, or 5, not {meeting_multiplicity}")
    from .catalog import gen_wiman

    return pair_removal_from_profile(gen_wiman(), meeting_multiplicity)
