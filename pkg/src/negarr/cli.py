"""Command line interface: generate catalog items, analyze inputs, study
subconfigurations, and search removals.

File formats (lines starting with # and blank lines are ignored):

Coordinates:
    field Q                     or: field GF 7
                                    field EXT Q [1,1,1]
                                    field EXT (GF 2) [1,1,1]
    line 1 0 -1                 one row per line, three exact literals
    flags real                  optional; rational coordinates are always real
    note free text              optional, repeatable

Spectrum:
    spectrum d=45
    t 3 120                     one row per multiplicity
    profile 3 8                 optional per-line profile rows
    flags real complete         when omitted: not real, complete
    order 9                     coordinate field size, when finite
    note free text              optional, repeatable

Points (for analyze --points FILE):
    field Q
    point 1 1 1

Element literals: rationals like -3 or 5/6, prime-field residues like 4,
extension elements as coefficient vectors like [0,1] (no spaces inside).

Every rational in a report is printed exactly and as a 4-significant-digit
decimal; --json mirrors the report with rationals as {"num": p, "den": q}.
Reports are byte-deterministic for identical inputs and flags.

Exit codes: 0 all applicable certificates hold, 1 some applicable
certificate fails, 2 input error.  The search budget defaults to 10^7
candidate subsets and can be overridden with --budget or NEGARR_BUDGET.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from fractions import Fraction
from math import comb

from .arrangement import (
    KEEP_ORIGINAL_POINTS,
    RESTRICT_TO_NEW_SINGULAR,
    CoordArrangement,
    PointSet,
    Spectrum,
    equidistribution,
    remove_lines,
    restrict_to_singular,
    singular_points,
    spectrum_of,
)
from .catalog import catalog_entry
from .errors import (
    EmptyResult,
    NegarrError,
    NoIncidenceData,
    NotEquidistributed,
    ParseError,
    RemovingAll,
    SearchTooLarge,
)
from .fields import ExtensionField, Field, PrimeField, RationalField
from .negativity import (
    REAL_LOWER_BOUND,
    CertificateReport,
    finite_field_bound,
    h_at_points,
    h_curve,
    h_full,
    h_quadratic,
    hirzebruch_check,
    main_lower_bound,
    mean_multiplicity_bound,
    melchior_check,
    pair_removal_from_profile,
    real_identity_and_bound,
    subconfig_formula,
)
from .projective import ProjLine, ProjPoint

DEFAULT_BUDGET = 10_000_000


# ---- rational rendering ----

def fmt_q(value) -> str:
    fr = Fraction(value)
    return f"{fr} ({float(fr):.4g})"


def _q_json(value) -> dict:
    fr = Fraction(value)
    return {"num": fr.numerator, "den": fr.denominator}


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


_ORDER_NAMES = {-1: "less", 0: "equal", 1: "greater"}


# ---- element and field descriptor parsing ----

def _split_top(text: str):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ParseError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur))
    return parts


def parse_element(field: Field, token: str):
    """One exact element literal, in the syntax format_rep emits."""
    try:
        if isinstance(field, RationalField):
            return field.element(Fraction(token))
        if isinstance(field, PrimeField):
            return field.element(int(token))
        if isinstance(field, ExtensionField):
            if token.startswith("[") and token.endswith("]"):
                parts = _split_top(token[1:-1])
                if len(parts) > field.degree:
                    raise ParseError(f"vector {token!r} longer than degree {field.degree}")
                reps = [parse_element(field.base, p).value for p in parts]
                return field.element(reps)
            return field.element(int(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad element literal {token!r} for {field!r}: {exc}") from None
    raise ParseError(f"unsupported field {field!r}")


def _tokenize_field(text: str):
    out, i = [], 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            out.append(ch)
            i += 1
        elif ch == "[":
            depth, j = 0, i
            while j < len(text):
                if text[j] == "[":
                    depth += 1
                elif text[j] == "]":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if depth:
                raise ParseError(f"unbalanced brackets in field descriptor {text!r}")
            out.append(text[i:j + 1].replace(" ", ""))
            i = j + 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()[":
                j += 1
            out.append(text[i:j])
            i = j
    return out


def _parse_descriptor(tokens):
    if not tokens:
        raise ParseError("empty field descriptor")
    head = tokens[0]
    if head == "Q":
        return RationalField(), tokens[1:]
    if head == "GF":
        if len(tokens) < 2:
            raise ParseError("GF needs a prime")
        try:
            p = int(tokens[1])
        except ValueError:
            raise ParseError(f"bad prime {tokens[1]!r}") from None
        return PrimeField(p), tokens[2:]
    if head == "EXT":
        rest = tokens[1:]
        if not rest:
            raise ParseError("EXT needs a base field and a modulus")
        if rest[0] == "(":
            base, rest = _parse_descriptor(rest[1:])
            if not rest or rest[0] != ")":
                raise ParseError("unbalanced parentheses in field descriptor")
            rest = rest[1:]
        else:
            base, rest = _parse_descriptor(rest)
        if not rest or not rest[0].startswith("["):
            raise ParseError("EXT modulus must be a bracketed coefficient vector")
        coeffs = [parse_element(base, p).value for p in _split_top(rest[0][1:-1])]
        return ExtensionField(base, coeffs), rest[1:]
    raise ParseError(f"unknown field descriptor {head!r}")


def parse_field(text: str) -> Field:
    field, rest = _parse_descriptor(_tokenize_field(text))
    if rest:
        raise ParseError(f"trailing tokens in field descriptor: {rest}")
    return field


# ---- input files ----

class InputFile:
    __slots__ = ("kind", "arrangement", "spectrum", "points", "notes")

    def __init__(self, kind, arrangement=None, spectrum=None, points=None, notes=()):
        self.kind = kind
        self.arrangement = arrangement
        self.spectrum = spectrum
        self.points = points
        self.notes = list(notes)


def parse_input(text: str) -> InputFile:
    field = None
    line_rows, point_rows, notes = [], [], []
    spec_d = None
    t, profile = {}, {}
    real, complete, order = False, True, None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]
        if key == "note":
            notes.append(line[len("note"):].strip())
        elif key == "field":
            field = parse_field(line[len("field"):])
        elif key == "line":
            line_rows.append(tokens[1:])
        elif key == "point":
            point_rows.append(tokens[1:])
        elif key == "spectrum":
            if len(tokens) != 2 or not tokens[1].startswith("d="):
                raise ParseError(f"expected 'spectrum d=N', got {line!r}")
            spec_d = _int_of(tokens[1][2:], "line count")
        elif key == "t":
            if len(tokens) != 3:
                raise ParseError(f"expected 't K COUNT', got {line!r}")
            t[_int_of(tokens[1], "multiplicity")] = _int_of(tokens[2], "count")
        elif key == "profile":
            if len(tokens) != 3:
                raise ParseError(f"expected 'profile K COUNT', got {line!r}")
            profile[_int_of(tokens[1], "multiplicity")] = _int_of(tokens[2], "count")
        elif key == "flags":
            real = "real" in tokens[1:]
            complete = "complete" in tokens[1:]
            for tok in tokens[1:]:
                if tok not in ("real", "complete"):
                    raise ParseError(f"unknown flag {tok!r}")
        elif key == "order":
            if len(tokens) != 2:
                raise ParseError(f"expected 'order Q', got {line!r}")
            order = _int_of(tokens[1], "field order")
        else:
            raise ParseError(f"unknown directive {key!r}")
    if spec_d is not None:
        if line_rows or point_rows:
            raise ParseError("a file holds either a spectrum or coordinates, not both")
        if not t:
            raise ParseError("spectrum block has no t rows")
        sp = Spectrum(spec_d, t, real=real, complete=complete,
                      profile=profile or None, field_order=order)
        return InputFile("spectrum", spectrum=sp, notes=notes)
    if line_rows and point_rows:
        raise ParseError("a file holds either line rows or point rows, not both")
    if line_rows:
        if field is None:
            raise ParseError("coordinates need a field row")
        lines = []
        for row in line_rows:
            if len(row) != 3:
                raise ParseError(f"line rows need three entries, got {row}")
            lines.append(ProjLine(field, tuple(parse_element(field, tok) for tok in row)))
        arr_real = True if isinstance(field, RationalField) else real
        return InputFile("coordinates",
                         arrangement=CoordArrangement(lines, real=arr_real),
                         notes=notes)
    if point_rows:
        if field is None:
            raise ParseError("points need a field row")
        pts = []
        for row in point_rows:
            if len(row) != 3:
                raise ParseError(f"point rows need three entries, got {row}")
            pts.append(ProjPoint(field, tuple(parse_element(field, tok) for tok in row)))
        return InputFile("points", points=PointSet(pts), notes=notes)
    raise ParseError("input holds no lines, points, or spectrum")


def _int_of(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"bad {what} {text!r}") from None


def read_input(path: str) -> InputFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_input(fh.read())


def render_coords(arr: CoordArrangement, notes=()) -> str:
    rows = [f"field {arr.field.describe()}"]
    for l in arr.lines:
        rows.append("line " + " ".join(arr.field.format_rep(c.value) for c in l.coeffs))
    if arr.real and not isinstance(arr.field, RationalField):
        rows.append("flags real")
    for note in notes:
        rows.append(f"note {note}")
    return "\n".join(rows) + "\n"


def render_spectrum(sp: Spectrum, notes=()) -> str:
    rows = [f"spectrum d={sp.d}"]
    for k, v in sorted(sp.t.items()):
        rows.append(f"t {k} {v}")
    if sp.profile:
        for k, v in sorted(sp.profile.items()):
            rows.append(f"profile {k} {v}")
    flags = ["flags"]
    if sp.real:
        flags.append("real")
    if sp.complete:
        flags.append("complete")
    rows.append(" ".join(flags))
    if sp.field_order is not None:
        rows.append(f"order {sp.field_order}")
    for note in notes:
        rows.append(f"note {note}")
    return "\n".join(rows) + "\n"


# ---- report pieces ----

def _h_text(label: str, rep) -> str:
    return (f"{label} = {fmt_q(rep.h)}  [{rep.formula}; d={rep.d}, s={rep.s}, "
            f"sum_m={rep.sum_m}, sum_m_sq={rep.sum_m_sq}, mbar={fmt_q(rep.mbar)}]")


def _h_json(rep) -> dict:
    return {"h": _q_json(rep.h), "d": rep.d, "s": rep.s, "sum_m": rep.sum_m,
            "sum_m_sq": rep.sum_m_sq, "mbar": _q_json(rep.mbar), "formula": rep.formula}


def _cert_text(c: CertificateReport) -> str:
    head = f"{c.kind}: "
    head += "holds" if (c.applicable and c.holds) else (
        f"not applicable ({c.reason})" if not c.applicable else "FAILS")
    parts = [head, f"slack = {fmt_q(c.slack)}"]
    if c.bound_value is not None:
        parts.append(f"bound = {fmt_q(c.bound_value)}")
    if c.e_slack is not None:
        parts.append(f"e = {fmt_q(c.e_slack)}")
    if c.note:
        parts.append(c.note)
    return "; ".join(parts)


def _cert_json(c: CertificateReport) -> dict:
    return {
        "kind": c.kind,
        "applicable": c.applicable,
        "holds": c.holds,
        "slack": _q_json(c.slack),
        "reason": c.reason,
        "bound": None if c.bound_value is None else _q_json(c.bound_value),
        "e": None if c.e_slack is None else _q_json(c.e_slack),
        "note": c.note,
    }


def _spectrum_json(sp: Spectrum) -> dict:
    return {
        "d": sp.d,
        "s": sp.s,
        "t": [[k, v] for k, v in sorted(sp.t.items())],
        "profile": None if sp.profile is None else [[k, v] for k, v in sorted(sp.profile.items())],
        "real": sp.real,
        "complete": sp.complete,
        "field_order": sp.field_order,
    }


def certificates_for(sp: Spectrum):
    """The applicable certificate battery for one complete spectrum."""
    certs = [hirzebruch_check(sp), melchior_check(sp), main_lower_bound(sp)]
    mel = certs[1]
    if sp.real and not sp.is_pencil() and not mel.holds:
        certs.append(CertificateReport(kind=REAL_LOWER_BOUND, applicable=False,
                                       holds=False, slack=Fraction(0),
                                       reason="Melchior inequality violated"))
    else:
        certs.append(real_identity_and_bound(sp))
    if sp.field_order is not None:
        certs.append(finite_field_bound(sp, sp.field_order))
    return certs


def _status(certs) -> int:
    return 1 if any(c.applicable and not c.holds for c in certs) else 0


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text)


# ---- commands ----

def _parse_item(item: str):
    name, _, rest = item.partition(":")
    entry = catalog_entry(name)
    if rest:
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise ParseError(f"catalog parameters must be integers: {rest!r}") from None
    else:
        params = ()
    if len(params) != entry.arity:
        names = ",".join(entry.param_names) or "none"
        raise ParseError(f"{name} takes parameters ({names}), got {len(params)}")
    return entry, params


def cmd_generate(args) -> int:
    entry, params = _parse_item(args.item)
    fmt = args.format or ("coords" if entry.kind == "coordinates" else "spectrum")
    notes = [entry.note] if entry.note else []
    if fmt == "coords":
        if entry.kind == "coordinates":
            arr = entry.build(*params)
        elif entry.coords is not None:
            arr = entry.coords(*params)
        else:
            raise ParseError(f"{entry.name} has no coordinate model")
        content = render_coords(arr, notes)
    else:
        obj = entry.build(*params)
        sp = obj if isinstance(obj, Spectrum) else spectrum_of(singular_points(obj))
        content = render_spectrum(sp, notes)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(content)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(content)
    return 0


def _analyze_points(args, arr: CoordArrangement, pts: PointSet, source: str) -> int:
    given = h_at_points(arr, pts)
    rows = [("given points", given)]
    notes = []
    try:
        restricted = restrict_to_singular(pts, arr)
        rest_rep = h_at_points(arr, restricted)
        rows.append(("restricted to singular points", rest_rep))
        if given.h <= -1 and rest_rep.h <= given.h:
            notes.append("restriction to singular points did not increase H")
    except EmptyResult:
        notes.append("none of the given points is singular")
    text_lines = [f"input: {source} (coordinates over {arr.field.describe()}), "
                  f"{len(pts)} given points"]
    for label, rep in rows:
        text_lines.append(_h_text(f"H {label}", rep))
    for n in notes:
        text_lines.append(f"note: {n}")
    text_lines.append("status: ok")
    payload = {
        "source": source,
        "field": arr.field.describe(),
        "h": {label: _h_json(rep) for label, rep in rows},
        "notes": notes,
        "status": 0,
    }
    _emit(args, "\n".join(text_lines) + "\n", payload)
    return 0


def cmd_analyze(args) -> int:
    inp = read_input(args.path)
    if inp.kind == "points":
        raise ParseError("a points file cannot be analyzed on its own")
    if inp.kind == "coordinates":
        arr = inp.arrangement
        if args.points != "full":
            pts_inp = read_input(args.points)
            if pts_inp.kind != "points":
                raise ParseError(f"{args.points} is not a points file")
            return _analyze_points(args, arr, pts_inp.points, args.path)
        inc = singular_points(arr)
        sp = spectrum_of(inc)
        per_line = equidistribution(inc)
        field_desc = arr.field.describe()
    else:
        sp = inp.spectrum
        per_line = sum(sp.profile.values()) if sp.profile else None
        field_desc = None
    full = h_full(sp)
    curve = h_curve(sp)
    mean = mean_multiplicity_bound(sp)
    certs = certificates_for(sp)
    status = _status(certs)
    notes = list(inp.notes)

    text_lines = []
    origin = f"coordinates over {field_desc}" if field_desc else "abstract spectrum"
    text_lines.append(f"input: {args.path} ({origin})")
    text_lines.append(f"d = {sp.d}  s = {sp.s}")
    text_lines.append("spectrum: " + "  ".join(f"t_{k}={v}" for k, v in sorted(sp.t.items())))
    if sp.profile:
        text_lines.append("per-line profile: "
                          + "  ".join(f"{k}:{v}" for k, v in sorted(sp.profile.items())))
    if per_line is not None:
        text_lines.append(f"points per line: {per_line}")
    flag_bits = [f"real: {_yn(sp.real)}", f"complete: {_yn(sp.complete)}"]
    if sp.field_order is not None:
        flag_bits.append(f"field order: {sp.field_order}")
    text_lines.append("  ".join(flag_bits))
    text_lines.append(_h_text("H full locus", full))
    text_lines.append(f"H curve = {fmt_q(curve.h)}; infimum h <= -1 attained: "
                      f"{_yn(curve.infimum_attained)}")
    text_lines.append(f"mean bound: mbar = {fmt_q(mean.mbar)}, c = {fmt_q(mean.c)}, "
                      f"ordering = {_ORDER_NAMES[mean.ordering]}, "
                      f"chain holds: {_yn(mean.chain_holds)}")
    text_lines.append("certificates:")
    for c in certs:
        text_lines.append("  " + _cert_text(c))
    if notes:
        text_lines.append("notes:")
        for n in notes:
            text_lines.append(f"  - {n}")
    text_lines.append(f"status: {'ok' if status == 0 else 'certificate failure'}")

    payload = {
        "source": args.path,
        "field": field_desc,
        "spectrum": _spectrum_json(sp),
        "points_per_line": per_line,
        "h_full": _h_json(full),
        "h_curve": {**_h_json(curve), "infimum_attained": curve.infimum_attained},
        "mean_check": {"mbar": _q_json(mean.mbar), "c": _q_json(mean.c),
                       "ordering": _ORDER_NAMES[mean.ordering],
                       "chain_holds": mean.chain_holds},
        "certificates": [_cert_json(c) for c in certs],
        "notes": notes,
        "status": status,
    }
    _emit(args, "\n".join(text_lines) + "\n", payload)
    return status


def _parse_indices(text: str, d: int):
    try:
        indices = sorted({int(x) for x in text.split(",")})
    except ValueError:
        raise ParseError(f"bad index list {text!r}") from None
    for i in indices:
        if not 0 <= i < d:
            raise ParseError(f"line index {i} out of range 0..{d - 1}")
    if not indices:
        raise ParseError("no indices given")
    return indices


def _subconfig_remove(args, inp: InputFile) -> int:
    if inp.kind != "coordinates":
        raise NoIncidenceData("removal by line index needs coordinates, not a bare spectrum")
    arr = inp.arrangement
    inc = singular_points(arr)
    sp0 = spectrum_of(inc)
    removed = _parse_indices(args.remove, arr.d)
    if len(removed) == arr.d:
        raise RemovingAll("cannot remove every line")
    kept = remove_lines(inc, removed, KEEP_ORIGINAL_POINTS)
    h_orig = h_quadratic(kept)
    d_new = arr.d - len(removed)
    try:
        restricted = remove_lines(inc, removed, RESTRICT_TO_NEW_SINGULAR)
        sp_new = spectrum_of(restricted)
        h_new = h_full(sp_new)
    except EmptyResult:
        sp_new, h_new = None, None

    # direct recomputation from coordinates
    sub = arr.without(removed)
    direct = h_at_points(sub, [key for key, _ in inc.points])
    assert direct.h == h_orig.h, "incidence bookkeeping disagrees with recomputation"
    if sub.d >= 2:
        inc2 = singular_points(sub)
        assert sp_new is not None
        assert ({k: len(m) for k, m in inc2.points}
                == {k: len(m) for k, m in restricted.points}), \
            "restricted locus disagrees with recomputation"

    per_line = equidistribution(inc)
    formula_val = None
    if per_line is not None:
        formula_val = subconfig_formula(h_full(sp0).h, arr.d, d_new, per_line, sp0.s)
        assert formula_val == h_orig.h, "equidistributed removal formula disagrees"

    certs = certificates_for(sp_new) if sp_new is not None else []
    status = _status(certs)

    text_lines = [f"input: {args.path} (coordinates over {arr.field.describe()})"]
    text_lines.append(f"removed lines: {removed}  (d: {arr.d} -> {d_new})")
    text_lines.append(_h_text("H over original locus", h_orig))
    if h_new is not None:
        text_lines.append(_h_text("H over new singular locus", h_new))
        text_lines.append("new spectrum: "
                          + "  ".join(f"t_{k}={v}" for k, v in sorted(sp_new.t.items()))
                          + f"  (s = {sp_new.s})")
    else:
        text_lines.append("new singular locus: empty (a single line remains)")
    if formula_val is not None:
        text_lines.append(f"formula route (n = {per_line}): {fmt_q(formula_val)}; "
                          "agrees with quadratic over original locus: yes")
    else:
        text_lines.append("formula route: skipped (lines carry varying point counts)")
    text_lines.append("direct recomputation: consistent")
    if certs:
        text_lines.append("certificates (new singular locus):")
        for c in certs:
            text_lines.append("  " + _cert_text(c))
    text_lines.append(f"status: {'ok' if status == 0 else 'certificate failure'}")

    payload = {
        "source": args.path,
        "removed": removed,
        "d": arr.d,
        "d_new": d_new,
        "h_over_original": _h_json(h_orig),
        "h_over_new": None if h_new is None else _h_json(h_new),
        "new_spectrum": None if sp_new is None else _spectrum_json(sp_new),
        "formula_h": None if formula_val is None else _q_json(formula_val),
        "points_per_line": per_line,
        "consistent": True,
        "certificates": [_cert_json(c) for c in certs],
        "status": status,
    }
    _emit(args, "\n".join(text_lines) + "\n", payload)
    return status


def _subconfig_pairs(args, inp: InputFile) -> int:
    m = args.pairs_meeting
    direct_pair = None
    if inp.kind == "coordinates":
        inc = singular_points(inp.arrangement)
        sp = spectrum_of(inc)
        if sp.profile is None:
            raise NotEquidistributed(
                "per-line point profiles differ; profile-based pair removal unavailable")
    else:
        inc = None
        sp = inp.spectrum
    rep = pair_removal_from_profile(sp, m)
    if inc is not None:
        for key, members in inc.points:
            if len(members) == m:
                direct_pair = sorted(members)[:2]
                break
        assert direct_pair is not None
        kept = remove_lines(inc, direct_pair, KEEP_ORIGINAL_POINTS)
        assert h_quadratic(kept).h == rep.over_original.h, \
            "profile-based removal disagrees with direct removal"
        restricted = remove_lines(inc, direct_pair, RESTRICT_TO_NEW_SINGULAR)
        assert spectrum_of(restricted).t == rep.new_spectrum.t, \
            "profile-based spectrum disagrees with direct removal"
    certs = certificates_for(rep.new_spectrum)
    status = _status(certs)

    source_desc = ("coordinates over " + inp.arrangement.field.describe()
                   if inp.kind == "coordinates" else "abstract spectrum")
    text_lines = [f"input: {args.path} ({source_desc})"]
    text_lines.append(f"pair removal at a multiplicity-{m} point  (d: {sp.d} -> {sp.d - 2})")
    text_lines.append(_h_text("H over original locus", rep.over_original))
    text_lines.append(_h_text("H over new singular locus", rep.over_new))
    text_lines.append("new spectrum: "
                      + "  ".join(f"t_{k}={v}" for k, v in sorted(rep.new_spectrum.t.items()))
                      + f"  (s = {rep.new_spectrum.s})")
    if direct_pair is not None:
        text_lines.append(f"direct removal of lines {direct_pair}: consistent")
    text_lines.append("certificates (new singular locus):")
    for c in certs:
        text_lines.append("  " + _cert_text(c))
    text_lines.append(f"status: {'ok' if status == 0 else 'certificate failure'}")

    payload = {
        "source": args.path,
        "meeting_multiplicity": m,
        "d": sp.d,
        "d_new": sp.d - 2,
        "h_over_original": _h_json(rep.over_original),
        "h_over_new": _h_json(rep.over_new),
        "new_spectrum": _spectrum_json(rep.new_spectrum),
        "direct_pair": direct_pair,
        "certificates": [_cert_json(c) for c in certs],
        "status": status,
    }
    _emit(args, "\n".join(text_lines) + "\n", payload)
    return status


def _subconfig_formula_cmd(args, inp: InputFile) -> int:
    parts = args.formula.split(",")
    if len(parts) not in (1, 2):
        raise ParseError(f"expected D or D,N after --formula, got {args.formula!r}")
    d_prime = _int_of(parts[0], "subconfiguration size")
    n_given = _int_of(parts[1], "points per line") if len(parts) == 2 else None
    if inp.kind == "coordinates":
        inc = singular_points(inp.arrangement)
        sp = spectrum_of(inc)
        per_line = equidistribution(inc)
    else:
        sp = inp.spectrum
        per_line = sum(sp.profile.values()) if sp.profile else None
    n = n_given if n_given is not None else per_line
    if n is None:
        raise NotEquidistributed(
            "points per line unknown; give it explicitly as --formula D,N")
    h0 = h_full(sp).h
    value = subconfig_formula(h0, sp.d, d_prime, n, sp.s)

    text_lines = [f"input: {args.path}"]
    text_lines.append(f"formula route: d = {sp.d}, d' = {d_prime}, n = {n}, s = {sp.s}")
    text_lines.append(f"H over original locus = h + (d-d')(n-1)/s = {fmt_q(value)}")
    text_lines.append("status: ok")
    payload = {
        "source": args.path,
        "d": sp.d,
        "d_prime": d_prime,
        "n": n,
        "s": sp.s,
        "h_full": _q_json(h0),
        "h_formula": _q_json(value),
        "status": 0,
    }
    _emit(args, "\n".join(text_lines) + "\n", payload)
    return 0


def cmd_subconfig(args) -> int:
    inp = read_input(args.path)
    if args.remove is not None:
        return _subconfig_remove(args, inp)
    if args.pairs_meeting is not None:
        return _subconfig_pairs(args, inp)
    return _subconfig_formula_cmd(args, inp)


def cmd_search(args) -> int:
    inp = read_input(args.path)
    if inp.kind != "coordinates":
        raise NoIncidenceData("search needs coordinates, not a bare spectrum")
    arr = inp.arrangement
    inc = singular_points(arr)
    d = arr.d
    max_remove = min(args.max_remove, d - 1)
    if max_remove < 1:
        raise ParseError("nothing to remove")
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get("NEGARR_BUDGET", DEFAULT_BUDGET))
    total = sum(comb(d, j) for j in range(1, max_remove + 1))
    if total > budget:
        raise SearchTooLarge(f"{total} candidate subsets exceed the budget of {budget}")

    best = None  # (h, subset, spectrum)
    evaluated = no_singular = prunable = 0
    for size in range(1, max_remove + 1):
        for combo in itertools.combinations(range(d), size):
            try:
                restricted = remove_lines(inc, combo, RESTRICT_TO_NEW_SINGULAR)
            except EmptyResult:
                no_singular += 1
                continue
            sp2 = spectrum_of(restricted)
            h2 = h_full(sp2).h
            evaluated += 1
            if (best is not None and sp2.field_order is None
                    and main_lower_bound(sp2).bound_value > best[0]):
                prunable += 1
            if best is None or h2 < best[0] or (h2 == best[0] and combo < best[1]):
                best = (h2, combo, sp2)

    text_lines = [f"input: {args.path} (coordinates over {arr.field.describe()})"]
    text_lines.append(f"search: removal subsets of size 1..{max_remove} of {d} lines; "
                      f"objective {args.objective}")
    text_lines.append(f"candidates: {total} within budget {budget}; evaluated {evaluated}, "
                      f"without singular points {no_singular}, "
                      f"prunable by lower bound {prunable}")
    if best is None:
        text_lines.append("no subarrangement retains a singular point")
        text_lines.append("status: ok")
        payload = {"source": args.path, "best": None, "evaluated": evaluated,
                   "budget": budget, "status": 0}
        _emit(args, "\n".join(text_lines) + "\n", payload)
        return 0
    h_best, combo, sp_best = best
    certs = certificates_for(sp_best)
    status = _status(certs)
    text_lines.append(f"best removal: {list(combo)}  (d' = {d - len(combo)})")
    text_lines.append(f"H over new singular locus = {fmt_q(h_best)}")
    text_lines.append("new spectrum: "
                      + "  ".join(f"t_{k}={v}" for k, v in sorted(sp_best.t.items()))
                      + f"  (s = {sp_best.s})")
    text_lines.append("certificates (best subarrangement):")
    for c in certs:
        text_lines.append("  " + _cert_text(c))
    text_lines.append(f"status: {'ok' if status == 0 else 'certificate failure'}")
    payload = {
        "source": args.path,
        "objective": args.objective,
        "max_remove": max_remove,
        "budget": budget,
        "candidates": total,
        "evaluated": evaluated,
        "no_singular": no_singular,
        "prunable": prunable,
        "best": {
            "removed": list(combo),
            "d_new": d - len(combo),
            "h": _q_json(h_best),
            "spectrum": _spectrum_json(sp_best),
        },
        "certificates": [_cert_json(c) for c in certs],
        "status": status,
    }
    _emit(args, "\n".join(text_lines) + "\n", payload)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negarr",
        description="Exact negativity analysis of line arrangements in the projective plane.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a catalog item as a file")
    g.add_argument("item", help="catalog name, e.g. fermat:4, cubicgroup:12,3, klein")
    g.add_argument("--format", choices=("coords", "spectrum"), default=None,
                   help="output kind (default: the generator's natural kind)")
    g.add_argument("--out", help="output path (default: stdout)")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="full H-constant and certificate report")
    a.add_argument("path", help="coordinates or spectrum file")
    a.add_argument("--points", default="full", metavar="full|FILE",
                   help="evaluate over the full singular locus or a points file")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("subconfig", help="subconfiguration H values")
    s.add_argument("path")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--remove", metavar="I,J,...",
                     help="remove lines by 0-based index (coordinates input)")
    grp.add_argument("--pairs-meeting", type=int, metavar="M",
                     help="remove two lines meeting at a multiplicity-M point "
                          "(needs a per-line profile)")
    grp.add_argument("--formula", metavar="D[,N]",
                     help="evaluate h + (d-d')(n-1)/s for d' = D")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_subconfig)

    r = sub.add_parser("search", help="minimize H over removal subsets")
    r.add_argument("path")
    r.add_argument("--max-remove", type=int, default=3, metavar="R")
    r.add_argument("--objective", choices=("min-h",), default="min-h")
    r.add_argument("--budget", type=int, default=None,
                   help=f"candidate limit (default {DEFAULT_BUDGET} or NEGARR_BUDGET)")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NegarrError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())
