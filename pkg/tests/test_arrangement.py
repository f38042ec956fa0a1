import itertools

import pytest

from negarr.arrangement import (
    KEEP_ORIGINAL_POINTS,
    RESTRICT_TO_NEW_SINGULAR,
    CoordArrangement,
    IncidenceStructure,
    PointSet,
    Spectrum,
    abstract_spectrum,
    equidistribution,
    multiplicity,
    remove_lines,
    restrict_to_singular,
    singular_points,
    spectrum_of,
)
from negarr.catalog import gen_fermat, gen_generic, gen_pencil, gen_quasi_pencil
from negarr.errors import (
    EmptyPointSet,
    EmptyResult,
    IdentityViolation,
    NoIncidenceData,
    ProfileInconsistent,
    RemovingAll,
    SingleLine,
)
from negarr.fields import RationalField
from negarr.projective import ProjLine, ProjPoint

Q = RationalField()


def _triangle():
    return CoordArrangement([ProjLine(Q, (1, 0, 0)),
                             ProjLine(Q, (0, 1, 0)),
                             ProjLine(Q, (0, 0, 1))])


def test_pencil_spectrum():
    inc = singular_points(gen_pencil(5))
    sp = spectrum_of(inc)
    assert sp.t == {5: 1}
    assert sp.s == 1
    assert sp.is_pencil()
    assert sp.real and sp.complete


def test_triangle_spectrum():
    sp = spectrum_of(singular_points(_triangle()))
    assert sp.t == {2: 3}
    assert sp.profile == {2: 2}


def test_quasi_pencil_spectrum():
    for d in (3, 5, 8):
        sp = spectrum_of(singular_points(gen_quasi_pencil(d)))
        assert sp.t == {2: d - 1, d - 1: 1} if d > 3 else sp.t


def test_quasi_pencil_small():
    # d = 3 collapses to a triangle of a different shape: t = {2: 3}
    sp = spectrum_of(singular_points(gen_quasi_pencil(3)))
    assert sp.t == {2: 3}


def test_fermat3_locus():
    inc = singular_points(gen_fermat(3))
    sp = spectrum_of(inc)
    assert sp.t == {3: 12}
    assert sp.profile == {3: 4}
    assert not sp.real
    assert sp.complete
    assert sp.field_order is None


def test_fermat4_locus():
    sp = spectrum_of(singular_points(gen_fermat(4)))
    assert sp.t == {3: 16, 4: 3}
    assert sp.s == 19


def test_single_line_rejected():
    with pytest.raises(SingleLine):
        singular_points(CoordArrangement([ProjLine(Q, (1, 0, 0))]))


def test_duplicate_lines_rejected():
    with pytest.raises(ValueError):
        CoordArrangement([ProjLine(Q, (1, 0, 0)), ProjLine(Q, (2, 0, 0))])


def test_multiplicity_lookup():
    arr = _triangle()
    assert multiplicity(arr, ProjPoint(Q, (0, 0, 1))) == 2
    assert multiplicity(arr, ProjPoint(Q, (1, 1, 1))) == 0
    assert multiplicity(arr, ProjPoint(Q, (1, 1, 0))) == 1


def test_point_set_validation():
    with pytest.raises(EmptyPointSet):
        PointSet([])
    p = ProjPoint(Q, (1, 1, 1))
    with pytest.raises(ValueError):
        PointSet([p, ProjPoint(Q, (2, 2, 2))])


def test_restrict_to_singular():
    arr = _triangle()
    pts = PointSet([ProjPoint(Q, (0, 0, 1)), ProjPoint(Q, (1, 1, 1))])
    kept = restrict_to_singular(pts, arr)
    assert list(kept) == [ProjPoint(Q, (0, 0, 1))]
    with pytest.raises(EmptyResult):
        restrict_to_singular(PointSet([ProjPoint(Q, (1, 1, 1))]), arr)


def test_abstract_spectrum_identity_check():
    sp = abstract_spectrum(9, {3: 12})
    assert sp.s == 12
    with pytest.raises(IdentityViolation):
        abstract_spectrum(9, {3: 11})
    # incomplete spectra skip the identity
    partial = abstract_spectrum(9, {3: 11}, complete=False)
    assert not partial.complete


def test_spectrum_validation():
    with pytest.raises(ProfileInconsistent):
        Spectrum(9, {3: 12}, profile={3: 5})
    with pytest.raises(ProfileInconsistent):
        Spectrum(9, {3: 12}, profile={4: 4})
    with pytest.raises(ValueError):
        Spectrum(9, {1: 3, 3: 12})
    with pytest.raises(ValueError):
        Spectrum(9, {3: -1})
    with pytest.raises(ValueError):
        Spectrum(0, {})
    # zero counts are dropped, not stored
    sp = Spectrum(9, {3: 12, 5: 0})
    assert sp.t == {3: 12}


def test_incidence_structure_validation():
    with pytest.raises(ValueError):
        IncidenceStructure((0, 1), [("p", frozenset({0, 2}))], complete=False)
    with pytest.raises(IdentityViolation):
        IncidenceStructure((0, 1, 2), [("p", frozenset({0, 1}))], complete=True)
    ok = IncidenceStructure((0, 1, 2), [("p", frozenset({0, 1}))], complete=False)
    assert ok.multiplicities() == [2]


def test_remove_lines_matches_recomputation():
    # removal bookkeeping must agree with recomputing the subarrangement
    arrangements = [gen_fermat(3), gen_fermat(4), gen_fermat(5),
                    gen_generic(4), gen_generic(6), gen_generic(8)]
    for arr in arrangements:
        inc = singular_points(arr)
        labels = list(range(arr.d))
        subsets = [(i,) for i in labels] + list(itertools.combinations(labels[:5], 2))
        for sub in subsets:
            restricted = remove_lines(inc, sub, RESTRICT_TO_NEW_SINGULAR)
            direct = singular_points(arr.without(sub))
            got = dict(zip([k for k, _ in restricted.points],
                           [len(m) for _, m in restricted.points]))
            want = dict(zip([k for k, _ in direct.points],
                            [len(m) for _, m in direct.points]))
            assert got == want, (arr.d, sub)
            assert spectrum_of(restricted).t == spectrum_of(direct).t


def test_remove_lines_keep_policy():
    inc = singular_points(gen_fermat(3))
    kept = remove_lines(inc, [0], KEEP_ORIGINAL_POINTS)
    # the original twelve points stay, some now with multiplicity below two
    assert len(kept.points) == 12
    assert not kept.complete
    mults = sorted(kept.multiplicities())
    assert mults == [2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]


def test_remove_lines_errors():
    inc = singular_points(_triangle())
    with pytest.raises(RemovingAll):
        remove_lines(inc, [0, 1, 2], RESTRICT_TO_NEW_SINGULAR)
    with pytest.raises(ValueError):
        remove_lines(inc, [5], RESTRICT_TO_NEW_SINGULAR)
    with pytest.raises(ValueError):
        remove_lines(inc, [0], "bogus_policy")
    with pytest.raises(EmptyResult):
        remove_lines(inc, [0, 1], RESTRICT_TO_NEW_SINGULAR)


def test_equidistribution():
    for n in (3, 4, 5):
        assert equidistribution(singular_points(gen_fermat(n))) == n + 1
    assert equidistribution(singular_points(gen_quasi_pencil(6))) is None
    sp = Spectrum(45, {3: 120, 4: 45, 5: 36}, profile={3: 8, 4: 4, 5: 4})
    assert equidistribution(sp) == 16
    with pytest.raises(NoIncidenceData):
        equidistribution(Spectrum(45, {3: 120, 4: 45, 5: 36}))


def test_profile_derivation_uniform_only():
    sp = spectrum_of(singular_points(gen_quasi_pencil(6)))
    assert sp.profile is None
    sp3 = spectrum_of(singular_points(gen_fermat(3)))
    assert sp3.profile == {3: 4}


def test_rational_coordinates_are_real():
    arr = _triangle()
    assert arr.real
    sp = spectrum_of(singular_points(arr))
    assert sp.real


def test_member_sets_match_direct_multiplicity():
    arr = gen_generic(5)
    inc = singular_points(arr)
    for key, members in inc.points:
        assert multiplicity(arr, key) == len(members)
        for i in members:
            from negarr.projective import incident
            assert incident(key, arr.lines[i])
