import pytest

from heegaard_lab.handlebody import (
    CutSystem,
    InvalidCutSystem,
    SignedWord,
    boundary_word,
    bounds_disk,
    enumerate_disk_boundaries,
    lens_space,
    s2_x_s1,
    s3_genus1,
    standard_diagram,
    validate_cut_system,
)
from heegaard_lab.surface import (
    CurveClass,
    ModelSurface,
    geometric_intersection,
)

COMMUTATOR_CURVE = CurveClass(2, (2, 2, 2, 0, 2, 2, 4, 2, 2))


def oracle_reduce(letters):
    """Independent free+cyclic reduction: brute-force scan for cancelling
    neighbors in the cyclic word until none remain."""
    word = list(letters)
    changed = True
    while changed and word:
        changed = False
        n = len(word)
        for i in range(n):
            j = (i + 1) % n
            if i != j and word[i][0] == word[j][0] \
                    and word[i][1] == -word[j][1]:
                for k in sorted((i, j), reverse=True):
                    word.pop(k)
                changed = True
                break
    return word


def test_signed_word_reduction_matches_oracle():
    samples = [
        [],
        [(1, 1)],
        [(1, 1), (1, -1)],
        [(1, 1), (2, 1), (1, -1), (2, -1)],
        [(1, -1), (1, 1), (2, 1)],              # cyclic wrap cancellation
        [(2, 1), (1, 1), (1, -1), (2, -1), (1, 1)],
    ]
    for letters in samples:
        ours = list(SignedWord.of(letters).reduced().letters)
        theirs = oracle_reduce(letters)
        assert len(ours) == len(theirs)
        assert SignedWord.of(ours).min_rotation() \
            == SignedWord.of(theirs).min_rotation()


def test_cut_system_examples():
    torus = ModelSurface(1)
    assert validate_cut_system(torus, [CurveClass.from_slope(1, 0)])
    with pytest.raises(InvalidCutSystem):
        validate_cut_system(torus, [CurveClass.from_slope(1, 0)] * 2)
    with pytest.raises(InvalidCutSystem):
        validate_cut_system(2, [CurveClass.from_slope(1, 0)])


def test_cut_system_rejects_crossing_curves():
    with pytest.raises(InvalidCutSystem):
        d = standard_diagram(2)
        validate_cut_system(2, [d.red.curves[0], d.blue.curves[0]])


def test_standard_genus2_meridians_give_4_holed_sphere():
    d = standard_diagram(2)
    assert d.red.curves[0].coords != d.red.curves[1].coords
    assert geometric_intersection(*d.red.curves) == 0
    # validate_cut_system already certified connectivity and chi = -2.
    assert isinstance(d.red, CutSystem)


def test_boundary_word_examples():
    d = s3_genus1()
    assert boundary_word(CurveClass.from_slope(1, 0), d.red).letters == ()
    w = boundary_word(CurveClass.from_slope(0, 1), d.red)
    assert len(w) == 1
    w = boundary_word(CurveClass.from_slope(1, 3), d.red)
    assert len(w) == 3
    assert len({s for _, s in w.letters}) == 1      # x^3 up to inversion


def test_word_length_equals_total_intersection():
    d = standard_diagram(2)
    curves = [d.blue.curves[0], d.blue.curves[1], COMMUTATOR_CURVE]
    for c in curves:
        w = boundary_word(c, d.red)
        total = sum(geometric_intersection(c, z) for z in d.red.curves)
        assert len(w) == total


def test_bounds_disk_examples():
    d = s3_genus1()
    assert bounds_disk(CurveClass.from_slope(1, 0), "red", d)
    assert not bounds_disk(CurveClass.from_slope(0, 1), "red", d)
    assert bounds_disk(CurveClass.from_slope(0, 1), "blue", d)


def test_genus2_disk_test_with_oracle():
    d = standard_diagram(2)
    for z in d.red.curves:
        w = boundary_word(z, d.red)
        assert not oracle_reduce(list(w.letters))
        assert bounds_disk(z, "red", d)
    w = boundary_word(COMMUTATOR_CURVE, d.red)
    reduced = oracle_reduce(list(w.letters))
    assert len(reduced) == 4
    assert not bounds_disk(COMMUTATOR_CURVE, "red", d)


def test_commutator_word_shape():
    d = standard_diagram(2)
    w = boundary_word(COMMUTATOR_CURVE, d.red).reduced()
    gens = [g for g, _ in w.letters]
    signs = {}
    for g, s in w.letters:
        signs.setdefault(g, []).append(s)
    assert sorted(gens) == [1, 1, 2, 2]
    assert all(sorted(v) == [-1, 1] for v in signs.values())
    assert gens[0] != gens[1]           # alternating pattern x y x' y'


def test_enumerate_disk_boundaries_table():
    assert [c.slope().p for c in
            enumerate_disk_boundaries(s3_genus1(), "red", 12)] == [1]
    got = enumerate_disk_boundaries(lens_space(2, 1), "blue", 12)
    assert [(c.slope().p, c.slope().q) for c in got] == [(1, 2)]
    got = enumerate_disk_boundaries(s2_x_s1(), "blue", 12)
    assert [(c.slope().p, c.slope().q) for c in got] == [(1, 0)]


def test_enumerate_includes_cut_curves_beyond_cap():
    d = lens_space(7, 1)                 # blue meridian (1, 7), weight 14
    got = enumerate_disk_boundaries(d, "blue", 12)
    assert [(c.slope().p, c.slope().q) for c in got] == [(1, 7)]


def test_enumerate_complete_within_cap():
    # Exhaustive re-scan at the cap: nothing that bounds is missing.
    from heegaard_lab.surface import enumerate_essential_curves
    d = standard_diagram(2)
    got = {c.coords for c in enumerate_disk_boundaries(d, "red", 6)}
    for c in enumerate_essential_curves(2, 6):
        if bounds_disk(c, "red", d):
            assert c.coords in got


def test_cut_curves_bound_their_own_side():
    for d in (s3_genus1(), lens_space(3, 1), standard_diagram(2)):
        for side in ("red", "blue"):
            for z in d.side(side).curves:
                assert bounds_disk(z, side, d)
