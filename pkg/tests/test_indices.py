import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordindex import (
    chord_index,
    chord_indices,
    gauss_diagram,
    ind,
    index_function,
    mirror,
    parity,
    parse_diagram,
    parse_gauss_code,
)
from chordindex.algebra import GroupRingElement
from chordindex.errors import NotAdmissible, NotMod2Admissible, UnknownChord, UnknownCrossing
from chordindex.homology import HomologyClass
from chordindex.indices import (
    chord_index_by_coloring,
    coloring,
    fiedler_index,
    group_index,
    index_functions,
    regular_index,
)
from chordindex.diagram import smoothing_classes
from chordindex.moves import random_diagram

from corpus import catalog, random_admissible


def D(walk, genus=1):
    return parse_diagram(f"genus {genus}\nwalk {walk}")


@st.composite
def diagram_with_classes(draw):
    g = draw(st.integers(0, 3))
    d = random_diagram(g, draw(st.integers(0, 8)), 0 if g == 0 else draw(st.integers(0, 12)), draw(st.integers(0, 10**6)))
    rng = random.Random(draw(st.integers(0, 10**6)))
    return d, random_admissible(d, rng), random_admissible(d, rng)


# -- integer index ----------------------------------------------------------------------


def test_zero_class_gives_zero_index():
    d = catalog()["kishino"][0]
    assert set(chord_indices(d, HomologyClass.zero(2)).values()) == {0}


def test_kishino_indices():
    d, alpha, _ = catalog()["kishino"]
    f = chord_indices(d, alpha)
    assert [f[c] for c in (1, 2, 3, 4)] == [0, 0, -1, 1]
    assert [chord_index(d, alpha, c) for c in (1, 2, 3, 4)] == [0, 0, -1, 1]


def test_three_chord_genus3_indices():
    d = catalog()["three_chord_genus3"][0]
    f = chord_indices(d, d.homology_class())
    assert [f[c] for c in (1, 2, 3)] == [1, 1, -2]


def test_index_errors():
    d = D("O1+ a1+ U1+")
    with pytest.raises(NotAdmissible) as exc:
        chord_index(d, (0, 1), 1)
    assert exc.value.intersection == -1
    with pytest.raises(UnknownCrossing):
        chord_index(d, (1, 0), 9)


@settings(max_examples=120, deadline=None)
@given(diagram_with_classes())
def test_linearity_and_antipode(data):
    d, a, b = data
    fa, fb = chord_indices(d, a), chord_indices(d, b)
    assert chord_indices(d, a + b) == {c: fa[c] + fb[c] for c in fa}
    assert chord_indices(d, -a) == {c: -v for c, v in fa.items()}
    assert chord_indices(d, 3 * a) == {c: 3 * v for c, v in fa.items()}


@settings(max_examples=120, deadline=None)
@given(diagram_with_classes())
def test_sign_times_right_smoothing_pairing(data):
    d, a, _ = data
    for c in d.crossings:
        _, right = smoothing_classes(d, c)
        pairing = sum(a[i] * right[i + 1] - a[i + 1] * right[i] for i in range(0, len(a), 2))
        assert chord_index(d, a, c) == d.sign(c) * pairing


@settings(max_examples=60, deadline=None)
@given(diagram_with_classes(), st.integers(0, 40))
def test_basepoint_independence(data, k):
    d, a, _ = data
    assert chord_indices(d.rotate(k), a) == chord_indices(d, a)
    assert index_functions(d.rotate(k), a) == index_functions(d, a)


# -- coloring ---------------------------------------------------------------------------


def test_coloring_of_zero_class():
    d = catalog()["kishino"][0]
    col = coloring(d, HomologyClass.zero(2))
    assert set(col.at) == {0} and set(col.arcs) == {0} and col.closes


def test_coloring_kishino():
    d, alpha, _ = catalog()["kishino"]
    col = coloring(d, alpha)
    assert col.closes and col.arcs[0] == 0
    assert len(col.arcs) == 4


def test_coloring_rejects_open_walk():
    with pytest.raises(NotAdmissible):
        coloring(D("O1+ a1+ U1+"), (0, 1))
    assert coloring(D("O1+ a1+ U1+"), (0, 1), strict=False).monodromy == 1


@settings(max_examples=150, deadline=None)
@given(diagram_with_classes())
def test_coloring_agrees_with_homology(data):
    d, a, _ = data
    f = chord_indices(d, a)
    for c in d.crossings:
        assert chord_index_by_coloring(d, a, c) == f[c]


# -- Gauss diagram index ---------------------------------------------------------------------


def test_ind_examples():
    g = parse_gauss_code("O1+ U1+")
    assert ind(g, 1) == 0
    g = parse_gauss_code("O1+ O2+ U1+ U2+")
    assert sorted(ind(g, c) for c in (1, 2)) == [-1, 1]
    with pytest.raises(UnknownChord):
        ind(g, 3)


def _all_gauss_words(max_chords):
    for n in range(max_chords + 1):
        ids = [c for c in range(1, n + 1) for _ in range(2)]
        for perm in set(itertools.permutations(ids)):
            for signs in itertools.product((1, -1), repeat=n):
                seen = set()
                toks = []
                for c in perm:
                    layer = "U" if c in seen else "O"
                    seen.add(c)
                    toks.append(f"{layer}{c}{'+' if signs[c - 1] > 0 else '-'}")
                yield " ".join(toks)


def test_ind_sums_to_zero_on_small_gauss_diagrams():
    # an interleaving pair (c, d) adds +-w(d) to Ind(c) and -+w(c) to Ind(d),
    # so the sign-weighted sum always vanishes; the plain sum only when the
    # signs agree
    count = 0
    for code in _all_gauss_words(3):
        g = parse_gauss_code(code)
        assert sum(ch.sign * ind(g, ch.id) for ch in g.chords) == 0
        if len({ch.sign for ch in g.chords}) <= 1:
            assert sum(ind(g, ch.id) for ch in g.chords) == 0
        count += 1
    assert count == 747
    g = parse_gauss_code("O1+ O2- U1+ U2-")
    assert [ind(g, 1), ind(g, 2)] == [1, 1]


# -- parity ------------------------------------------------------------------------------------


def test_parity_examples():
    d, alpha, _ = catalog()["kishino"]
    assert [parity(d, HomologyClass.zero(2), c) for c in (1, 2, 3, 4)] == [0, 0, 0, 0]
    assert [parity(d, alpha, c) for c in (1, 2, 3, 4)] == [0, 0, 1, 1]


def test_parity_for_mod2_only_class():
    d = D("O1+ a1+ U1+ a1+")  # [D] = (2, 0)
    alpha = (0, 1)  # meets the knot twice: fine mod 2, not over Z
    with pytest.raises(NotAdmissible):
        chord_index(d, alpha, 1)
    assert parity(d, alpha, 1) == 1
    with pytest.raises(NotMod2Admissible):
        parity(D("O1+ a1+ U1+"), (0, 1), 1)


@settings(max_examples=100, deadline=None)
@given(diagram_with_classes())
def test_parity_reduces_index(data):
    d, a, _ = data
    f = chord_indices(d, a)
    assert {c: parity(d, a, c) for c in d.crossings} == {c: v % 2 for c, v in f.items()}


# -- group ring indices ---------------------------------------------------------------------


def test_group_index_of_kinks():
    d = D("O1+ U1+ a1+")
    assert group_index(d, 1) == GroupRingElement([((1, 0), 1), ((0, 0), 1)])
    assert group_index(D("O1+ U1+"), 1) == GroupRingElement([((0, 0), 2)])


def test_group_index_example():
    d = D("O1+ a1+ U1+ b1+")
    assert group_index(d, 1) == GroupRingElement([((1, 0), 1), ((0, 1), 1)])


@settings(max_examples=80, deadline=None)
@given(diagram_with_classes())
def test_group_index_classes_sum_to_knot(data):
    d = data[0]
    for c in d.crossings:
        left, right = smoothing_classes(d, c)
        assert left + right == d.homology_class()
        g = group_index(d, c)
        total = HomologyClass.zero(d.genus)
        for k, n in g.items():
            total = total + HomologyClass(k) * n
        assert total == d.homology_class()


def test_fiedler_index_examples():
    assert fiedler_index(D("O1+ U1+ a1+"), 1) == (1, 0)  # [K]
    assert fiedler_index(D("U1+ O1+ a1+"), 1) == (0, 0)
    assert fiedler_index(D("O1+ a1+ U1+ b1+"), 1) == (0, 1)


@settings(max_examples=80, deadline=None)
@given(diagram_with_classes())
def test_fiedler_index_under_mirror(data):
    d = data[0]
    for c in d.crossings:
        other = d.homology_class() - fiedler_index(d, c)
        assert fiedler_index(mirror(d), c) == other


def test_regular_index():
    pos = D("O1+ a1+ U1+ b1+")
    r = regular_index(pos, 1)
    left, right = smoothing_classes(pos, 1)
    assert (r.x_class, r.y_class) == (left, right)
    neg = D("O1- a1+ U1- b1+")
    r = regular_index(neg, 1)
    left, right = smoothing_classes(neg, 1)
    assert (r.x_class, r.y_class) == (right, left)
    assert r.specialize() == group_index(neg, 1)


# -- index function -------------------------------------------------------------------------


def test_index_function_isolated_chord():
    d = D("O1+ a1+ U1+ a1-")
    assert index_function(d, (1, 0), 1).is_zero()


def test_index_function_virtual_trefoil():
    d = catalog()["virtual_trefoil"][0]
    k = d.homology_class()
    for c in d.crossings:
        g = index_function(d, k, c)
        assert len(g.terms()) == 1 and abs(g.terms()[0][1]) == 1


@settings(max_examples=100, deadline=None)
@given(diagram_with_classes())
def test_index_function_at_one_is_gauss_index(data):
    d, a, _ = data
    g = gauss_diagram(d)
    f = chord_indices(d, a)
    for c, poly in index_functions(d, a).items():
        assert poly.modulus == abs(f[c])
        assert poly.at_one() == ind(g, c)
