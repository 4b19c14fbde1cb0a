from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from ewtableaux import bijections as bij
from ewtableaux import permstat as ps
from ewtableaux.core import Family, FerrersShape, Tableau, TableauError
from ewtableaux.tableaux import enumerate_of_size, enumerate_tableaux, is_valid, shapes_with_cells, validate

from golden import (
    EW_14367582,
    EW_15873426,
    EW_31254,
    LE_51473268,
    LE_51842736,
    LE_OF_TREE_9,
    NEW_35478612,
    NEW_84536127,
    TREE_31254,
    TREE_9,
    TREE_DIFF,
)

T = Tableau.from_rows
perm_strategy = st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


def perms(n):
    return permutations(range(1, n + 1))


# -- reading permutations off EW / NEW tableaux


def test_psi_figures():
    assert bij.psi(EW_15873426) == (1, 5, 8, 7, 3, 4, 2, 6)
    assert bij.psi(NEW_84536127) == (8, 4, 5, 3, 6, 1, 2, 7)


def test_psi_passes_figure():
    passes = bij.psi_passes(EW_15873426)
    assert passes[:2] == [("col", (1, 5, 8)), ("row", (7, 3))]
    new_passes = bij.psi_passes(NEW_84536127)
    assert new_passes[:2] == [("row", (8, 4)), ("col", (5,))]


def test_psi_single_row():
    for n in range(1, 7):
        assert bij.psi(T(Family.EW, ["1" * n])) == tuple(range(1, n + 1))


def test_psi_inverse_examples():
    assert bij.psi_inverse((1, 5, 8, 7, 3, 4, 2, 6)) == EW_15873426
    assert bij.psi_inverse((2, 3, 1)).rows_text() == ["11", "00"]
    assert bij.psi(T(Family.EW, ["11", "10"])) == (2, 1, 3)


@pytest.mark.parametrize("family", [Family.EW, Family.NEW])
def test_psi_is_a_bijection(family):
    for n in range(1, 8):
        seen = set()
        for t in enumerate_of_size(n, family):
            p = bij.psi(t)
            assert bij.psi_inverse(p, family) == t
            seen.add(p)
        assert len(seen) == factorial(n)


@given(perm_strategy)
def test_psi_inverse_then_psi(p):
    for family in (Family.EW, Family.NEW):
        t = bij.psi_inverse(p, family)
        validate(t)
        assert bij.psi(t) == p


def test_rows_are_descent_bottoms():
    for n in range(1, 8):
        for e in enumerate_of_size(n, Family.EW):
            rows = set(e.labeling().row_label) - {0}
            assert ps.descent_bottoms(bij.psi(e)) == rows


def test_new_reading_facts():
    # first letter is the lowest 0-free row; 1 in (r, c) iff r precedes c
    for n in range(1, 8):
        for t in enumerate_of_size(n, Family.NEW):
            p = bij.psi(t)
            lab = t.labeling()
            zero_free = [i for i, row in enumerate(t.cells) if 0 not in row]
            assert p[0] == lab.row_label[max(zero_free)]
            pos = {x: k for k, x in enumerate(p)}
            for i, j in t.shape.cells():
                assert t.cells[i][j] == (pos[lab.row_label[i]] < pos[lab.col_label[j]])


def test_psi_rejects_invalid():
    with pytest.raises(TableauError):
        bij.psi(T(Family.EW, ["11", "11"]))
    with pytest.raises(TableauError):
        bij.psi(LE_51473268)


# -- Le tableaux


def test_phi_figures():
    assert bij.phi_le(LE_51473268) == (5, 1, 4, 7, 3, 2, 6, 8)
    assert bij.phi_le(LE_51842736) == (5, 1, 8, 4, 2, 7, 3, 6)
    assert bij.phi_le(T(Family.LE, ["1"])) == (2, 1)


def test_phi_is_a_bijection():
    for n in range(1, 8):
        seen = set()
        for t in enumerate_of_size(n, Family.LE):
            p = bij.phi_le(t)
            assert bij.phi_le_inverse(p) == t
            seen.add(p)
        assert len(seen) == factorial(n)


def test_le_rows_are_weak_excedance_bottoms():
    for n in range(1, 8):
        for t in enumerate_of_size(n, Family.LE):
            assert set(t.labeling().row_label) == ps.weak_excedance_bottoms(bij.phi_le(t))


@given(perm_strategy)
def test_phi_inverse_property(p):
    t = bij.phi_le_inverse(p)
    validate(t)
    assert bij.phi_le(t) == p


def test_trace_stays_inside_and_turns_at_ones():
    t = LE_51473268
    rule = lambda i, j, h: t.cells[i][j] == 1
    path = bij.trace(t.shape, ("row", 0), rule)
    heading = "E"
    for i, j, h in path.steps:
        assert t.shape.has_cell(i, j)
        assert (h != heading) == (t.cells[i][j] == 1)
        heading = h


# -- EW <-> Le


def test_le_to_ew_figure():
    e, pi = bij.le_to_ew(LE_51842736)
    assert pi == (1, 4, 3, 6, 7, 5, 8, 2)
    assert e == EW_14367582
    assert bij.psi(e) == pi


def test_ew_to_le_figure():
    assert bij.ew_to_le(EW_14367582) == LE_51842736
    assert bij.ew_to_le(EW_15873426) == LE_51473268


def test_single_cell_le():
    e, pi = bij.le_to_ew(T(Family.LE, ["1"]))
    assert e == bij.le_to_ew_composed(T(Family.LE, ["1"]))
    assert bij.ew_to_le(e) == T(Family.LE, ["1"])


def test_m_helper_figure():
    m = bij.m_helper((1, 4, 3, 6, 7, 5, 8, 2))
    target = (1, 8, 4, 2, 7, 3, 6, 5)
    assert all(target[m[i] - 1] == i for i in range(1, 9))


def test_m_helper_matches_desexc():
    for n in range(1, 8):
        for p in perms(n):
            d = ps.desexc(p)
            m = bij.m_helper(p)
            assert all(d[m[i] - 1] == i for i in range(1, n + 1))


def test_ew_le_round_trips_exhaustive():
    for n in range(1, 8):
        les = set()
        for e in enumerate_of_size(n, Family.EW):
            le = bij.ew_to_le(e)
            assert le == bij.ew_to_le_composed(e)
            validate(le)
            assert bij.le_to_ew(le)[0] == e
            assert bij.le_to_ew_composed(le) == e
            les.add(le)
        assert len(les) == factorial(n)


@settings(max_examples=60, deadline=None)
@given(perm_strategy)
def test_ew_to_le_direct_matches_composed(p):
    e = bij.psi_inverse(p)
    assert bij.ew_to_le(e) == bij.ew_to_le_composed(e)


# -- NEW <-> Le


def test_new_to_le_figure():
    assert bij.psi(NEW_35478612) == (3, 5, 4, 7, 8, 6, 1, 2)
    assert ps.desexc((3, 5, 4, 7, 8, 6, 1, 2)) == (6, 2, 1, 5, 3, 8, 4, 7)
    assert bij.new_to_le(NEW_35478612) == LE_51842736
    assert bij.le_to_new(LE_51842736)[0] == NEW_35478612


def test_new_le_round_trips_exhaustive():
    for n in range(1, 8):
        for t in enumerate_of_size(n, Family.NEW):
            le = bij.new_to_le(t)
            assert le.shape == t.shape
            assert bij.le_to_new(le)[0] == t
            assert bij.le_to_new_composed(le) == t


# -- tree-like tableaux


def test_tree_to_le_figure():
    assert bij.tree_to_le(TREE_9) == LE_OF_TREE_9
    assert bij.tree_to_le_by_free_dots(TREE_9) == LE_OF_TREE_9
    assert bij.le_to_tree(LE_OF_TREE_9) == TREE_9


def test_single_dot_tree():
    dot = T(Family.TREE, ["*"])
    le = bij.tree_to_le(dot)
    assert le.shape.row_lengths == (0,)
    assert bij.le_to_tree(le) == dot
    assert bij.tree_to_perm(dot) == (1,)


def test_tree_le_round_trips_exhaustive():
    for n in range(1, 8):
        for t in enumerate_of_size(n, Family.TREE):
            le = bij.tree_to_le(t)
            assert le == bij.tree_to_le_by_free_dots(t)
            assert bij.le_to_tree(le) == t
        for le in enumerate_of_size(n, Family.LE):
            assert bij.tree_to_le(bij.le_to_tree(le)) == le


def test_tree_walk_examples():
    assert bij.tree_to_perm(TREE_31254) == (3, 1, 2, 5, 4)
    assert bij.tree_to_ew_M(TREE_31254) == EW_31254
    assert bij.psi(bij.tree_to_ew_M(TREE_DIFF)) == (4, 2, 3, 1)
    assert bij.psi(bij.tree_to_ew_via_le(TREE_DIFF)) == (4, 2, 1, 3)
    assert bij.common_prefix(TREE_DIFF) == 2


def test_tree_walk_descent_bottoms_are_rows():
    for n in range(1, 7):
        for t in enumerate_of_size(n, Family.TREE):
            rows = set(t.labeling().row_label) - {0}
            assert ps.descent_bottoms(bij.tree_to_perm(t)) == rows


def test_tree_maps_are_shape_preserving_bijections():
    for shape in shapes_with_cells(10):
        trees = list(enumerate_tableaux(shape, Family.TREE))
        walk = {bij.tree_to_ew_M(t) for t in trees}
        via = {bij.tree_to_ew_via_le(t) for t in trees}
        ews = set(enumerate_tableaux(shape, Family.EW))
        assert walk == via == ews, shape


def test_tree_via_le_direct_matches_composed():
    for n in range(1, 7):
        for t in enumerate_of_size(n, Family.TREE):
            assert bij.tree_to_ew_via_le(t) == bij.tree_to_ew_via_le_composed(t)


def test_tree_maps_share_first_letter():
    for n in range(1, 7):
        for t in enumerate_of_size(n, Family.TREE):
            assert bij.common_prefix(t) >= 1


def test_tree_from_perm_inverts_walk():
    for n in range(1, 6):
        for t in enumerate_of_size(n, Family.TREE):
            assert bij.tree_from_perm(bij.tree_to_perm(t)) == t
