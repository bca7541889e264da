import pytest

from mobilehook.excited import (ExcitedDiagram, InvalidMove, active_cells, displacements,
                                enumerate_diagrams, excited_move, initial_diagram,
                                lattice_path_count, p_D, p_D_vacated, w_stat)
from mobilehook.formulas import catalan
from mobilehook.shapes import SkewShape, border_strips_in_box, zigzag_strip

RUNNING = SkewShape.of((2, 2, 2, 1), (1, 1))


def test_initial_diagram():
    D = initial_diagram(RUNNING)
    assert D.cells == {(1, 1), (2, 1)}
    assert D.broken == {(2, 2), (3, 2), (4, 1)}
    E = initial_diagram(SkewShape.of((3,)))
    assert not E.cells and not E.broken


@pytest.mark.parametrize("lam", [(3, 1), (2, 2), (3, 2, 1), (1, 1, 1)])
def test_straight_shape_broken_weight_is_b(lam):
    # with mu empty the broken cells carry exactly the q^b(lambda) prefactor
    s = SkewShape.of(lam)
    D = initial_diagram(s)
    assert not D.cells
    assert w_stat(D, s.outer.hook) == s.outer.b()


def test_initial_diagram_small_strip():
    D = initial_diagram(SkewShape.of((2, 2), (1,)))
    assert D.cells == {(1, 1)}
    assert D.broken == {(2, 2)}


def test_active_cells():
    D = initial_diagram(RUNNING)
    assert active_cells(D) == [(2, 1)]
    assert active_cells(initial_diagram(SkewShape.of((2, 1)))) == []
    other = ExcitedDiagram(RUNNING.outer, frozenset({(1, 1), (3, 2)}), frozenset())
    assert active_cells(other) == [(1, 1)]


def test_moves_follow_running_example():
    D = initial_diagram(RUNNING)
    D1 = excited_move(D, (2, 1))
    assert D1.cells == {(1, 1), (3, 2)} and D1.broken == {(2, 2), (3, 1), (4, 1)}
    D2 = excited_move(D1, (1, 1))
    assert D2.cells == {(2, 2), (3, 2)} and D2.broken == {(2, 1), (3, 1), (4, 1)}
    with pytest.raises(InvalidMove):
        excited_move(D, (1, 1))


def test_enumerate_counts():
    assert len(enumerate_diagrams(RUNNING)) == 3
    assert len(enumerate_diagrams(SkewShape.of((3, 2)))) == 1
    keys = [D.key() for D in enumerate_diagrams(RUNNING)]
    assert keys == sorted(keys)


@pytest.mark.parametrize("k", range(1, 7))
def test_zigzag_catalan(k):
    assert len(enumerate_diagrams(zigzag_strip(k))) == catalan(k)


def test_w_stat_running_example(major_mobile):
    mh = major_mobile.modified_hooks()
    values = [w_stat(D, mh.__getitem__) for D in enumerate_diagrams(RUNNING)]
    assert sorted(values) == [12, 18, 24]
    empty = initial_diagram(SkewShape.of((2,)))
    assert w_stat(empty, mh.__getitem__) == 0


def test_p_D_inversion_example(inversion_mobile):
    m = inversion_mobile
    hooks, cols = m.lam.hooks(), m.column_sizes()
    got = sorted((p_D(m.strip, D, cols), w_stat(D, hooks.__getitem__) + p_D(m.strip, D, cols))
                 for D in enumerate_diagrams(m.strip))
    assert got == [(0, 4), (3, 9), (6, 14)]


def test_p_D_counts_every_move():
    # (3,3,3)/(2,2): reaching {(2,2),(2,3),(3,2),(3,3)} moves both column-2 cells once
    # and re-fills (2,2), so the vacated-cell reading undercounts
    s = SkewShape.of((3, 3, 3), (2, 2))
    cols = {2: 2}
    last = [D for D in enumerate_diagrams(s) if D.cells == {(2, 2), (2, 3), (3, 2), (3, 3)}][0]
    assert dict(displacements(s, last)) == {(1, 1): 1, (1, 2): 1, (2, 1): 1, (2, 2): 1}
    assert p_D(s, last, cols) == 4
    assert p_D_vacated(s, last, cols) == 2


@pytest.mark.parametrize("s", border_strips_in_box(5, 5), ids=str)
def test_lattice_paths_and_broken_size(s):
    diagrams = enumerate_diagrams(s)
    assert len(diagrams) == lattice_path_count(s.outer)
    assert len({len(D.broken) for D in diagrams}) == 1
    assert all(not (D.broken & D.cells) and len(D.cells) == s.inner.size for D in diagrams)


def _closure_with_inverse_moves(D0):
    def neighbours(D):
        for u in active_cells(D):
            yield excited_move(D, u)
        for (i, j) in D.cells:
            # inverse move (i,j) -> (i-1,j-1)
            if i > 1 and j > 1:
                for E in enumerate_candidates(D, (i - 1, j - 1)):
                    if E.key() != D.key():
                        yield E

    def enumerate_candidates(D, v):
        for u in D.cells:
            if u == (v[0] + 1, v[1] + 1) and v not in D.cells:
                C = ExcitedDiagram(D.outer, frozenset((D.cells - {u}) | {v}), frozenset())
                if v in active_cells(C) and excited_move(C, v).cells == D.cells:
                    yield C

    seen = {D0.key()}
    todo = [D0]
    while todo:
        D = todo.pop()
        for E in neighbours(D):
            if E.key() not in seen:
                seen.add(E.key())
                todo.append(E)
    return seen


@pytest.mark.parametrize("lam, mu", [((3, 3, 2), (2, 1)), ((4, 3, 3, 1), (2, 2)), ((2, 2, 2, 1), (1, 1))])
def test_reachable_from_any_member(lam, mu):
    s = SkewShape.of(lam, mu)
    keys = {D.key() for D in enumerate_diagrams(s)}
    for D in enumerate_diagrams(s):
        assert _closure_with_inverse_moves(D) == keys
