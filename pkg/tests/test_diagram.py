import itertools

import pytest
from hypothesis import given, strategies as st

from catalania.diagram import (
    BFS_HEIGHT_SLACK,
    Diagram,
    DiagramError,
    DominoSide,
    Move,
    MoveKind,
    apply_move,
    canonicalize,
    check_boundary,
    closure,
    complete,
    dual,
    equivalent,
    is_complete,
    is_deplete,
    is_reduced,
    legal_moves,
    merge,
    reduced_completes,
    strongly_extremal_column,
)

from conftest import checked_diagrams


def boundary_oracle(hs):
    """Boundary conditions straight from the neighbour definition."""
    top = max(hs)
    for i, h in enumerate(hs):
        left_ext = all(hs[k] < h for k in range(i))
        right_ext = all(hs[k] < h for k in range(i + 1, len(hs)))
        if left_ext and h % 2 == 1 and h != top:
            return False
        if right_ext and h % 2 == 0 and h != top:
            return False
    return True


heights = st.integers(1, 6).flatmap(lambda n: st.lists(st.integers(0, 6), min_size=n, max_size=n))
checked = heights.filter(boundary_oracle).map(Diagram)


# -- boundary conditions -----------------------------------------------------------


@pytest.mark.parametrize("hs", [(2, 1, 0, 2), (0, 0, 0), (0, 0, 1), (2, 3, 2, 1, 3)])
def test_boundary_accepts(hs):
    assert check_boundary(Diagram(hs))


@pytest.mark.parametrize("hs", [(1, 2, 1), (1, 2, 2, 1), (3, 3, 1, 2, 1)])
def test_boundary_rejects(hs):
    assert not check_boundary(Diagram(hs))


def test_three_pictured_diagrams():
    pictured = [(1, 2, 2, 1), (3, 3, 1, 2, 1), (2, 3, 2, 1, 3)]
    assert [check_boundary(Diagram(hs)) for hs in pictured] == [False, False, True]


def test_boundary_zero_one_one_follows_predicate():
    # the only left extremal columns are C1 (height 0) and C2 (height 1 = top)
    assert check_boundary(Diagram((0, 1, 1)))


@given(heights)
def test_boundary_matches_oracle(hs):
    assert check_boundary(Diagram(hs)) == boundary_oracle(hs)


def test_order_three_exhaustive():
    got = {d.heights for d in checked_diagrams(3, 2)}
    want = {hs for hs in itertools.product(range(3), repeat=3) if boundary_oracle(hs)}
    assert got == want
    assert (0, 0, 1) in got


# -- strongly extremal column -------------------------------------------------------


@pytest.mark.parametrize("hs,j", [((0, 0, 0, 0), 4), ((2, 1, 0, 2), 4), ((3, 2, 1, 3, 2, 3), 1), ((1, 0, 1), 1)])
def test_strongly_extremal(hs, j):
    assert strongly_extremal_column(Diagram(hs)) == j


def test_strongly_extremal_rejects_bad():
    with pytest.raises(DiagramError):
        strongly_extremal_column(Diagram((1, 2, 1)))


@given(checked)
def test_strongly_extremal_is_the_extreme_highest(d):
    hs = d.heights
    top = max(hs)
    tops = [i + 1 for i, h in enumerate(hs) if h == top]
    j = strongly_extremal_column(d)
    assert j == (tops[0] if top % 2 else tops[-1])


# -- moves ------------------------------------------------------------------------------


def test_moves_on_example():
    ms = legal_moves(Diagram((2, 1, 0, 2)))
    assert Move(MoveKind.DOMINO, True, column=3, side=DominoSide.LEFT_EVEN) in ms
    assert Move(MoveKind.HALF_DOMINO, True, column=4) in ms


def test_moves_on_empty():
    d = Diagram((0, 0, 0))
    ms = legal_moves(d)
    assert [m for m in ms if m.kind is not MoveKind.ROW_PAIR] == [Move(MoveKind.HALF_DOMINO, True, column=3)]
    # inserting two equal rows is the only other move, and it stays in the class
    rows = [m for m in ms if m.kind is MoveKind.ROW_PAIR]
    assert rows and all(m.adjoin for m in rows)
    assert Diagram((2, 2, 2)) in [apply_move(d, m) for m in rows]
    assert all(canonicalize(apply_move(d, m)) == canonicalize(d) for m in rows)


def test_apply_examples():
    d = Diagram((2, 1, 0, 2))
    assert apply_move(d, Move(MoveKind.DOMINO, True, column=3, side=DominoSide.LEFT_EVEN)) == Diagram((2, 1, 2, 2))
    assert apply_move(d, Move(MoveKind.HALF_DOMINO, True, column=4)) == Diagram((2, 1, 0, 3))
    rows = [m for m in legal_moves(Diagram((1, 0, 1, 1))) if m.kind is MoveKind.ROW_PAIR and m.adjoin and m.row == 0]
    assert Diagram((3, 2, 3, 3)) in [apply_move(Diagram((1, 0, 1, 1)), m) for m in rows]


def test_illegal_move_reports_reason():
    with pytest.raises(DiagramError, match="column"):
        apply_move(Diagram((2, 1, 0, 2)), Move(MoveKind.DOMINO, True, column=1, side=DominoSide.LEFT_EVEN))


def test_moves_preserve_boundary_exhaustive():
    for order in range(1, 5):
        for d in checked_diagrams(order, 4):
            j = strongly_extremal_column(d)
            for m in legal_moves(d):
                new = apply_move(d, m)
                assert check_boundary(new)
                if m.kind is not MoveKind.HALF_DOMINO or m.adjoin:
                    assert strongly_extremal_column(new) == j, (d, m)


@given(checked)
def test_moves_preserve_boundary(d):
    for m in legal_moves(d):
        assert boundary_oracle(apply_move(d, m).heights)


# -- completion and canonical forms ------------------------------------------------------


@pytest.mark.parametrize("hs,want", [((2, 1, 0, 2), (2, 1, 2, 2)), ((0, 0, 0), (0, 0, 0)), ((2, 1, 3, 2, 3), (2, 1, 3, 2, 3))])
def test_complete(hs, want):
    assert complete(Diagram(hs)) == Diagram(want)


@given(checked)
def test_complete_keeps_height_and_column(d):
    c = complete(d)
    assert is_complete(c)
    assert c.height == d.height
    assert strongly_extremal_column(c) == strongly_extremal_column(d)


@given(checked)
def test_complete_side_columns(d):
    c = complete(d)
    r, hs = c.height, c.heights
    if r == 0:
        return
    assert hs[0] >= r - 1 and hs[-1] >= r - 1
    if r % 2 == 0:
        assert hs[0] == r
    else:
        assert hs[-1] == r


@given(checked)
def test_reduced_iff_short_column(d):
    c = complete(d)
    assert is_reduced(c) == (min(c.heights) <= 1)


def test_canonicalize_examples():
    assert canonicalize(Diagram((2, 1, 2, 2))).deplete == Diagram((2, 1, 0, 2))
    assert equivalent(Diagram((4, 3, 2, 4)), Diagram((2, 1, 0, 2)))
    for n in range(1, 6):
        assert canonicalize(Diagram((0,) * (n - 1) + (1,))) == canonicalize(Diagram.empty(n))


def test_half_domino_counts_toward_class():
    k = canonicalize(Diagram((0, 0, 1)))
    assert k.deplete == Diagram((0, 0, 0))
    assert k.strongly_extremal == 3


def test_unique_deplete_by_bfs():
    for order in range(1, 5):
        for d in checked_diagrams(order, 3):
            key = canonicalize(d)
            reach = closure(d, d.height + BFS_HEIGHT_SLACK)
            assert key.deplete in reach
            assert [x for x in reach if is_deplete(x)] == [key.deplete], d
            assert all(canonicalize(x) == key for x in reach)
            assert key.class_height == min(x.height for x in reach)


def test_bfs_cap_is_stable():
    for order in range(1, 5):
        for d in checked_diagrams(order, 2):
            a = {x for x in closure(d, d.height + BFS_HEIGHT_SLACK) if is_deplete(x)}
            b = {x for x in closure(d, d.height + BFS_HEIGHT_SLACK + 1) if is_deplete(x)}
            assert a == b


@given(checked)
def test_two_reduced_completes(d):
    key = canonicalize(d)
    low, high = reduced_completes(key)
    assert high.height == low.height + 1
    for c in (low, high):
        assert is_complete(c) and is_reduced(c) and canonicalize(c) == key


# -- duality and merging ---------------------------------------------------------------------


def test_dual_examples():
    assert dual(Diagram((2, 1, 0, 2))) == Diagram((3, 1, 2, 3))
    assert dual(Diagram((3, 1, 2, 3))) == Diagram((4, 3, 2, 4))


def test_dual_involution_order_four():
    for d in checked_diagrams(4, 3):
        assert canonicalize(dual(dual(d))) == canonicalize(d)
        assert canonicalize(dual(d)).strongly_extremal == 5 - canonicalize(d).strongly_extremal


@given(checked)
def test_dual_class_map(d):
    k = canonicalize(d)
    assert canonicalize(dual(k.deplete)) == canonicalize(dual(d))


def test_merge_example():
    assert merge(Diagram((1, 0, 1, 1)), Diagram((3, 2, 1, 3))) == Diagram((3, 2, 3, 3, 2, 1, 3))


def test_merge_neutral():
    d = Diagram((2, 1, 0, 2))
    assert merge(d, Diagram((2,))) == d


def test_merge_parity():
    with pytest.raises(DiagramError):
        merge(Diagram((0, 1)), Diagram((2, 1)))


def test_json_roundtrip():
    k = canonicalize(Diagram((4, 3, 2, 4)))
    assert Diagram.from_json(k.deplete.to_json()) == k.deplete
    assert type(k).from_json(k.to_json()) == k
