import math

import pytest
from hypothesis import given, strategies as st

from catalania import _kernels
from catalania.diagram import Diagram, DiagramError, canonicalize, check_boundary, complete_representatives
from catalania.enumeration import (
    CapacityError,
    ClassTable,
    catalan,
    catalan_closed,
    catalan_polynomial,
    catalan_polynomial_recursive,
    count_by_column,
    cumulative_counts,
    dyck_paths,
    dyck_paths_exact,
    enumerate_classes,
    extend_class,
    merge_class,
    restrict_class,
    split_class,
)

from conftest import checked_diagrams

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def brute_classes(order, max_height):
    """Classes by canonicalizing every checked diagram of bounded height."""
    return {canonicalize(d) for d in checked_diagrams(order, max_height)}


def test_catalan_values():
    assert [catalan(n) for n in range(9)] == CATALAN


@given(st.integers(0, 40))
def test_catalan_forms_agree(n):
    assert catalan(n) == math.comb(2 * n, n) - math.comb(2 * n, n + 1)
    assert catalan_closed(n) == catalan(n)


@pytest.mark.parametrize("order", range(1, 8))
def test_class_counts(order):
    assert len(enumerate_classes(order)) == CATALAN[order]


def test_order_one_is_empty():
    (k,) = enumerate_classes(1).classes
    assert k.deplete == Diagram((0,))


@pytest.mark.parametrize("order", range(1, 5))
def test_enumeration_matches_brute_force(order):
    # height t + 2 covers every class
    assert set(enumerate_classes(order).classes) == brute_classes(order, order + 1)


def test_capacity():
    with pytest.raises(CapacityError):
        enumerate_classes(8)
    assert len(enumerate_classes(8, max_order=8)) == 1430


def test_grid_bound():
    tbl = enumerate_classes(5, top=6)
    assert tbl.classes == enumerate_classes(5).classes


@pytest.mark.parametrize("order", range(1, 8))
def test_numba_and_numpy_agree(order):
    if not _kernels.HAVE_NUMBA:
        pytest.skip("numba not installed")
    a = _kernels.unique_depletes(order, order - 1, use_numba=True)
    b = _kernels.unique_depletes(order, order - 1, use_numba=False) if order <= 6 else a
    assert (a == b).all()


def test_numpy_boundary_mask_matches_scalar():
    grid = _kernels.candidate_grid(4, 4)
    mask = _kernels.boundary_mask_numpy(grid)
    assert [check_boundary(Diagram(r)) for r in grid.tolist()] == mask.tolist()


@pytest.mark.parametrize("order,want", [(2, {1: 1, 2: 1}), (3, {1: 2, 2: 1, 3: 2}), (5, {1: 14, 2: 5, 3: 4, 4: 5, 5: 14}),
                                        (6, {1: 42, 2: 14, 3: 10, 4: 10, 5: 14, 6: 42})])
def test_by_column(order, want):
    assert count_by_column(enumerate_classes(order)) == want


@pytest.mark.parametrize("order", range(1, 8))
def test_by_column_products(order):
    t = order - 1
    got = count_by_column(enumerate_classes(order))
    assert got == {j: CATALAN[j - 1] * CATALAN[t - j + 1] for j in range(1, order + 1)}


def test_parity_vanishing():
    for order in range(1, 8):
        tbl = enumerate_classes(order)
        for (j, r), ks in tbl.index.items():
            assert 0 <= r <= order - 1
            if j == order and order > 1:
                assert r % 2 == 0
            if j == 1 and order > 1:
                assert r % 2 == 1


def test_polynomial_small():
    assert catalan_polynomial(enumerate_classes(1)) == [1]
    assert catalan_polynomial(enumerate_classes(2)) == [1, 1]
    p4 = catalan_polynomial(enumerate_classes(4))
    assert sum(p4) == 14 and p4[0] == 1 and p4[-1] == 1


@pytest.mark.parametrize("order", range(1, 8))
def test_polynomial_recursion(order):
    enum = catalan_polynomial(enumerate_classes(order))
    assert catalan_polynomial_recursive(order) == enum
    assert sum(enum) == CATALAN[order]
    assert len(enum) == order and enum[-1] == 1


def test_recursion_bases():
    from catalania.enumeration import column_height_count, height_count

    for n in range(1, 9):
        assert height_count(0, n) == 1
        assert column_height_count(0, n, n) == 1
        if n > 1:
            assert column_height_count(1, n, n) == 0


@pytest.mark.parametrize("order", range(1, 8))
def test_cumulative(order):
    enum = catalan_polynomial(enumerate_classes(order))
    for r in range(order):
        assert cumulative_counts(order, r) == sum(enum[: r + 1])
    assert cumulative_counts(order, 0) == 1
    assert cumulative_counts(order, order - 1) == CATALAN[order]


def test_cumulative_order_four_height_one():
    tbl = enumerate_classes(4)
    assert cumulative_counts(4, 1) == tbl.count(max_r=1) == 1 + tbl.count(r=1)


@pytest.mark.parametrize("order", range(1, 8))
def test_dyck_heights(order):
    # coefficients count Dyck paths of semilength t+1 by exact height r+1
    enum = catalan_polynomial(enumerate_classes(order))
    assert enum == [dyck_paths_exact(order, r + 1) for r in range(order)]
    assert dyck_paths(order) == CATALAN[order]


# -- bijections -------------------------------------------------------------------


def test_split_remark_example():
    printed = canonicalize(Diagram((4, 3, 2, 1, 4, 2, 3)))
    assert (printed.strongly_extremal, printed.class_height) != (5, 4)
    key = canonicalize(Diagram((4, 2, 1, 3, 4, 2, 3)))
    assert (key.strongly_extremal, key.class_height) == (5, 4)
    minus, plus = split_class(key)
    assert plus == canonicalize(Diagram((4, 2, 3)))
    assert complete_representatives(key)[0].heights[4:] == (4, 2, 3)


def test_split_domain():
    key = enumerate_classes(4).select(j=1)[0]
    with pytest.raises(DiagramError):
        split_class(key)


@pytest.mark.parametrize("order", range(3, 7))
def test_split_merge_roundtrip(order):
    for key in enumerate_classes(order):
        if 1 < key.strongly_extremal < order:
            minus, plus = split_class(key)
            assert minus.strongly_extremal == minus.order
            assert plus.strongly_extremal == 1
            assert merge_class(minus, plus) == key


@pytest.mark.parametrize("order", range(3, 7))
def test_split_cardinality(order):
    """|^rH_j| as a sum of products over the two parity cases."""
    tbl = enumerate_classes(order)
    for j in range(2, order):
        left, right = enumerate_classes(j), enumerate_classes(order + 1 - j)
        for r in range(order):
            if r % 2 == 0:
                want = (left.count(j=j, r=r) + left.count(j=j, r=r - 1)) * right.count(j=1, max_r=r - 1)
            else:
                want = left.count(j=j, max_r=r - 1) * (right.count(j=1, r=r) + right.count(j=1, r=r - 1))
            assert tbl.count(j=j, r=r) == want, (order, j, r)


def test_extend_example():
    src = canonicalize(Diagram((2, 1, 3, 2, 3)))
    out = extend_class(src, "first", lift=src.class_height == 2)
    assert out == canonicalize(Diagram((3, 2, 1, 3, 2, 3)))
    assert (out.strongly_extremal, out.class_height) == (1, 3)


def test_extend_parity():
    even = canonicalize(Diagram((0, 0)))
    with pytest.raises(DiagramError):
        extend_class(even, "first")
    with pytest.raises(DiagramError):
        extend_class(even, "last")


@pytest.mark.parametrize("order", range(2, 7))
def test_first_column_bijection(order):
    """Both injections into H_1 are disjoint and exhaust it."""
    tbl = enumerate_classes(order)
    images = []
    for k in enumerate_classes(order - 1):
        for lift in (False, True):
            r = k.class_height + lift
            if r % 2 == 1:
                images.append(extend_class(k, "first", lift))
    assert len(images) == len(set(images))
    assert set(images) == set(tbl.select(j=1))
    assert len(images) == CATALAN[order - 1]
    for k in tbl.select(j=1):
        src, lifted = restrict_class(k, "first")
        assert extend_class(src, "first", lifted) == k


@pytest.mark.parametrize("order", range(2, 7))
def test_last_column_bijection(order):
    tbl = enumerate_classes(order)
    images = []
    for k in enumerate_classes(order - 1):
        for lift in (False, True):
            r = k.class_height + lift
            if r % 2 == 0 and r >= 2:
                images.append(extend_class(k, "last", lift))
    assert len(images) == len(set(images))
    assert set(images) | set(tbl.select(j=order, r=0)) == set(tbl.select(j=order))


def test_table_json_roundtrip():
    tbl = enumerate_classes(5)
    again = ClassTable.from_json(tbl.to_json())
    assert again.classes == tbl.classes and again.index == tbl.index
