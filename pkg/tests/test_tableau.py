import random

import pytest
from hypothesis import given, strategies as st

from catalania.diagram import Diagram, canonicalize, complete_representatives, dual
from catalania.enumeration import enumerate_classes
from catalania.links import chain_classes
from catalania.sgraph import all_orders, build_sgraph
from catalania.tableau import (
    Comparison,
    LinearForm,
    class_function,
    compare,
    driving_function,
    dual_function,
    evaluate,
    function_distinct,
    label_tableau,
    m_to_f,
    partial_order,
    r_to_m,
    tableau_partial_order,
)

PRIMES = (2, 3, 5, 7, 11, 13)


def well_numbered_oracle(d):
    n = d.order
    want = {}
    for j in range(1, d.height + 1):
        for i in d.row(j):
            if j % 2:
                want[(i, j)] = None if i == n else i
            else:
                want[(i, j)] = None if i == 1 else i - 1
    return want


def test_label_example_incomplete():
    tab = label_tableau(Diagram((2, 1, 0, 2)))
    assert tab.label(4, 2) == 2
    assert tab.label(1, 2) is None


def test_label_example_complete():
    tab = label_tableau(Diagram((2, 1, 2, 2)))
    assert [tab.label(i, 2) for i in (1, 3, 4)] == [None, 2, 3]
    assert tab.is_well_numbered()


def test_blank_cells():
    for order in range(1, 6):
        for key in enumerate_classes(order):
            for d in complete_representatives(key, 1):
                tab = label_tableau(d)
                for j in range(1, d.height + 1):
                    cols = d.row(j)
                    blank = [i for i in cols if tab.label(i, j) is None]
                    assert blank == [cols[0] if j % 2 == 0 else cols[-1]]


@pytest.mark.parametrize("order", range(1, 6))
def test_complete_tableaux_well_numbered(order):
    for key in enumerate_classes(order):
        for d in complete_representatives(key, 2):
            assert dict(label_tableau(d).labels) == well_numbered_oracle(d)


def test_ascii_dump():
    art = label_tableau(Diagram((2, 1, 2, 2))).ascii()
    assert art.splitlines()[0].split() == [".", "2", "3"]


# -- partial orders -------------------------------------------------------------


def test_partial_order_example():
    assert tableau_partial_order(label_tableau(Diagram((2, 1, 0, 2)))).pairs == {(2, 1), (2, 3)}
    assert partial_order(canonicalize(Diagram((2, 1, 0, 2)))).pairs == {(2, 1)}


def test_empty_order():
    for order in range(1, 6):
        assert partial_order(canonicalize(Diagram.empty(order))).pairs == frozenset()


def test_chain_classes_have_empty_order():
    assert all(partial_order(k).pairs == frozenset() for k in chain_classes(4))


@pytest.mark.parametrize("order", range(1, 7))
def test_acyclic(order):
    assert all(partial_order(k).is_acyclic() for k in enumerate_classes(order))


@pytest.mark.parametrize("order", range(1, 5))
def test_representative_independence(order):
    for key in enumerate_classes(order):
        reps = complete_representatives(key, 3)
        orders = {tableau_partial_order(label_tableau(d)).pairs for d in reps}
        assert len(orders) == 1
        f = class_function(key)
        from catalania.tableau import tableau_function

        assert all(tableau_function(d) == f for d in reps)


def test_compatible_with():
    po = partial_order(canonicalize(Diagram((2, 1, 0, 2))))
    assert po.compatible_with((2, 1, 3)) and po.compatible_with((3, 2, 1))
    assert not po.compatible_with((1, 2, 3))


# -- linear forms -------------------------------------------------------------------


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_m_basis_roundtrip(xs):
    r = xs + [-sum(xs)]
    f = m_to_f(r_to_m(r))
    assert f is not None
    back = [0] * len(r)
    for i, b in enumerate(f):
        back[i] += b
        back[i + 1] -= b
    assert back == r


def test_driving_function_is_not_r_difference():
    assert not driving_function(3).is_r_difference()


def test_empty_class_function_is_zero():
    for order in range(1, 6):
        assert class_function(canonicalize(Diagram.empty(order))) == LinearForm.zero(order - 1)


@pytest.mark.parametrize("order", range(2, 7))
def test_coefficient_shapes(order):
    """Each c_k row is r^k - r^j for one j != k, or zero."""
    for key in enumerate_classes(order):
        for k, row in enumerate(class_function(key).r_rows(), start=1):
            if not any(row):
                continue
            assert row[k - 1] == 1, (key, k, row)
            assert sorted(row) == [-1] + [0] * (len(row) - 2) + [1], (key, k, row)


@pytest.mark.parametrize("order", range(2, 7))
def test_zero_m_column(order):
    t = order - 1
    h = driving_function(t)
    for key in enumerate_classes(order):
        mat = (h + class_function(key)).matrix
        assert not mat[:, key.strongly_extremal - 1].any(), key


def test_zero_c_row_reading_fails():
    # the c_j row of h + f does not vanish in general
    h = driving_function(2)
    bad = []
    for key in enumerate_classes(3):
        j = key.strongly_extremal
        if j <= 2 and (h + class_function(key)).matrix[j - 1].any():
            bad.append(key)
    assert bad


def test_dual_of_zero():
    t = 3
    want = LinearForm.from_r_rows([[1 if i == k else -1 if i == k + 1 else 0 for i in range(t + 1)] for k in range(t)])
    assert dual_function(LinearForm.zero(t)) == want


def test_dual_example():
    f = class_function(canonicalize(Diagram((2, 1, 0, 2))))
    assert dual_function(f) == class_function(canonicalize(Diagram((3, 1, 2, 3))))


@pytest.mark.parametrize("order", range(1, 6))
def test_dual_identity(order):
    for key in enumerate_classes(order):
        f = class_function(key)
        assert dual_function(f) == class_function(canonicalize(dual(key.deplete)))
        assert dual_function(dual_function(f)) == f


@pytest.mark.parametrize("order", range(2, 7))
def test_separation_at_primes(order):
    forms = [class_function(k) for k in enumerate_classes(order)]
    assert function_distinct(forms, PRIMES[: order - 1])


@pytest.mark.parametrize("order", range(2, 7))
def test_separation_random(order):
    rng = random.Random(order)
    forms = [class_function(k) for k in enumerate_classes(order)]
    for _ in range(10):
        vals = rng.sample(range(1, 50), order - 1)
        assert function_distinct(forms, vals)


def test_h4_at_two_three_five():
    vecs = {evaluate(class_function(k), (2, 3, 5)) for k in enumerate_classes(4)}
    assert len(vecs) == 14


def test_evaluate_basics():
    assert evaluate(LinearForm.zero(3), (1, 2, 3)) == (0, 0, 0, 0)
    f = class_function(canonicalize(Diagram((2, 1, 0, 2))))
    assert evaluate(f, (4, 6, 10)) == tuple(2 * x for x in evaluate(f, (2, 3, 5)))
    with pytest.raises(ValueError):
        evaluate(f, (1, 2))


# -- comparison ---------------------------------------------------------------------


@pytest.mark.parametrize("t", range(1, 5))
def test_zero_is_minimal(t):
    for o in all_orders(t):
        g = build_sgraph(o)
        zero = LinearForm.zero(t)
        vals = o.generic_values()
        for v in g.vertices:
            want = Comparison.EQUAL if v.form == zero else Comparison.GREATER
            assert compare(v.form, zero, vals) is want


@pytest.mark.parametrize("t", range(1, 5))
def test_lower_label_end_is_larger(t):
    for o in all_orders(t):
        g = build_sgraph(o)
        vals = o.generic_values()
        for e in g.edges:
            lo, hi = (e.u, e.v) if g.label(e.u) < g.label(e.v) else (e.v, e.u)
            assert compare(g.vertices[lo].form, g.vertices[hi].form, vals) is Comparison.GREATER


def test_octagon_has_incomparable_pair():
    g = build_sgraph("2<1<3")
    forms = [v.form for v in g.vertices]
    kinds = {compare(a, b, (2, 3, 5)) for a in forms for b in forms}
    assert Comparison.INCOMPARABLE in kinds


def test_compare_rejects_non_class_difference():
    with pytest.raises(ValueError):
        compare(driving_function(2), LinearForm.zero(2), (1, 2))
