import itertools

import pytest
from hypothesis import given, strategies as st

from catalania.enumeration import catalan
from catalania.hypercube import (
    canonical_sequence,
    classify,
    direct_multiplicities,
    dominates,
    embed,
    increasing_normal_form,
    increasing_sequences,
    isomorphism_partition,
    multiplicities,
    order_from_canonical,
    printed_edge_recursion,
    sequence_multiplicities,
)
from catalania.sgraph import LinearOrderC, all_orders, build_sgraph
from catalania.tableau import LinearForm

perms = st.integers(1, 7).flatmap(lambda t: st.permutations(range(1, t + 1))).map(tuple)


def canonical_oracle(perm):
    # rank of k_i among itself and everything before it
    return tuple(sorted(perm[: i + 1]).index(x) + 1 for i, x in enumerate(perm))


def test_t1():
    emb = embed("1")
    assert sorted(emb.coords) == [(0,), (1,)]


def test_square_missing_edge():
    emb = embed("1<2")
    g = emb.graph
    missing = [(a, b) for a, b in itertools.combinations(range(4), 2)
               if emb.hamming(a, b) == 1 and g.edge_between(a, b) is None]
    assert [(g.label(a), g.label(b)) for a, b in missing] == [(1, 1)]


def test_octagon_missing_edges():
    emb = embed("2<1<3")
    g = emb.graph
    missing = sorted(g.label(a) for a, b in itertools.combinations(range(8), 2)
                     if emb.hamming(a, b) == 1 and g.edge_between(a, b) is None)
    assert missing == [1, 2, 3, 4]


@pytest.mark.parametrize("t", range(1, 6))
def test_embedding_invariants(t):
    for o in all_orders(t):
        emb = embed(o)
        assert emb.coords[emb.v_h] == (0,) * t
        assert emb.coords[emb.v_h_star] == (1,) * t


def test_dominance_on_cone():
    g = build_sgraph("1<2")
    zero = LinearForm.zero(2)
    o = LinearOrderC((1, 2))
    for v in g.vertices:
        if v.form != zero:
            assert dominates(v.form, zero, o)
            assert not dominates(zero, v.form, o)


# -- canonical sequences ----------------------------------------------------------------


def test_canonical_examples():
    assert canonical_sequence((1, 2, 3, 4)) == (1, 2, 3, 4)
    assert canonical_sequence((4, 3, 2, 1)) == (1, 1, 1, 1)
    assert canonical_sequence("2<3<1") == (1, 2, 1)
    assert canonical_sequence("2<1<3") == (1, 1, 3)


@given(perms)
def test_canonical_matches_oracle(p):
    assert canonical_sequence(p) == canonical_oracle(p)


@given(perms)
def test_canonical_roundtrip(p):
    cs = canonical_sequence(p)
    assert all(1 <= n <= i for i, n in enumerate(cs, start=1)) or len(p) == 0
    assert order_from_canonical(cs).perm == p


def test_canonical_roundtrip_exhaustive_t6():
    for o in all_orders(6):
        assert order_from_canonical(canonical_sequence(o)) == o


def test_order_from_canonical_range():
    with pytest.raises(ValueError):
        order_from_canonical((1, 3))


# -- multiplicities ------------------------------------------------------------------------


def test_square_multiplicities():
    g = build_sgraph("1<2")
    assert [g.vertex_label_counts()[k] for k in (1, 2, 3)] == [2, 1, 1]
    assert [g.edge_label_counts()[k] for k in (1, 2)] == [2, 1]
    assert multiplicities("1<2") == ((1, 0, 0), (1, 0))


def test_octagon_multiplicities():
    assert multiplicities("2<1<3") == ((1, 1, 1, 1), (1, 2, 1))


@pytest.mark.parametrize("t", range(1, 6))
def test_recursion_matches_counts(t):
    for o in all_orders(t):
        assert multiplicities(o) == direct_multiplicities(o)


def test_printed_edge_recursion_only_fits_increasing():
    # the recursion read without the index shift misses every other order at t=3
    fits = [str(o) for o in all_orders(3) if printed_edge_recursion(canonical_sequence(o)) == direct_multiplicities(o)[1]]
    assert fits == ["1<2<3"]


@pytest.mark.parametrize("t", range(2, 6))
def test_switch_invariance(t):
    for o in all_orders(t):
        cs = list(canonical_sequence(o))
        base = sequence_multiplicities(cs)
        for i in range(t - 1):
            if cs[i] > cs[i + 1]:
                sw = cs[:i] + [cs[i + 1], cs[i] + 1] + cs[i + 2:]
                assert sequence_multiplicities(sw) == base


def test_normal_form_examples():
    assert increasing_normal_form((1, 2, 1)) == (1, 1, 3)
    assert increasing_normal_form((1, 1, 2)) == (1, 1, 2)


@pytest.mark.parametrize("t", range(1, 7))
def test_normal_forms_are_catalan(t):
    nfs = {increasing_normal_form(canonical_sequence(o)) for o in all_orders(t)}
    assert nfs == set(increasing_sequences(t))
    assert len(nfs) == catalan(t)


# -- classification ------------------------------------------------------------------------------


@pytest.mark.parametrize("t,n", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
def test_classify(t, n):
    blocks = classify(t)
    assert len(blocks) == n
    assert sum(len(b.orders) for b in blocks) == len(all_orders(t))


def test_classify_t3_blocks():
    blocks = {b.normal_form: [str(o) for o in b.orders] for b in classify(3)}
    assert blocks[(1, 1, 3)] == ["2<1<3", "2<3<1"]


@pytest.mark.parametrize("t", range(1, 5))
def test_isomorphism_partition_matches(t):
    blocks = sorted(sorted(str(o) for o in b.orders) for b in classify(t))
    assert isomorphism_partition(t) == blocks
