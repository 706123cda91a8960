import random

import pytest
from hypothesis import given, settings, strategies as st

from polyops.trees import (
    LEAF,
    Generator,
    GraftIndexError,
    ParseError,
    Signature,
    SyntaxTree,
    arity,
    corolla_tree,
    count_shapes,
    enumerate_trees,
    graft,
    node,
    parse_tree,
    syntax_tree_dot,
    tree_to_text,
)

SIG2 = Signature.from_names(["a", "b"])
A, B = SIG2["a"], SIG2["b"]


def test_arity_examples():
    assert arity(LEAF) == 1
    assert arity(node(A, LEAF, LEAF)) == 2
    assert arity(node(A, node(A, LEAF, LEAF), LEAF)) == 3


def test_graft_definition():
    inner = node(A, LEAF, LEAF)
    outer = node(B, LEAF, LEAF)
    assert graft(outer, 1, inner) == node(B, inner, LEAF)
    assert graft(outer, 2, inner) == node(B, LEAF, inner)


def test_graft_leaf_is_unit():
    t = node(A, node(B, LEAF, LEAF), LEAF)
    for i in range(1, arity(t) + 1):
        assert graft(t, i, LEAF) == t
    assert graft(LEAF, 1, t) == t


def test_graft_index_errors():
    t = node(A, LEAF, LEAF)
    with pytest.raises(GraftIndexError):
        graft(t, 0, t)
    with pytest.raises(GraftIndexError):
        graft(t, 3, t)


def _random_tree(rng, n):
    if n == 1:
        return LEAF
    k = rng.randint(1, n - 1)
    g = rng.choice([A, B])
    return node(g, _random_tree(rng, k), _random_tree(rng, n - k))


def test_graft_arity_law_on_random_pairs():
    rng = random.Random(42)
    for _ in range(100):
        t = _random_tree(rng, rng.randint(1, 7))
        s = _random_tree(rng, rng.randint(1, 7))
        i = rng.randint(1, arity(t))
        assert arity(graft(t, i, s)) == arity(t) + arity(s) - 1


def _brute_force_shape_count(n):
    # independent Catalan recursion, no tree machinery
    counts = [0, 1]
    for m in range(2, n + 1):
        counts.append(sum(counts[k] * counts[m - k] for k in range(1, m)))
    return counts[n]


@pytest.mark.parametrize(
    "nsig, n, expected",
    [(2, 3, 8), (4, 3, 32), (2, 4, 40)],
)
def test_enumeration_counts(nsig, n, expected):
    sig = Signature.from_names([f"g{i}" for i in range(nsig)])
    trees = enumerate_trees(sig, n)
    assert len(trees) == expected
    assert len(trees) == _brute_force_shape_count(n) * nsig ** (n - 1)


def test_enumeration_distinct_and_stable():
    trees = enumerate_trees(SIG2, 4)
    assert len(set(trees)) == len(trees)
    assert trees == enumerate_trees(SIG2, 4)
    keys = [t.canonical_key() for t in trees]
    assert keys == sorted(keys)


def test_enumeration_rejects_arity_zero():
    with pytest.raises(ValueError):
        enumerate_trees(SIG2, 0)


def test_every_tree_reached_by_grafting():
    # regenerate arity-n components by one-step grafting from below
    reached = {1: {LEAF}}
    for n in range(2, 5):
        level = set()
        for t in reached[n - 1]:
            for g in SIG2:
                for i in range(1, arity(t) + 1):
                    level.add(graft(t, i, corolla_tree(g)))
        reached[n] = level
        assert level == set(enumerate_trees(SIG2, n))


def test_sequential_composition_axioms_exhaustive():
    trees = [t for n in (1, 2) for t in enumerate_trees(SIG2, n)]
    for t in enumerate_trees(SIG2, 2):
        for s in trees:
            for r in trees:
                m = arity(s)
                for i in range(1, arity(t) + 1):
                    for j in range(1, arity(t) + m):
                        ts = graft(t, i, s)
                        if j < i:
                            assert graft(ts, j, r) == graft(
                                graft(t, j, r), i + arity(r) - 1, s
                            )
                        elif j < i + m:
                            assert graft(ts, j, r) == graft(t, i, graft(s, j - i + 1, r))
                        else:
                            assert graft(ts, j, r) == graft(
                                graft(t, j - m + 1, r), i, s
                            )


@given(st.integers(min_value=1, max_value=7))
def test_shape_count_is_catalan(n):
    assert count_shapes(n) == _brute_force_shape_count(n)


def test_text_round_trip():
    for t in enumerate_trees(SIG2, 4):
        assert parse_tree(tree_to_text(t), SIG2) == t


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_tree("a(.,c(.,.))", SIG2)
    assert err.value.position == 4  # offset of the unknown name
    with pytest.raises(ParseError):
        parse_tree("a(.,.))", SIG2)
    with pytest.raises(ParseError):
        parse_tree("", SIG2)


def test_trees_hash_structurally():
    t1 = node(A, LEAF, node(B, LEAF, LEAF))
    t2 = node(A, LEAF, node(B, LEAF, LEAF))
    assert t1 == t2 and hash(t1) == hash(t2)
    assert t1 != node(A, node(B, LEAF, LEAF), LEAF)


def test_dot_export_mentions_all_nodes():
    t = node(A, LEAF, node(B, LEAF, LEAF))
    dot = syntax_tree_dot(t)
    assert dot.count("shape=circle") == 2
    assert dot.count("shape=square") == 3
