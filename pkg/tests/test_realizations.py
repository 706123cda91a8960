import itertools
import random

import pytest

from polyops.hilbert import catalan, dims
from polyops.linear import LinComb
from polyops.realizations import (
    INF,
    NODE,
    Corolla,
    EVLEAF,
    EVNode,
    SchroderNode,
    UndefinedProductError,
    corolla_compose,
    count_ev_trees,
    dendr_prec,
    dendr_succ,
    dup_over,
    dup_under,
    ev_trees,
    evtree_dot,
    evtree_to_text,
    is_alternating,
    meet,
    over_lc,
    parse_evtree,
    parse_schroder,
    prec_lc,
    random_ev_tree,
    schroder_compose,
    schroder_dot,
    schroder_to_text,
    schroder_trees,
    succ_lc,
    under_lc,
)
from polyops.trees import GraftIndexError


# -- corollas --------------------------------------------------------------


def test_corolla_compositions_from_worked_examples():
    assert corolla_compose(Corolla(3, 2), 1, Corolla(2, 1)) == Corolla(4, 2)
    assert corolla_compose(Corolla(2, 2), 2, Corolla(3, 3)) == Corolla(4, 3)


def test_corolla_unit():
    c = Corolla(3, 2)
    for i in (1, 2, 3):
        assert corolla_compose(c, i, Corolla(1)) == c
    assert corolla_compose(Corolla(1), 1, c) == c


def test_corolla_errors():
    with pytest.raises(GraftIndexError):
        corolla_compose(Corolla(2, 1), 3, Corolla(2, 1))
    with pytest.raises(ValueError):
        Corolla(1, 2)
    with pytest.raises(ValueError):
        Corolla(3)


def test_corolla_sequential_axioms_random():
    rng = random.Random(5)
    for _ in range(50):
        c1 = Corolla(rng.randint(2, 6), rng.randint(1, 3))
        c2 = Corolla(rng.randint(2, 6), rng.randint(1, 3))
        c3 = Corolla(rng.randint(2, 6), rng.randint(1, 3))
        i = rng.randint(1, c1.arity)
        j = rng.randint(1, c2.arity)
        nested_l = corolla_compose(corolla_compose(c1, i, c2), i + j - 1, c3)
        nested_r = corolla_compose(c1, i, corolla_compose(c2, j, c3))
        assert nested_l == nested_r


# -- alternating Schröder trees ------------------------------------------------


def test_schroder_forced_contraction():
    a = SchroderNode(2, (None, None))
    out = schroder_compose(a, 1, a)
    assert out == SchroderNode(2, (None, None, None))


def test_schroder_no_contraction():
    one = SchroderNode(1, (None, None))
    two = SchroderNode(2, (None, None))
    out = schroder_compose(one, 2, two)
    assert out == SchroderNode(1, (None, two))


def test_schroder_worked_examples():
    s1 = parse_schroder("2(1(.,2(.,.)),.,3(.,.,1(.,.)))")
    s2 = parse_schroder("3(2(.,.),.)")
    plain_graft = schroder_compose(s1, 4, s2)
    assert schroder_to_text(plain_graft) == "2(1(.,2(.,.)),3(2(.,.),.),3(.,.,1(.,.)))"
    contracted = schroder_compose(s1, 5, s2)
    assert schroder_to_text(contracted) == "2(1(.,2(.,.)),.,3(2(.,.),.,.,1(.,.)))"


def test_schroder_unit_and_errors():
    t = parse_schroder("1(.,2(.,.))")
    assert schroder_compose(t, 2, None) == t
    assert schroder_compose(None, 1, t) == t
    with pytest.raises(GraftIndexError):
        schroder_compose(t, 4, t)


@pytest.mark.parametrize("gamma", [1, 2, 3])
def test_schroder_counts_match_dual_multiassociative_dims(gamma):
    got = [sum(1 for _ in schroder_trees(gamma, n)) for n in range(1, 6)]
    assert got == dims("das", gamma, 5).dims()


def test_schroder_enumeration_is_alternating():
    for t in schroder_trees(2, 4):
        assert t is None or is_alternating(t)


def test_schroder_sequential_axioms_random():
    rng = random.Random(11)
    pool = [t for n in (1, 2, 3) for t in schroder_trees(3, n)]
    for _ in range(60):
        t, s, r = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        at = 1 if t is None else t.arity
        as_ = 1 if s is None else s.arity
        i = rng.randint(1, at)
        j = rng.randint(1, as_)
        left = schroder_compose(schroder_compose(t, i, s), i + j - 1, r)
        right = schroder_compose(t, i, schroder_compose(s, j, r))
        assert left == right


def test_schroder_parallel_axiom_random():
    rng = random.Random(13)
    pool = [t for n in (2, 3) for t in schroder_trees(3, n)]
    for _ in range(60):
        t = rng.choice([x for x in pool if x.arity >= 2])
        s, r = rng.choice(pool), rng.choice(pool)
        i = 1
        j = t.arity  # disjoint positions: j > i
        lhs = schroder_compose(schroder_compose(t, i, s), j + s.arity - 1, r)
        rhs = schroder_compose(schroder_compose(t, j, r), i, s)
        assert lhs == rhs


# -- edge-valued binary trees ---------------------------------------------------


def test_meet_handles_sentinel():
    assert meet(2, INF) == 2
    assert meet(INF, 2) == 2
    assert meet(1, 3) == 1


@pytest.mark.parametrize("gamma", [1, 2, 3])
def test_ev_tree_counts(gamma):
    for n in range(1, 7):
        assert count_ev_trees(gamma, n) == gamma ** (n - 1) * catalan(n)


def test_evtree_grammar_round_trip():
    for t in ev_trees(2, 4):
        assert parse_evtree(evtree_to_text(t)) == t
    assert parse_evtree(".") == EVLEAF
    assert parse_evtree("(.,.)") == NODE


def test_evnode_label_leaf_consistency():
    with pytest.raises(ValueError):
        EVNode(EVLEAF, EVLEAF, 1, INF)
    with pytest.raises(ValueError):
        EVNode(NODE, EVLEAF, INF, INF)


# -- free polydendriform products -----------------------------------------------


def test_dendr_base_cases():
    s = NODE
    assert dendr_prec(1, s, EVLEAF) == LinComb.monomial(s)
    assert dendr_succ(1, EVLEAF, s) == LinComb.monomial(s)
    assert dendr_prec(1, EVLEAF, s).is_zero()
    assert dendr_succ(1, s, EVLEAF).is_zero()
    with pytest.raises(UndefinedProductError):
        dendr_prec(1, EVLEAF, EVLEAF)
    with pytest.raises(UndefinedProductError):
        dendr_succ(1, EVLEAF, EVLEAF)


def test_single_node_products():
    out = dendr_prec(2, NODE, NODE)
    assert out == LinComb.monomial(parse_evtree("(.,(.,.))[inf,2]"))
    out = dendr_succ(2, NODE, NODE)
    assert out == LinComb.monomial(parse_evtree("((.,.),.)[2,inf]"))


def test_polydendriform_worked_example_gamma2():
    s = parse_evtree("((.,.),(.,(.,.))[inf,1])[1,3]")
    t = parse_evtree("((.,.),(.,.))[1,2]")
    prec = dendr_prec(2, s, t)
    assert len(prec) == 6
    assert all(c == 1 for _, c in prec)
    first = parse_evtree("((.,.),(.,(.,((.,.),(.,.))[1,2])[inf,2])[inf,1])[1,2]")
    assert prec[first] == 1
    succ = dendr_succ(2, s, t)
    assert len(succ) == 4
    assert all(c == 1 for _, c in succ)


def test_classical_dendriform_products_have_three_terms():
    s = parse_evtree("((.,.),((.,.),.)[1,inf])[1,1]")
    t = parse_evtree("((.,(.,.))[inf,1],.)[1,inf]")
    assert len(dendr_prec(1, s, t)) == 3
    assert len(dendr_succ(1, s, t)) == 3


def test_product_grading():
    for s in ev_trees(2, 2):
        for t in ev_trees(2, 2):
            for out in (dendr_prec(1, s, t), dendr_succ(2, s, t)):
                for tree, _ in out:
                    assert tree.size == 4


# -- free multiplicial products ---------------------------------------------------


def test_dup_base_cases():
    s = NODE
    assert dup_under(1, s, EVLEAF) == s
    assert dup_over(1, EVLEAF, s) == s
    assert dup_under(1, EVLEAF, s) is None
    assert dup_over(1, s, EVLEAF) is None
    with pytest.raises(UndefinedProductError):
        dup_under(1, EVLEAF, EVLEAF)
    with pytest.raises(UndefinedProductError):
        dup_over(1, EVLEAF, EVLEAF)


def test_dup_single_node():
    assert dup_under(2, NODE, NODE) == parse_evtree("(.,(.,.))[inf,2]")
    assert dup_over(2, NODE, NODE) == parse_evtree("((.,.),.)[2,inf]")


def test_multiplicial_worked_examples():
    t = parse_evtree("((.,.),(.,(.,.))[inf,1])[1,3]")
    s = parse_evtree("((.,.),(.,.))[1,2]")
    under = dup_under(2, t, s)
    assert evtree_to_text(under) == "((.,.),(.,(.,((.,.),(.,.))[1,2])[inf,2])[inf,1])[1,2]"
    over = dup_over(2, t, s)
    assert evtree_to_text(over) == "((((.,.),(.,(.,.))[inf,1])[1,3],.)[2,inf],(.,.))[1,2]"


# -- algebra laws and generation ---------------------------------------------------


def _triples(gamma, max_total):
    pool = [t for n in range(1, max_total - 1) for t in ev_trees(gamma, n)]
    for r, s, t in itertools.product(pool, repeat=3):
        if r.size + s.size + t.size <= max_total:
            yield r, s, t


@pytest.mark.parametrize("a, ap", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_polydendriform_laws_small(a, ap):
    m = min(a, ap)
    for r, s, t in _triples(2, 4):
        lhs1 = prec_lc(a, succ_lc(ap, r, s), t)
        rhs1 = succ_lc(ap, r, prec_lc(a, s, t))
        assert lhs1 == rhs1
        lhs2 = prec_lc(a, prec_lc(ap, r, s), t)
        rhs2 = prec_lc(m, r, prec_lc(a, s, t)) + prec_lc(m, r, succ_lc(ap, s, t))
        assert lhs2 == rhs2
        lhs3 = succ_lc(m, prec_lc(ap, r, s), t) + succ_lc(m, succ_lc(a, r, s), t)
        rhs3 = succ_lc(a, r, succ_lc(ap, s, t))
        assert lhs3 == rhs3


@pytest.mark.parametrize("a, ap", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_multiplicial_laws_small(a, ap):
    m = min(a, ap)
    for r, s, t in _triples(2, 4):
        assert under_lc(a, over_lc(ap, r, s), t) == over_lc(ap, r, under_lc(a, s, t))
        assert under_lc(a, under_lc(ap, r, s), t) == under_lc(m, r, under_lc(a, s, t))
        assert over_lc(m, over_lc(a, r, s), t) == over_lc(a, r, over_lc(ap, s, t))


def test_generation_recipe_reconstructs_trees():
    for n in range(2, 5):
        for t in ev_trees(2, n):
            want = LinComb.monomial(t)
            assert prec_lc(t.ry, succ_lc(t.lx, t.left, NODE), t.right) == want
            assert under_lc(t.ry, over_lc(t.lx, t.left, NODE), t.right) == want


def test_random_tree_sampler_is_seeded():
    one = random_ev_tree(random.Random(3), 3, 5)
    two = random_ev_tree(random.Random(3), 3, 5)
    assert one == two and one.size == 5


def test_dot_exports():
    t = parse_evtree("((.,.),(.,.))[1,2]")
    dot = evtree_dot(t)
    assert 'label="1"' in dot and 'label="2"' in dot
    s = parse_schroder("2(1(.,.),.)")
    assert 'label="2"' in schroder_dot(s)
