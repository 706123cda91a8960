import random
from fractions import Fraction

import pytest

from polyops.associativity import (
    SearchSpaceError,
    associator,
    classify_associative_modp,
    element,
    extract_quadratic_system,
    is_associative,
    line_of,
)
from polyops.linear import LinComb
from polyops.presentations import (
    build_presentation,
    std_from_harpoon,
    substitute_generators,
)


STD1 = build_presentation("dendr-std", 1)
STD2 = build_presentation("dendr-std", 2)


@pytest.mark.parametrize("gamma", [1, 2, 3])
def test_split_sums_are_associative(gamma):
    std = build_presentation("dendr-std", gamma)
    for b in range(1, gamma + 1):
        assert is_associative(std, element(std, (1, f"prec_{b}"), (1, f"succ_{b}")))


@pytest.mark.parametrize("gamma", [1, 2, 3])
def test_partial_harpoon_sums_are_associative(gamma):
    harpoon = build_presentation("dendr-harpoon", gamma)
    for b in range(1, gamma + 1):
        x = element(
            harpoon,
            *[(1, f"la_{a}") for a in range(1, b + 1)],
            *[(1, f"ra_{a}") for a in range(1, b + 1)],
        )
        assert is_associative(harpoon, x)


def test_prec_alone_is_not_associative():
    assert not is_associative(STD1, element(STD1, (1, "prec_1")))


@pytest.mark.parametrize("gamma", [1, 2, 3])
def test_multiplicial_generators_are_associative(gamma):
    dup = build_presentation("dup", gamma)
    for a in range(1, gamma + 1):
        assert is_associative(dup, element(dup, (1, f"ul_{a}")))
        assert is_associative(dup, element(dup, (1, f"ur_{a}")))
    assert not is_associative(dup, element(dup, (1, "ul_1"), (1, "ur_1")))


def test_zero_and_scaling_invariance():
    assert is_associative(STD2, LinComb.zero())
    x = element(STD2, (1, "prec_2"), (1, "succ_2"))
    bad = element(STD2, (1, "prec_1"), (2, "succ_1"))
    for lam in (Fraction(2), Fraction(-1, 3), Fraction(7, 2)):
        assert is_associative(STD2, lam * x)
        assert not is_associative(STD2, lam * bad)


def test_basis_invariance_through_substitution():
    harpoon = build_presentation("dendr-harpoon", 2)
    sub = std_from_harpoon(2)
    for b in (1, 2):
        x = element(STD2, (1, f"prec_{b}"), (1, f"succ_{b}"))
        image = substitute_generators(x, sub)
        assert is_associative(harpoon, image)


def test_associator_expansion():
    x = element(STD1, (1, "prec_1"))
    v = associator(STD1, x)
    assert len(v) == 2 and v.arity == 3


def test_quadratic_system_solution_line_at_gamma_one():
    system = extract_quadratic_system(STD1)
    assert all(v == 0 for v in system.evaluate([Fraction(1), Fraction(1)]))
    assert all(v == 0 for v in system.evaluate([Fraction(3), Fraction(3)]))
    for bad in ([1, 0], [0, 1], [1, -1], [2, 1]):
        vals = system.evaluate([Fraction(c) for c in bad])
        assert any(v != 0 for v in vals)


def test_quadratic_system_size_matches_complement():
    system = extract_quadratic_system(STD2)
    ambient = 2 * len(STD2.signature) ** 2
    assert len(system.equations) == ambient - STD2.relation_basis().dimension


def test_system_agrees_with_membership_on_random_vectors():
    rng = random.Random(123)
    system = extract_quadratic_system(STD2)
    monomials = STD2.arity2_monomials()
    for _ in range(100):
        coeffs = [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in monomials]
        x = LinComb(dict(zip(monomials, coeffs)))
        assert is_associative(STD2, x) == all(v == 0 for v in system.evaluate(coeffs))


@pytest.mark.parametrize("gamma", [1, 2])
@pytest.mark.parametrize("p", [5, 7])
def test_classification_dendriform(gamma, p):
    std = build_presentation("dendr-std", gamma)
    got = classify_associative_modp(std, p)
    want = {
        line_of(std, element(std, (1, f"prec_{b}"), (1, f"succ_{b}")), p)
        for b in range(1, gamma + 1)
    }
    assert got == want


@pytest.mark.parametrize("gamma", [1, 2])
@pytest.mark.parametrize("p", [5, 7])
def test_classification_multiplicial(gamma, p):
    dup = build_presentation("dup", gamma)
    got = classify_associative_modp(dup, p)
    want = {line_of(dup, element(dup, (1, name)), p) for name in dup.signature.names()}
    assert got == want
    assert len(got) == 2 * gamma


def test_multiassociative_has_extra_solutions():
    as2 = build_presentation("as", 2)
    sols = classify_associative_modp(as2, 5)
    assert line_of(as2, element(as2, (1, "star_1"), (1, "star_2")), 5) in sols
    assert len(sols) > 2
    assert is_associative(as2, element(as2, (1, "star_1"), (1, "star_2")))


def test_search_space_refusal():
    std3 = build_presentation("dendr-std", 3)
    with pytest.raises(SearchSpaceError):
        classify_associative_modp(std3, 7, max_candidates=100)
