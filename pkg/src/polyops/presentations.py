"""Binary quadratic presentations of the dendriform-family operads.

Each presentation is a signature together with the arity-3 relation
generators exactly as displayed in the defining presentations, kept as
written (linear dependence allowed; spans are computed on demand).  The
families, with their generator naming conventions:

==================  =====================  ==========================
family tag          generators             operad
==================  =====================  ==========================
dendr-classic       prec_1, succ_1         classical dendriform
dendr-harpoon       la_a, ra_a             gamma-polydendriform
dendr-std           prec_a, succ_a         gamma-polydendriform
dendr-concise       prec_a, succ_a         same span as dendr-std
as                  star_a                 gamma-multiassociative
as-concise          star_a                 same span as as
as-triangle         tri_a                  gamma-multiassociative
das-lozenge         loz_a                  gamma-dual multiassociative
das-diamond         dia_a                  gamma-dual multiassociative
dq                  prec_a, succ_a         two-parameter interpolation
dup                 ul_a, ur_a             gamma-multiplicial
tdendr              la_a, wedge, ra_a      gamma-polytridendriform
==================  =====================  ==========================

Koszul duality is computed concretely: the dual presentation keeps the
generators (primed names) and takes the annihilator of the relation span
under the signed pairing <x o_1 y, x o_1 y> = 1, <x o_2 y, x o_2 y> = -1.
The diassociative- and triassociative-type operads are *defined* here as
the duals of dendr-harpoon and tdendr.
"""

from __future__ import annotations

import itertools
import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .linear import Basis, Echelon, LinComb, member, orthogonal_complement, span_basis
from .trees import (
    LEAF,
    Generator,
    Signature,
    SyntaxTree,
    corolla_tree,
    enumerate_trees,
    graft,
    node,
    parse_tree,
    tree_to_text,
)


def comp(x: Generator, i: int, y: Generator) -> SyntaxTree:
    """The arity-3 monomial x o_i y (i in {1, 2})."""
    if i == 1:
        return node(x, corolla_tree(y), LEAF)
    if i == 2:
        return node(x, LEAF, corolla_tree(y))
    raise ValueError("composition position must be 1 or 2")


def _rel(*terms) -> LinComb:
    """Relation from (coeff, gen, i, gen) tuples."""
    out: dict = {}
    for c, x, i, y in terms:
        t = comp(x, i, y)
        out[t] = out.get(t, 0) + Fraction(c)
    return LinComb(out)


@dataclass(frozen=True)
class Presentation:
    """A binary quadratic presentation (signature, arity-3 relations)."""

    signature: Signature
    relations: tuple[LinComb, ...]
    family_tag: str
    gamma: int
    q: Fraction | None = None

    def __repr__(self) -> str:
        return (
            f"Presentation({self.family_tag}, gamma={self.gamma}, "
            f"{len(self.signature)} generators, {len(self.relations)} relations)"
        )

    def generator(self, name: str) -> Generator:
        return self.signature[name]

    def arity2_monomials(self) -> list[SyntaxTree]:
        return [corolla_tree(g) for g in self.signature]

    def monomials(self, n: int) -> list[SyntaxTree]:
        return enumerate_trees(self.signature, n)

    def relation_basis(self) -> Basis:
        return span_basis(self.relations, self.monomials(3))

    def cache_key(self):
        return (self.family_tag, self.gamma, self.q, self.signature)

    def to_json(self) -> dict:
        return {
            "family": self.family_tag,
            "gamma": self.gamma,
            "q": None if self.q is None else str(self.q),
            "generators": self.signature.names(),
            "relations": [lincomb_to_json(r) for r in self.relations],
        }


def lincomb_to_json(v: LinComb) -> list[dict]:
    items = sorted(v, key=lambda kc: kc[0].canonical_key())
    return [{"coeff": str(c), "tree": tree_to_text(k)} for k, c in items]


def lincomb_from_json(data: Sequence[Mapping], sig: Signature) -> LinComb:
    out: dict = {}
    for item in data:
        t = parse_tree(item["tree"], sig)
        out[t] = out.get(t, 0) + Fraction(item["coeff"])
    return LinComb(out)


def presentation_from_json(data: Mapping) -> Presentation:
    sig = Signature.from_names(data["generators"])
    rels = tuple(lincomb_from_json(r, sig) for r in data["relations"])
    q = data.get("q")
    return Presentation(
        sig, rels, data["family"], int(data["gamma"]), None if q is None else Fraction(q)
    )


# -- family constructors -------------------------------------------------------


def _range1(gamma: int):
    return range(1, gamma + 1)


def build_presentation(family: str, gamma: int, q: Fraction | int | None = None) -> Presentation:
    """Construct a named presentation at parameter gamma (and q for 'dq').

    gamma = 0 is allowed and yields degenerate presentations (no generators,
    except 'tdendr' which keeps its middle generator).
    """
    if gamma < 0:
        raise ValueError("gamma must be a nonnegative integer")
    tag = family.strip().lower()
    if tag != "dq" and q is not None:
        raise ValueError(f"family {family!r} takes no q parameter")
    builder = _FAMILIES.get(tag)
    if builder is None:
        raise ValueError(f"unknown presentation family {family!r}")
    if tag == "dq":
        return builder(gamma, Fraction(q if q is not None else 0))
    return builder(gamma)


def _dendr_classic(gamma: int) -> Presentation:
    # the classical dendriform operad is the gamma = 1 point of the family
    if gamma != 1:
        raise ValueError("the classical dendriform presentation requires gamma = 1")
    sig = Signature.from_names(["prec_1", "succ_1"])
    p, s = sig["prec_1"], sig["succ_1"]
    rels = (
        _rel((1, p, 1, s), (-1, s, 2, p)),
        _rel((1, p, 1, p), (-1, p, 2, p), (-1, p, 2, s)),
        _rel((1, s, 1, p), (1, s, 1, s), (-1, s, 2, s)),
    )
    return Presentation(sig, rels, "dendr-classic", 1)


def _harpoon_signature(gamma: int) -> Signature:
    return Signature.from_names(
        [f"la_{a}" for a in _range1(gamma)] + [f"ra_{a}" for a in _range1(gamma)]
    )


def _dendr_harpoon(gamma: int) -> Presentation:
    sig = _harpoon_signature(gamma)
    la = {a: sig[f"la_{a}"] for a in _range1(gamma)}
    ra = {a: sig[f"ra_{a}"] for a in _range1(gamma)}
    rels = []
    for a in _range1(gamma):
        for ap in _range1(gamma):
            rels.append(_rel((1, la[a], 1, ra[ap]), (-1, ra[ap], 2, la[a])))
    for a, b in itertools.combinations(_range1(gamma), 2):
        rels.append(_rel((1, la[a], 1, la[b]), (-1, la[a], 2, ra[b])))
        rels.append(_rel((1, ra[a], 1, la[b]), (-1, ra[a], 2, ra[b])))
        rels.append(_rel((1, la[b], 1, la[a]), (-1, la[a], 2, la[b])))
        rels.append(_rel((1, ra[a], 1, ra[b]), (-1, ra[b], 2, ra[a])))
    for d in _range1(gamma):
        terms = [(1, la[d], 1, la[d])]
        for c in _range1(d):
            terms.append((-1, la[d], 2, la[c]))
            terms.append((-1, la[d], 2, ra[c]))
        rels.append(_rel(*terms))
        terms = [(-1, ra[d], 2, ra[d])]
        for c in _range1(d):
            terms.append((1, ra[d], 1, ra[c]))
            terms.append((1, ra[d], 1, la[c]))
        rels.append(_rel(*terms))
    return Presentation(sig, tuple(rels), "dendr-harpoon", gamma)


def _std_signature(gamma: int) -> Signature:
    return Signature.from_names(
        [f"prec_{a}" for a in _range1(gamma)] + [f"succ_{a}" for a in _range1(gamma)]
    )


def _dendr_std(gamma: int) -> Presentation:
    sig = _std_signature(gamma)
    p = {a: sig[f"prec_{a}"] for a in _range1(gamma)}
    s = {a: sig[f"succ_{a}"] for a in _range1(gamma)}
    rels = []
    for a in _range1(gamma):
        for ap in _range1(gamma):
            rels.append(_rel((1, p[a], 1, s[ap]), (-1, s[ap], 2, p[a])))
    for a, b in itertools.combinations(_range1(gamma), 2):
        rels.append(_rel((1, p[a], 1, p[b]), (-1, p[a], 2, s[b]), (-1, p[a], 2, p[a])))
        rels.append(_rel((1, s[a], 1, s[a]), (1, s[a], 1, p[b]), (-1, s[a], 2, s[b])))
        rels.append(_rel((1, p[b], 1, p[a]), (-1, p[a], 2, p[b]), (-1, p[a], 2, s[a])))
        rels.append(_rel((1, s[a], 1, p[a]), (1, s[a], 1, s[b]), (-1, s[b], 2, s[a])))
    for a in _range1(gamma):
        rels.append(_rel((1, p[a], 1, p[a]), (-1, p[a], 2, s[a]), (-1, p[a], 2, p[a])))
        rels.append(_rel((1, s[a], 1, s[a]), (1, s[a], 1, p[a]), (-1, s[a], 2, s[a])))
    return Presentation(sig, tuple(rels), "dendr-std", gamma)


def _dendr_concise(gamma: int) -> Presentation:
    pres = _dq(gamma, Fraction(1))
    return Presentation(pres.signature, pres.relations, "dendr-concise", gamma)


def _dq(gamma: int, q: Fraction) -> Presentation:
    # min-indexed interpolation; q = 1 recovers the concise polydendriform
    # relations and q = 0 the multiplicial ones
    sig = _std_signature(gamma)
    p = {a: sig[f"prec_{a}"] for a in _range1(gamma)}
    s = {a: sig[f"succ_{a}"] for a in _range1(gamma)}
    rels = []
    for a in _range1(gamma):
        for ap in _range1(gamma):
            m = min(a, ap)
            rels.append(_rel((1, p[a], 1, s[ap]), (-1, s[ap], 2, p[a])))
            rels.append(
                _rel((1, p[a], 1, p[ap]), (-1, p[m], 2, p[a]), (-q, p[m], 2, s[ap]))
            )
            rels.append(
                _rel((q, s[m], 1, p[ap]), (1, s[m], 1, s[a]), (-1, s[a], 2, s[ap]))
            )
    return Presentation(sig, tuple(rels), "dq", gamma, q)


def _as(gamma: int) -> Presentation:
    sig = Signature.from_names([f"star_{a}" for a in _range1(gamma)])
    st = {a: sig[f"star_{a}"] for a in _range1(gamma)}
    rels = []
    for a, b in itertools.combinations_with_replacement(_range1(gamma), 2):
        rels.append(_rel((1, st[a], 1, st[b]), (-1, st[b], 2, st[b])))
    for a, b in itertools.combinations(_range1(gamma), 2):
        rels.append(_rel((1, st[b], 1, st[a]), (-1, st[b], 2, st[b])))
        rels.append(_rel((1, st[a], 2, st[b]), (-1, st[b], 2, st[b])))
        rels.append(_rel((1, st[b], 2, st[a]), (-1, st[b], 2, st[b])))
    return Presentation(sig, tuple(rels), "as", gamma)


def _as_concise(gamma: int) -> Presentation:
    # max-indexed rephrasing: one o_1 family and one o_2 family
    sig = Signature.from_names([f"star_{a}" for a in _range1(gamma)])
    st = {a: sig[f"star_{a}"] for a in _range1(gamma)}
    rels = []
    for a in _range1(gamma):
        for ap in _range1(gamma):
            m = max(a, ap)
            rels.append(_rel((1, st[a], 1, st[ap]), (-1, st[m], 2, st[m])))
            r = _rel((1, st[a], 2, st[ap]), (-1, st[m], 2, st[m]))
            if not r.is_zero():
                rels.append(r)
    return Presentation(sig, tuple(rels), "as-concise", gamma)


def _as_triangle(gamma: int) -> Presentation:
    sig = Signature.from_names([f"tri_{a}" for a in _range1(gamma)])
    tr = {a: sig[f"tri_{a}"] for a in _range1(gamma)}
    rels = []
    for a in _range1(gamma):
        for ap in _range1(gamma):
            if a != ap:
                rels.append(_rel((1, tr[a], 1, tr[ap])))
                rels.append(_rel((1, tr[a], 2, tr[ap])))
    for a in _range1(gamma):
        rels.append(_rel((1, tr[a], 1, tr[a]), (-1, tr[a], 2, tr[a])))
    return Presentation(sig, tuple(rels), "as-triangle", gamma)


def _das_lozenge(gamma: int) -> Presentation:
    sig = Signature.from_names([f"loz_{a}" for a in _range1(gamma)])
    lz = {a: sig[f"loz_{a}"] for a in _range1(gamma)}
    rels = []
    for b in _range1(gamma):
        terms = [(1, lz[b], 1, lz[b]), (-1, lz[b], 2, lz[b])]
        for a in range(1, b):
            terms.append((1, lz[a], 1, lz[b]))
            terms.append((1, lz[b], 1, lz[a]))
            terms.append((-1, lz[a], 2, lz[b]))
            terms.append((-1, lz[b], 2, lz[a]))
        rels.append(_rel(*terms))
    return Presentation(sig, tuple(rels), "das-lozenge", gamma)


def _das_diamond(gamma: int) -> Presentation:
    sig = Signature.from_names([f"dia_{a}" for a in _range1(gamma)])
    di = {a: sig[f"dia_{a}"] for a in _range1(gamma)}
    rels = tuple(
        _rel((1, di[a], 1, di[a]), (-1, di[a], 2, di[a])) for a in _range1(gamma)
    )
    return Presentation(sig, rels, "das-diamond", gamma)


def _dup(gamma: int) -> Presentation:
    base = _dq(gamma, Fraction(0))
    sig = Signature.from_names(
        [f"ul_{a}" for a in _range1(gamma)] + [f"ur_{a}" for a in _range1(gamma)]
    )
    rename = dict(zip(base.signature.names(), sig.names()))
    rels = tuple(
        r.map_keys(lambda t: _rename_tree(t, sig, rename)) for r in base.relations
    )
    return Presentation(sig, rels, "dup", gamma)


def _rename_tree(t: SyntaxTree, sig: Signature, rename: Mapping[str, str]) -> SyntaxTree:
    if t.gen is None:
        return LEAF
    return SyntaxTree(
        sig[rename[t.gen.name]],
        tuple(_rename_tree(c, sig, rename) for c in t.children),
    )


def _tdendr(gamma: int) -> Presentation:
    sig = Signature.from_names(
        [f"la_{a}" for a in _range1(gamma)]
        + ["wedge"]
        + [f"ra_{a}" for a in _range1(gamma)]
    )
    la = {a: sig[f"la_{a}"] for a in _range1(gamma)}
    ra = {a: sig[f"ra_{a}"] for a in _range1(gamma)}
    w = sig["wedge"]
    rels = [_rel((1, w, 1, w), (-1, w, 2, w))]
    for a in _range1(gamma):
        rels.append(_rel((1, la[a], 1, w), (-1, w, 2, la[a])))
        rels.append(_rel((1, w, 1, ra[a]), (-1, ra[a], 2, w)))
        rels.append(_rel((1, w, 1, la[a]), (-1, w, 2, ra[a])))
    for a in _range1(gamma):
        for ap in _range1(gamma):
            rels.append(_rel((1, la[a], 1, ra[ap]), (-1, ra[ap], 2, la[a])))
    for a, b in itertools.combinations(_range1(gamma), 2):
        rels.append(_rel((1, la[a], 1, la[b]), (-1, la[a], 2, ra[b])))
        rels.append(_rel((1, ra[a], 1, la[b]), (-1, ra[a], 2, ra[b])))
        rels.append(_rel((1, la[b], 1, la[a]), (-1, la[a], 2, la[b])))
        rels.append(_rel((1, ra[a], 1, ra[b]), (-1, ra[b], 2, ra[a])))
    for d in _range1(gamma):
        terms = [(1, la[d], 1, la[d]), (-1, la[d], 2, w)]
        for c in _range1(d):
            terms.append((-1, la[d], 2, la[c]))
            terms.append((-1, la[d], 2, ra[c]))
        rels.append(_rel(*terms))
        terms = [(1, ra[d], 1, w), (-1, ra[d], 2, ra[d])]
        for c in _range1(d):
            terms.append((1, ra[d], 1, la[c]))
            terms.append((1, ra[d], 1, ra[c]))
        rels.append(_rel(*terms))
    return Presentation(sig, tuple(rels), "tdendr", gamma)


_FAMILIES = {
    "dendr-classic": _dendr_classic,
    "dendr-harpoon": _dendr_harpoon,
    "dendr-std": _dendr_std,
    "dendr-concise": _dendr_concise,
    "as": _as,
    "as-concise": _as_concise,
    "as-triangle": _as_triangle,
    "das-lozenge": _das_lozenge,
    "das-diamond": _das_diamond,
    "dq": _dq,
    "dup": _dup,
    "tdendr": _tdendr,
}


# -- Koszul duality -------------------------------------------------------------


def composition_sign(t: SyntaxTree) -> int:
    """+1 for x o_1 y monomials, -1 for x o_2 y monomials."""
    if t.arity != 3 or t.gen is None:
        raise ValueError("the pairing is defined on arity-3 monomials")
    left, right = t.children
    if left.gen is not None and right.gen is None:
        return 1
    if left.gen is None and right.gen is not None:
        return -1
    raise ValueError("not a two-node composition monomial")


def koszul_dual(pres: Presentation, prime: str = "'") -> Presentation:
    """Presentation on primed generators whose relations annihilate ``pres``'s.

    The annihilator is taken with respect to the signed diagonal pairing on
    arity-3 monomials (o_1 contributes +1, o_2 contributes -1).
    """
    rel_basis = pres.relation_basis()
    compl = orthogonal_complement(rel_basis, composition_sign)
    dual_sig = Signature.from_names([g.name + prime for g in pres.signature])
    rename = {g.name: g.name + prime for g in pres.signature}
    rels = tuple(
        v.map_keys(lambda t: _rename_tree(t, dual_sig, rename)) for v in compl.vectors
    )
    return Presentation(dual_sig, rels, pres.family_tag + "-dual", pres.gamma, pres.q)


# -- generator substitutions ---------------------------------------------------


class GeneratorSubstitution:
    """Total map from source generators to arity-2 LinCombs over a target."""

    def __init__(self, images: Mapping[str, LinComb], target: Signature):
        self.images = dict(images)
        self.target = target

    @classmethod
    def from_pairs(
        cls, pairs: Mapping[str, Sequence[tuple[int | Fraction, str]]], target: Signature
    ) -> "GeneratorSubstitution":
        images = {}
        for src_name, terms in pairs.items():
            images[src_name] = LinComb(
                {corolla_tree(target[name]): Fraction(c) for c, name in terms}
            )
        return cls(images, target)

    def image_of(self, gen: Generator) -> LinComb:
        try:
            return self.images[gen.name]
        except KeyError:
            raise KeyError(f"generator {gen.name!r} has no image") from None

    def matrix_rank(self) -> int:
        order = [corolla_tree(g) for g in self.target]
        return span_basis(self.images.values(), order).dimension

    def is_invertible(self) -> bool:
        return (
            len(self.images) == len(self.target)
            and self.matrix_rank() == len(self.target)
        )


def substitute_generators(v: LinComb, subst: GeneratorSubstitution) -> LinComb:
    """Multilinear expansion of ``v`` after replacing each node's generator."""
    out = LinComb.zero()
    for t, c in v:
        out = out + c * _substitute_tree(t, subst)
    return out


def _substitute_tree(t: SyntaxTree, subst: GeneratorSubstitution) -> LinComb:
    if t.gen is None:
        return LinComb.monomial(LEAF)
    left = _substitute_tree(t.children[0], subst)
    right = _substitute_tree(t.children[1], subst)
    out: dict = {}
    for img_tree, c in subst.image_of(t.gen):
        g = img_tree.gen  # arity-2 monomial: a single corolla
        for lt, lc in left:
            for rt, rc in right:
                key = SyntaxTree(g, (lt, rt))
                out[key] = out.get(key, 0) + c * lc * rc
    return LinComb(out)


def relation_spaces_equal(
    pres: Presentation, other: Presentation, subst: GeneratorSubstitution
) -> bool:
    """True iff substituting ``other``'s relations spans the same space.

    ``subst`` must send ``other``'s generators to an invertible family of
    arity-2 combinations over ``pres``'s signature.
    """
    if not subst.is_invertible():
        raise ValueError("the substitution must be invertible on arity 2")
    base = pres.relation_basis()
    images = [substitute_generators(r, subst) for r in other.relations]
    if not all(base.contains(im) for im in images):
        return False
    image_span = span_basis(images, pres.monomials(3))
    return image_span.dimension == base.dimension


def std_from_harpoon(gamma: int) -> GeneratorSubstitution:
    """prec_b -> sum of la_a, succ_b -> sum of ra_a, over a <= b."""
    target = _harpoon_signature(gamma)
    pairs = {}
    for b in _range1(gamma):
        pairs[f"prec_{b}"] = [(1, f"la_{a}") for a in _range1(b)]
        pairs[f"succ_{b}"] = [(1, f"ra_{a}") for a in _range1(b)]
    return GeneratorSubstitution.from_pairs(pairs, target)


def diamond_from_lozenge(gamma: int) -> GeneratorSubstitution:
    """dia_b -> sum of loz_a over a <= b."""
    target = Signature.from_names([f"loz_{a}" for a in _range1(gamma)])
    pairs = {
        f"dia_{b}": [(1, f"loz_{a}") for a in _range1(b)] for b in _range1(gamma)
    }
    return GeneratorSubstitution.from_pairs(pairs, target)


def triangle_from_star(gamma: int) -> GeneratorSubstitution:
    """tri_a -> star_gamma if a = gamma else star_a - star_{a+1}."""
    target = Signature.from_names([f"star_{a}" for a in _range1(gamma)])
    pairs = {}
    for a in _range1(gamma):
        if a == gamma:
            pairs[f"tri_{a}"] = [(1, f"star_{gamma}")]
        else:
            pairs[f"tri_{a}"] = [(1, f"star_{a}"), (-1, f"star_{a + 1}")]
    return GeneratorSubstitution.from_pairs(pairs, target)


# -- operadic ideal and quotient dimensions -------------------------------------

_ideal_cache: dict = {}
_ideal_lock = threading.Lock()


def ideal_component(pres: Presentation, n: int) -> Basis:
    """Arity-n component of the operadic ideal generated by the relations.

    Saturation: I(3) is the relation span; I(n) is spanned by grafting one
    generator into I(n-1) at every leaf position and by grafting I(n-1)
    into every generator input.  That recurrence is exhaustive because all
    generators are binary, so every arity-n ideal element decomposes over
    one-step graftings.  Results are memoized per (family, gamma, q, n).
    """
    if n < 3:
        raise ValueError("the ideal lives in arities >= 3")
    key = (pres.cache_key(), n)
    with _ideal_lock:
        cached = _ideal_cache.get(key)
    if cached is not None:
        return cached
    if n == 3:
        result = pres.relation_basis()
    else:
        prev = ideal_component(pres, n - 1)
        order = pres.monomials(n)
        index = {t: i for i, t in enumerate(order)}
        ech = Echelon(len(order))
        for vec in prev.vectors:
            for g in pres.signature:
                gt = corolla_tree(g)
                for i in range(1, n):
                    row = {index[graft(t, i, gt)]: c for t, c in vec}
                    ech.insert(row)
                for j in (1, 2):
                    row = {index[graft(gt, j, t)]: c for t, c in vec}
                    ech.insert(row)
        result = Basis(order, ech)
    with _ideal_lock:
        _ideal_cache[key] = result
    return result


def quotient_dim(pres: Presentation, n: int) -> int:
    """Dimension of the arity-n component of the presented operad."""
    if n < 1:
        raise ValueError("arity must be at least 1")
    if n == 1:
        return 1
    if n == 2:
        return len(pres.signature)
    free_dim = len(pres.monomials(n))
    return free_dim - ideal_component(pres, n).dimension


# -- operad morphisms ------------------------------------------------------------


@dataclass
class MorphismReport:
    well_defined: bool
    surjective_arity2: bool
    failing_relation: LinComb | None = None


def check_morphism(
    src: Presentation, tgt: Presentation, images: GeneratorSubstitution
) -> MorphismReport:
    """Does mapping src's generators by ``images`` define an operad morphism?

    Well-definedness: every source relation must land in the target relation
    span.  Arity-2 surjectivity of the generator images is sufficient for
    surjectivity of the morphism, the targets being generated in arity 2.
    """
    tgt_rels = ideal_component(tgt, 3)
    failing = None
    ok = True
    for r in src.relations:
        image = substitute_generators(r, images)
        if not tgt_rels.contains(image):
            ok = False
            failing = r
            break
    surj = images.matrix_rank() == len(tgt.signature)
    return MorphismReport(ok, surj, failing)


def induced_map_rank(
    src: Presentation, tgt: Presentation, images: GeneratorSubstitution, n: int
) -> int:
    """Rank of the induced linear map between arity-n quotient components.

    A basis of the source quotient (complement monomials modulo the source
    ideal) is pushed through the substitution and reduced modulo the target
    ideal; the rank of the reduced images is returned.
    """
    report = check_morphism(src, tgt, images)
    if not report.well_defined:
        raise ValueError("the map is not well defined, no induced morphism exists")
    src_ideal = ideal_component(src, n)
    tgt_ideal = ideal_component(tgt, n)
    tgt_order = tgt_ideal.order
    tgt_index = {t: i for i, t in enumerate(tgt_order)}
    ech = Echelon(len(tgt_order))
    for mono in src_ideal.complement_keys():
        image = substitute_generators(LinComb.monomial(mono), images)
        reduced = tgt_ideal.reduce(image)
        ech.insert({tgt_index[t]: c for t, c in reduced})
    return ech.rank
