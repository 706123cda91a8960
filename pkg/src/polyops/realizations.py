"""Combinatorial models: labeled corollas, alternating Schröder trees, and
edge-valued binary trees carrying the free product operations.

Three carriers appear here.

* Corollas with one labeled node realize the multiassociative operads:
  composition fuses two corollas and keeps the larger label.
* Alternating Schröder trees (internal labels in [gamma], every internal
  child labeled differently from its parent) realize the dual
  multiassociative operads: composition grafts and contracts the
  connecting edge when labels collide.
* Edge-valued binary trees (internal-internal edges labeled in [gamma],
  leaf edges implicitly labeled by the infinity sentinel) carry the free
  polydendriform and free multiplicial algebras over one generator.  The
  four products are defined recursively; the label arithmetic is
  min-with-infinity, written ``meet`` below.

All values are immutable and hashable, so they double as LinComb keys.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .linear import LinComb
from .trees import GraftIndexError, ParseError, _shapes

INF = math.inf  # sentinel edge label for leaf edges; min(a, INF) = a


def meet(a, b):
    """Label minimum extended by the infinity sentinel."""
    return a if a <= b else b


class UndefinedProductError(ValueError):
    """Raised for a product whose both operands are leaves."""


# -- corollas -------------------------------------------------------------------


@dataclass(frozen=True)
class Corolla:
    """A planar tree with at most one internal node, labeled when present."""

    arity: int
    label: int | None = None

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be at least 1")
        if (self.arity == 1) != (self.label is None):
            raise ValueError("label must be present exactly when arity >= 2")

    def __repr__(self) -> str:
        if self.label is None:
            return "Corolla(1)"
        return f"Corolla({self.arity}, label={self.label})"


def corolla_compose(c1: Corolla, i: int, c2: Corolla) -> Corolla:
    """Fuse at input i: arity n + m - 1, labeled by the larger label."""
    if not 1 <= i <= c1.arity:
        raise GraftIndexError(f"position {i} out of range 1..{c1.arity}")
    arity = c1.arity + c2.arity - 1
    labels = [l for l in (c1.label, c2.label) if l is not None]
    if not labels:
        return Corolla(1)
    return Corolla(arity, max(labels))


# -- alternating Schröder trees --------------------------------------------------


SLEAF = None  # leaves of Schröder trees are just None


@dataclass(frozen=True)
class SchroderNode:
    """Internal node: a label and at least two children (None = leaf)."""

    label: int
    children: tuple

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("internal nodes need at least two children")

    @property
    def arity(self) -> int:
        return sum(1 if c is None else c.arity for c in self.children)

    def __repr__(self) -> str:
        return schroder_to_text(self)


AltSchroderTree = SchroderNode  # arity >= 2; the bare leaf stands for arity 1


def is_alternating(t) -> bool:
    if t is None:
        return True
    for c in t.children:
        if c is not None:
            if c.label == t.label:
                return False
            if not is_alternating(c):
                return False
    return True


def schroder_compose(s1, i: int, s2):
    """Graft s2 on the i-th leaf of s1; contract the new edge on label clash.

    The contraction splices the grafted root's children into its parent's
    child list, preserving order, whenever parent and grafted root carry
    the same label.  Output alternation is asserted: the input trees being
    alternating, contraction is the only step that could break it.
    """
    arity1 = 1 if s1 is None else s1.arity
    if not 1 <= i <= arity1:
        raise GraftIndexError(f"position {i} out of range 1..{arity1}")
    if s1 is None:
        return s2
    if s2 is None:
        return s1
    result = _graft_schroder(s1, i, s2)
    assert is_alternating(result), "composition broke the alternation invariant"
    return result


def _graft_schroder(t: SchroderNode, i: int, s: SchroderNode) -> SchroderNode:
    children = []
    pos = i
    done = False
    for c in t.children:
        a = 1 if c is None else c.arity
        if done or pos > a:
            children.append(c)
            pos -= a
            continue
        if c is None:
            # the target leaf sits right here
            if s.label == t.label:
                children.extend(s.children)  # contract the connecting edge
            else:
                children.append(s)
        else:
            children.append(_graft_schroder(c, pos, s))
        done = True
        pos -= a
    return SchroderNode(t.label, tuple(children))


def schroder_to_text(t) -> str:
    if t is None:
        return "."
    inner = ",".join(schroder_to_text(c) for c in t.children)
    return f"{t.label}({inner})"


def parse_schroder(text: str):
    """Grammar: S ::= '.' | label '(' S {',' S} ')'."""
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse():
        nonlocal pos
        skip()
        if pos >= n:
            raise ParseError("unexpected end of input", pos)
        if text[pos] == ".":
            pos += 1
            return None
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected '.' or an integer label", pos)
        label = int(text[start:pos])
        expect("(")
        children = [parse()]
        skip()
        while pos < n and text[pos] == ",":
            pos += 1
            children.append(parse())
            skip()
        expect(")")
        return SchroderNode(label, tuple(children))

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= n or text[pos] != ch:
            raise ParseError(f"expected {ch!r}", pos)
        pos += 1

    out = parse()
    skip()
    if pos != n:
        raise ParseError("trailing input", pos)
    return out


def schroder_trees(gamma: int, n: int) -> Iterator:
    """All alternating Schröder trees of arity ``n`` (n leaves)."""

    def build(leaves: int, forbidden: int | None):
        # all trees with `leaves` leaves whose root label != forbidden
        if leaves == 1:
            yield None
            return
        for label in range(1, gamma + 1):
            if label == forbidden:
                continue
            for k in range(2, leaves + 1):
                for split in _compositions(leaves, k):
                    parts = [list(build(m, label)) for m in split]
                    for combo in itertools.product(*parts):
                        yield SchroderNode(label, tuple(combo))

    yield from build(n, None)


def _compositions(total: int, parts: int):
    # compositions of `total` into `parts` positive integers
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# -- edge-valued binary trees -----------------------------------------------------


class EVLeaf:
    """The unique leaf; also the unit slot of the free products."""

    __slots__ = ()
    arity = 0  # grading is by internal nodes here
    size = 0

    def __repr__(self) -> str:
        return "."

    def __eq__(self, other) -> bool:
        return isinstance(other, EVLeaf)

    def __hash__(self) -> int:
        return hash("EVLeaf")


EVLEAF = EVLeaf()


class EVNode:
    """Internal node with child edge labels (INF exactly on leaf edges)."""

    __slots__ = ("left", "right", "lx", "ry", "size", "arity", "_hash")

    def __init__(self, left, right, lx=INF, ry=INF):
        if (left is EVLEAF or isinstance(left, EVLeaf)) != (lx == INF):
            raise ValueError("left edge label must be INF exactly for a leaf child")
        if (right is EVLEAF or isinstance(right, EVLeaf)) != (ry == INF):
            raise ValueError("right edge label must be INF exactly for a leaf child")
        self.left = left
        self.right = right
        self.lx = lx
        self.ry = ry
        self.size = 1 + left.size + right.size
        self.arity = self.size  # LinComb grading: number of internal nodes
        self._hash = hash((self.lx, self.ry, left, right))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, EVNode):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.lx == other.lx
            and self.ry == other.ry
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return evtree_to_text(self)


NODE = EVNode(EVLEAF, EVLEAF)  # the one-node tree, the algebra generator


def ev_node(left, right, lx=None, ry=None) -> EVNode:
    """Build a node, defaulting each edge label to INF on a leaf child."""
    if lx is None:
        lx = INF
    if ry is None:
        ry = INF
    return EVNode(left, right, lx, ry)


def evtree_to_text(t) -> str:
    """Grammar: B ::= '.' | '(' B ',' B ')' [ '[' L ',' L ']' ]."""
    if isinstance(t, EVLeaf):
        return "."
    base = f"({evtree_to_text(t.left)},{evtree_to_text(t.right)})"
    if t.lx == INF and t.ry == INF:
        return base
    fmt = lambda v: "inf" if v == INF else str(v)
    return f"{base}[{fmt(t.lx)},{fmt(t.ry)}]"


def parse_evtree(text: str):
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse():
        nonlocal pos
        skip()
        if pos >= n:
            raise ParseError("unexpected end of input", pos)
        if text[pos] == ".":
            pos += 1
            return EVLEAF
        expect("(")
        left = parse()
        expect(",")
        right = parse()
        expect(")")
        lx = ry = INF
        skip()
        if pos < n and text[pos] == "[":
            pos += 1
            lx = label()
            expect(",")
            ry = label()
            expect("]")
        return EVNode(left, right, lx, ry)

    def label():
        nonlocal pos
        skip()
        if text[pos : pos + 3] == "inf":
            pos += 3
            return INF
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected an integer label or 'inf'", pos)
        return int(text[start:pos])

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= n or text[pos] != ch:
            raise ParseError(f"expected {ch!r}", pos)
        pos += 1

    out = parse()
    skip()
    if pos != n:
        raise ParseError("trailing input", pos)
    return out


def ev_trees(gamma: int, n: int) -> Iterator:
    """All gamma-edge-valued binary trees with ``n`` internal nodes."""
    if n == 0:
        yield EVLEAF
        return
    for k in range(n):
        for left in ev_trees(gamma, k):
            for right in ev_trees(gamma, n - 1 - k):
                lxs = [INF] if k == 0 else range(1, gamma + 1)
                rys = [INF] if n - 1 - k == 0 else range(1, gamma + 1)
                for lx in lxs:
                    for ry in rys:
                        yield EVNode(left, right, lx, ry)


def count_ev_trees(gamma: int, n: int) -> int:
    return sum(1 for _ in ev_trees(gamma, n))


def random_ev_tree(rng, gamma: int, n: int):
    """A seeded random tree with ``n`` internal nodes (not uniform)."""
    if n == 0:
        return EVLEAF
    k = rng.randrange(n)
    left = random_ev_tree(rng, gamma, k)
    right = random_ev_tree(rng, gamma, n - 1 - k)
    lx = INF if k == 0 else rng.randint(1, gamma)
    ry = INF if n - 1 - k == 0 else rng.randint(1, gamma)
    return EVNode(left, right, lx, ry)


# -- free polydendriform products --------------------------------------------------


def _zero() -> LinComb:
    return LinComb.zero()


def _combine(builder, summand: LinComb) -> LinComb:
    out: dict = {}
    for t, c in summand:
        key = builder(t)
        out[key] = out.get(key, 0) + c
    return LinComb(out)


def dendr_prec(a, s, t) -> LinComb:
    """s prec_a t on edge-valued binary trees (LinComb valued)."""
    if isinstance(t, EVLeaf):
        if isinstance(s, EVLeaf):
            raise UndefinedProductError("leaf prec leaf is not defined")
        return LinComb.monomial(s)
    if isinstance(s, EVLeaf):
        return _zero()
    x, y, t1, t2 = s.lx, s.ry, s.left, s.right
    z = meet(a, y)
    first = _combine(lambda u: EVNode(t1, u, x, z), dendr_prec(a, t2, t))
    second = _combine(lambda u: EVNode(t1, u, x, z), dendr_succ(y, t2, t))
    return first + second


def dendr_succ(a, s, t) -> LinComb:
    """s succ_a t on edge-valued binary trees (LinComb valued)."""
    if isinstance(s, EVLeaf):
        if isinstance(t, EVLeaf):
            raise UndefinedProductError("leaf succ leaf is not defined")
        return LinComb.monomial(t)
    if isinstance(t, EVLeaf):
        return _zero()
    x, y, t1, t2 = t.lx, t.ry, t.left, t.right
    z = meet(a, x)
    first = _combine(lambda u: EVNode(u, t2, z, y), dendr_succ(a, s, t1))
    second = _combine(lambda u: EVNode(u, t2, z, y), dendr_prec(x, s, t1))
    return first + second


def dendr_free_product(kind: str, a, s, t) -> LinComb:
    """kind in {'prec', 'succ'}: the free polydendriform products."""
    if kind == "prec":
        return dendr_prec(a, s, t)
    if kind == "succ":
        return dendr_succ(a, s, t)
    raise ValueError("kind must be 'prec' or 'succ'")


# -- free multiplicial products -----------------------------------------------------


def dup_under(a, t, s):
    """t under_a s: graft s at t's rightmost leaf, min-relabeling the path.

    Returns a single tree, or None for the vanishing base case.
    """
    if isinstance(s, EVLeaf):
        if isinstance(t, EVLeaf):
            raise UndefinedProductError("leaf under leaf is not defined")
        return t
    if isinstance(t, EVLeaf):
        return None
    if isinstance(t.right, EVLeaf):
        return EVNode(t.left, s, t.lx, meet(a, t.ry))
    return EVNode(t.left, dup_under(a, t.right, s), t.lx, meet(a, t.ry))


def dup_over(a, s, t):
    """s over_a t: graft s at t's leftmost leaf, min-relabeling the path."""
    if isinstance(s, EVLeaf):
        if isinstance(t, EVLeaf):
            raise UndefinedProductError("leaf over leaf is not defined")
        return t
    if isinstance(t, EVLeaf):
        return None
    if isinstance(t.left, EVLeaf):
        return EVNode(s, t.right, meet(a, t.lx), t.ry)
    return EVNode(dup_over(a, s, t.left), t.right, meet(a, t.lx), t.ry)


def dup_free_product(kind: str, a, s, t):
    """kind in {'under', 'over'}: the free multiplicial products.

    ``under`` extends its first operand on the right, ``over`` its second
    operand on the left; both return a single tree or None (the zero).
    """
    if kind == "under":
        return dup_under(a, s, t)
    if kind == "over":
        return dup_over(a, s, t)
    raise ValueError("kind must be 'under' or 'over'")


def dup_lincomb(kind: str, a, s, t) -> LinComb:
    """Same products, LinComb-valued for uniform algebra tests."""
    out = dup_free_product(kind, a, s, t)
    return LinComb.zero() if out is None else LinComb.monomial(out)


def _as_lincomb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    return LinComb.monomial(x)


def bilinear(product, a, x, y) -> LinComb:
    """Extend a tree-level product bilinearly to LinComb operands."""
    out = LinComb.zero()
    for t1, c1 in _as_lincomb(x):
        for t2, c2 in _as_lincomb(y):
            out = out + (c1 * c2) * _as_lincomb(product(a, t1, t2))
    return out


def prec_lc(a, x, y) -> LinComb:
    return bilinear(dendr_prec, a, x, y)


def succ_lc(a, x, y) -> LinComb:
    return bilinear(dendr_succ, a, x, y)


def under_lc(a, x, y) -> LinComb:
    return bilinear(dup_lincomb_under, a, x, y)


def over_lc(a, x, y) -> LinComb:
    return bilinear(dup_lincomb_over, a, x, y)


def dup_lincomb_under(a, s, t) -> LinComb:
    out = dup_under(a, s, t)
    return LinComb.zero() if out is None else LinComb.monomial(out)


def dup_lincomb_over(a, s, t) -> LinComb:
    out = dup_over(a, s, t)
    return LinComb.zero() if out is None else LinComb.monomial(out)


# -- DOT export -----------------------------------------------------------------


def evtree_dot(t, name: str = "evtree") -> str:
    lines = [f"digraph {name} {{", "  node [fontsize=10];"]
    counter = itertools.count()

    def walk(u) -> int:
        i = next(counter)
        if isinstance(u, EVLeaf):
            lines.append(f'  n{i} [shape=square, label=""];')
            return i
        lines.append(f'  n{i} [shape=circle, label=""];')
        for child, lbl in ((u.left, u.lx), (u.right, u.ry)):
            j = walk(child)
            attr = "" if lbl == INF else f' [label="{lbl}"]'
            lines.append(f"  n{i} -> n{j}{attr};")
        return i

    walk(t)
    lines.append("}")
    return "\n".join(lines)


def schroder_dot(t, name: str = "schroder") -> str:
    lines = [f"digraph {name} {{", "  node [fontsize=10];"]
    counter = itertools.count()

    def walk(u) -> int:
        i = next(counter)
        if u is None:
            lines.append(f'  n{i} [shape=square, label=""];')
            return i
        lines.append(f'  n{i} [shape=circle, label="{u.label}"];')
        for child in u.children:
            j = walk(child)
            lines.append(f"  n{i} -> n{j};")
        return i

    walk(t)
    lines.append("}")
    return "\n".join(lines)
