"""Syntax trees over a binary signature: the free nonsymmetric operad.

A signature is an ordered list of binary generators.  A syntax tree is a
planar rooted tree whose internal nodes carry generators and whose leaves
are the operation inputs; the arity of a tree is its number of leaves.
Partial composition ``graft(t, i, s)`` substitutes ``s`` for the i-th leaf
of ``t`` (1-indexed, left to right).

Trees are immutable, hashable values, so they can serve as basis keys of
linear combinations.  ``enumerate_trees`` lists a whole arity component of
the free operad in a fixed canonical order: by preorder shape word
(internal node = 1, leaf = 0), then by the generator index sequence in
preorder.  All linear algebra downstream relies on that order being stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


class GraftIndexError(IndexError):
    """Raised for a partial-composition position outside 1..arity."""


@dataclass(frozen=True)
class Generator:
    """A named operation of fixed arity (always 2 here) with a signature slot."""

    name: str
    arity: int = 2
    index: int = 0

    def __repr__(self) -> str:
        return f"Generator({self.name!r})"


class SyntaxTree:
    """Immutable planar tree: a leaf, or a generator with two subtrees."""

    __slots__ = ("gen", "children", "arity", "_hash")

    def __init__(self, gen: Generator | None, children: tuple["SyntaxTree", ...] = ()):
        if gen is None:
            if children:
                raise ValueError("a leaf has no children")
            arity = 1
        else:
            if len(children) != gen.arity:
                raise ValueError(f"{gen.name} expects {gen.arity} children")
            arity = sum(c.arity for c in children)
        self.gen = gen
        self.children = children
        self.arity = arity
        self._hash = hash((gen.name if gen else None, children))

    def __setattr__(self, name, value):
        if hasattr(self, "_hash"):
            raise AttributeError("SyntaxTree is immutable")
        super().__setattr__(name, value)

    @property
    def is_leaf(self) -> bool:
        return self.gen is None

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, SyntaxTree):
            return NotImplemented
        if self._hash != other._hash:
            return False
        if self.gen is None or other.gen is None:
            return self.gen is other.gen is None
        return self.gen.name == other.gen.name and self.children == other.children

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return tree_to_text(self)

    def shape_word(self) -> tuple[int, ...]:
        """Preorder 0/1 word: 1 for internal nodes, 0 for leaves."""
        if self.gen is None:
            return (0,)
        word = (1,)
        for c in self.children:
            word += c.shape_word()
        return word

    def generator_sequence(self) -> tuple[Generator, ...]:
        """Internal-node generators in preorder."""
        if self.gen is None:
            return ()
        out = (self.gen,)
        for c in self.children:
            out += c.generator_sequence()
        return out

    def canonical_key(self):
        return (
            self.arity,
            self.shape_word(),
            tuple(g.index for g in self.generator_sequence()),
        )


LEAF = SyntaxTree(None)


def node(gen: Generator, left: SyntaxTree, right: SyntaxTree) -> SyntaxTree:
    return SyntaxTree(gen, (left, right))


def corolla_tree(gen: Generator) -> SyntaxTree:
    """The two-leaf tree with a single internal node."""
    return node(gen, LEAF, LEAF)


def arity(t: SyntaxTree) -> int:
    """Number of leaves of ``t``."""
    return t.arity


def internal_nodes(t: SyntaxTree) -> int:
    """A binary tree of arity n has n - 1 internal nodes."""
    return t.arity - 1


def graft(t: SyntaxTree, i: int, s: SyntaxTree) -> SyntaxTree:
    """Partial composition: substitute ``s`` for the i-th leaf of ``t``.

    The leaf is the composition unit on both sides.  Raises
    GraftIndexError unless 1 <= i <= arity(t).
    """
    if not 1 <= i <= t.arity:
        raise GraftIndexError(f"leaf position {i} out of range 1..{t.arity}")
    if t.gen is None:
        return s
    left, right = t.children
    if i <= left.arity:
        return SyntaxTree(t.gen, (graft(left, i, s), right))
    return SyntaxTree(t.gen, (left, graft(right, i - left.arity, s)))


class Signature:
    """Ordered, nonempty-name-unique collection of binary generators."""

    def __init__(self, generators: Sequence[Generator]):
        names = [g.name for g in generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.generators = tuple(generators)
        self._by_name = {g.name: g for g in generators}

    @classmethod
    def from_names(cls, names: Sequence[str]) -> "Signature":
        return cls([Generator(n, 2, i) for i, n in enumerate(names)])

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __getitem__(self, name: str) -> Generator:
        return self._by_name[name]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __eq__(self, other) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"Signature({[g.name for g in self.generators]})"

    def names(self) -> list[str]:
        return [g.name for g in self.generators]


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    """All binary tree shapes with n leaves, sorted by preorder shape word.

    Shapes are nested tuples: ``None`` is a leaf, ``(l, r)`` an internal node.
    """
    if n == 1:
        return (None,)
    out = []
    for k in range(1, n):
        for l in _shapes(k):
            for r in _shapes(n - k):
                out.append((l, r))
    out.sort(key=_shape_word_of)
    return tuple(out)


def _shape_word_of(shape) -> tuple[int, ...]:
    if shape is None:
        return (0,)
    return (1,) + _shape_word_of(shape[0]) + _shape_word_of(shape[1])


def count_shapes(n: int) -> int:
    """Number of binary trees with ``n`` leaves (a Catalan number)."""
    return len(_shapes(n))


def _build(shape, gens: Sequence[Generator], pos: list[int]) -> SyntaxTree:
    if shape is None:
        return LEAF
    g = gens[pos[0]]
    pos[0] += 1
    left = _build(shape[0], gens, pos)
    right = _build(shape[1], gens, pos)
    return SyntaxTree(g, (left, right))


def iter_trees(sig: Signature, n: int) -> Iterator[SyntaxTree]:
    """Lazily yield all arity-n syntax trees over ``sig`` in canonical order."""
    if n < 1:
        raise ValueError("arity must be at least 1")
    if n == 1:
        yield LEAF
        return
    for shape in _shapes(n):
        for labels in itertools.product(sig.generators, repeat=n - 1):
            yield _build(shape, labels, [0])


def enumerate_trees(sig: Signature, n: int) -> list[SyntaxTree]:
    """All arity-n syntax trees over ``sig``, in canonical order."""
    return list(iter_trees(sig, n))


def shape_edges(shape) -> list[tuple[int, int, int]]:
    """Internal edges of a shape as (parent, child, side) preorder indices.

    Indices count internal nodes in preorder; side is 1 for the left child
    and 2 for the right child.  Used for fast pattern scans that avoid
    building tree objects.
    """
    edges: list[tuple[int, int, int]] = []

    def walk(s) -> int:
        # returns the preorder index of this node, or -1 for a leaf
        if s is None:
            return -1
        my = walk.counter
        walk.counter += 1
        for side, sub in ((1, s[0]), (2, s[1])):
            child = walk(sub)
            if child >= 0:
                edges.append((my, child, side))
        return my

    walk.counter = 0
    walk(shape)
    return edges


# -- text grammar ------------------------------------------------------------
#
#   tree ::= "." | NAME "(" tree "," tree ")"
#
# NAME is an identifier, optionally with trailing apostrophes (dual
# generators are written with a prime).


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def tree_to_text(t: SyntaxTree) -> str:
    if t.gen is None:
        return "."
    l, r = t.children
    return f"{t.gen.name}({tree_to_text(l)},{tree_to_text(r)})"


def parse_tree(text: str, sig: Signature) -> SyntaxTree:
    """Parse the tree grammar, resolving names against ``sig``."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse() -> SyntaxTree:
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise ParseError("unexpected end of input", pos)
        if text[pos] == ".":
            pos += 1
            return LEAF
        start = pos
        while pos < n and (text[pos].isalnum() or text[pos] in "_'"):
            pos += 1
        name = text[start:pos]
        if not name:
            raise ParseError(f"expected '.' or a generator name, found {text[pos]!r}", pos)
        if name not in sig:
            raise ParseError(f"unknown generator {name!r}", start)
        gen = sig[name]
        expect("(")
        left = parse()
        expect(",")
        right = parse()
        expect(")")
        return SyntaxTree(gen, (left, right))

    def expect(ch: str):
        nonlocal pos
        skip_ws()
        if pos >= n or text[pos] != ch:
            raise ParseError(f"expected {ch!r}", pos)
        pos += 1

    result = parse()
    skip_ws()
    if pos != n:
        raise ParseError("trailing input", pos)
    return result


def syntax_tree_dot(t: SyntaxTree, name: str = "tree") -> str:
    """Graphviz DOT rendering: circles for internal nodes, squares for leaves."""
    lines = [f"digraph {name} {{", "  node [fontsize=10];"]
    counter = itertools.count()

    def walk(s: SyntaxTree) -> int:
        i = next(counter)
        if s.gen is None:
            lines.append(f'  n{i} [shape=square, label=""];')
        else:
            lines.append(f'  n{i} [shape=circle, label="{s.gen.name}"];')
            for c in s.children:
                j = walk(c)
                lines.append(f"  n{i} -> n{j};")
        return i

    walk(t)
    lines.append("}")
    return "\n".join(lines)
