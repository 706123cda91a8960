"""Monomial quadratic rewrite systems on syntax trees.

Both systems implemented here orient quadratic monomial relations: the
multiassociative one collapses everything onto uniform right combs, the
multiplicial one pushes left-product nodes down to leaf left children.
Rules map a two-internal-node pattern g o_i g' to another such pattern;
matching is structural on the two labeled nodes, with arbitrary subtrees
at the pattern's inputs.

Termination is not proved in-engine: ``normal_form`` carries a step cap
(the number of trees of that arity, an upper bound for any terminating
run since no tree can repeat), and exceeding it raises loudly.  Local
confluence is certified exhaustively on all three-internal-node trees,
where every overlap of quadratic left-hand sides occurs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .presentations import Presentation, build_presentation, comp
from .trees import (
    Generator,
    Signature,
    SyntaxTree,
    _shapes,
    count_shapes,
    iter_trees,
    shape_edges,
)


class StepCapExceededError(RuntimeError):
    """Rewriting ran longer than any terminating run could."""


@dataclass(frozen=True)
class RewriteRule:
    """lhs -> rhs on two-internal-node patterns, stored as arity-3 trees."""

    lhs: SyntaxTree
    rhs: SyntaxTree

    def __post_init__(self):
        for t in (self.lhs, self.rhs):
            if t.arity != 3:
                raise ValueError("rewrite patterns have exactly two internal nodes")
        if self.lhs == self.rhs:
            raise ValueError("lhs and rhs must differ")

    def lhs_key(self) -> tuple[str, int, str]:
        return _pattern_key(self.lhs)

    def rhs_key(self) -> tuple[str, int, str]:
        return _pattern_key(self.rhs)


def _pattern_key(t: SyntaxTree) -> tuple[str, int, str]:
    left, right = t.children
    if left.gen is not None:
        return (t.gen.name, 1, left.gen.name)
    return (t.gen.name, 2, right.gen.name)


class RewriteSystem:
    """A family-tagged list of rules with pairwise distinct left sides."""

    def __init__(self, rules, family: str, gamma: int, signature: Signature):
        self.rules = tuple(rules)
        self.family = family
        self.gamma = gamma
        self.signature = signature
        self.lhs_map: dict[tuple[str, int, str], tuple[str, int, str]] = {}
        for r in self.rules:
            key = r.lhs_key()
            if key in self.lhs_map:
                raise ValueError(f"duplicate left-hand side {key}")
            self.lhs_map[key] = r.rhs_key()

    def __repr__(self) -> str:
        return f"RewriteSystem({self.family}, gamma={self.gamma}, {len(self.rules)} rules)"

    def presentation(self) -> Presentation:
        """The quadratic presentation whose congruence the rules orient."""
        family = {"As": "as", "Dup": "dup"}[self.family]
        return build_presentation(family, self.gamma)


def build_rewrite_system(family: str, gamma: int) -> RewriteSystem:
    """The multiassociative ('As') or multiplicial ('Dup') system at gamma."""
    if gamma < 1:
        raise ValueError("gamma must be at least 1")
    fam = family.strip()
    if fam.lower() == "as":
        sig = Signature.from_names([f"star_{a}" for a in range(1, gamma + 1)])
        st = {a: sig[f"star_{a}"] for a in range(1, gamma + 1)}
        rules = []
        for a, b in itertools.combinations_with_replacement(range(1, gamma + 1), 2):
            rules.append(RewriteRule(comp(st[a], 1, st[b]), comp(st[b], 2, st[b])))
        for a, b in itertools.combinations(range(1, gamma + 1), 2):
            rules.append(RewriteRule(comp(st[b], 1, st[a]), comp(st[b], 2, st[b])))
            rules.append(RewriteRule(comp(st[a], 2, st[b]), comp(st[b], 2, st[b])))
            rules.append(RewriteRule(comp(st[b], 2, st[a]), comp(st[b], 2, st[b])))
        return RewriteSystem(rules, "As", gamma, sig)
    if fam.lower() == "dup":
        sig = Signature.from_names(
            [f"ul_{a}" for a in range(1, gamma + 1)]
            + [f"ur_{a}" for a in range(1, gamma + 1)]
        )
        ul = {a: sig[f"ul_{a}"] for a in range(1, gamma + 1)}
        ur = {a: sig[f"ur_{a}"] for a in range(1, gamma + 1)}
        rules = []
        for a in range(1, gamma + 1):
            for ap in range(1, gamma + 1):
                m = min(a, ap)
                rules.append(RewriteRule(comp(ul[a], 1, ur[ap]), comp(ur[ap], 2, ul[a])))
                rules.append(RewriteRule(comp(ul[a], 1, ul[ap]), comp(ul[m], 2, ul[a])))
                rules.append(RewriteRule(comp(ur[a], 2, ur[ap]), comp(ur[m], 1, ur[a])))
        return RewriteSystem(rules, "Dup", gamma, sig)
    raise ValueError(f"unknown rewrite family {family!r}")


def _rewrite_at(t: SyntaxTree, rs: RewriteSystem) -> SyntaxTree | None:
    """One step at the first matching position in preorder, or None."""
    if t.gen is None:
        return None
    left, right = t.children
    if left.gen is not None:
        rhs = rs.lhs_map.get((t.gen.name, 1, left.gen.name))
        if rhs is not None:
            return _assemble(rhs, rs.signature, left.children[0], left.children[1], right)
    if right.gen is not None:
        rhs = rs.lhs_map.get((t.gen.name, 2, right.gen.name))
        if rhs is not None:
            return _assemble(rhs, rs.signature, left, right.children[0], right.children[1])
    new_left = _rewrite_at(left, rs)
    if new_left is not None:
        return SyntaxTree(t.gen, (new_left, right))
    new_right = _rewrite_at(right, rs)
    if new_right is not None:
        return SyntaxTree(t.gen, (left, new_right))
    return None


def _assemble(
    rhs_key: tuple[str, int, str], sig: Signature,
    x1: SyntaxTree, x2: SyntaxTree, x3: SyntaxTree,
) -> SyntaxTree:
    top, j, inner = rhs_key
    if j == 1:
        return SyntaxTree(sig[top], (SyntaxTree(sig[inner], (x1, x2)), x3))
    return SyntaxTree(sig[top], (x1, SyntaxTree(sig[inner], (x2, x3))))


def step_cap(rs: RewriteSystem, arity: int) -> int:
    return count_shapes(arity) * len(rs.signature) ** max(arity - 1, 0)


def normal_form(rs: RewriteSystem, t: SyntaxTree) -> SyntaxTree:
    """Rewrite with the preorder-first strategy until irreducible."""
    cap = step_cap(rs, t.arity)
    for _ in range(cap + 1):
        nxt = _rewrite_at(t, rs)
        if nxt is None:
            return t
        t = nxt
    raise StepCapExceededError(
        f"exceeded {cap} steps at arity {t.arity}; the system is not terminating"
    )


def is_irreducible(rs: RewriteSystem, t: SyntaxTree) -> bool:
    if t.gen is None:
        return True
    left, right = t.children
    if left.gen is not None and (t.gen.name, 1, left.gen.name) in rs.lhs_map:
        return False
    if right.gen is not None and (t.gen.name, 2, right.gen.name) in rs.lhs_map:
        return False
    return is_irreducible(rs, left) and is_irreducible(rs, right)


def one_step_rewrites(rs: RewriteSystem, t: SyntaxTree) -> list[SyntaxTree]:
    """All trees reachable from ``t`` in exactly one step, all positions."""
    out: list[SyntaxTree] = []
    if t.gen is None:
        return out
    left, right = t.children
    if left.gen is not None:
        rhs = rs.lhs_map.get((t.gen.name, 1, left.gen.name))
        if rhs is not None:
            out.append(_assemble(rhs, rs.signature, left.children[0], left.children[1], right))
    if right.gen is not None:
        rhs = rs.lhs_map.get((t.gen.name, 2, right.gen.name))
        if rhs is not None:
            out.append(_assemble(rhs, rs.signature, left, right.children[0], right.children[1]))
    for sub in one_step_rewrites(rs, left):
        out.append(SyntaxTree(t.gen, (sub, right)))
    for sub in one_step_rewrites(rs, right):
        out.append(SyntaxTree(t.gen, (left, sub)))
    return out


def reachable_normal_forms(rs: RewriteSystem, t: SyntaxTree, cap: int | None = None):
    """The set of normal forms reachable from ``t`` under any strategy."""
    memo: dict[SyntaxTree, frozenset] = {}
    if cap is None:
        cap = step_cap(rs, t.arity)

    def go(u: SyntaxTree, depth: int) -> frozenset:
        if depth > cap:
            raise StepCapExceededError(
                f"exceeded {cap} steps while joining; the system is not terminating"
            )
        hit = memo.get(u)
        if hit is not None:
            return hit
        succ = one_step_rewrites(rs, u)
        result = (
            frozenset([u])
            if not succ
            else frozenset().union(*(go(v, depth + 1) for v in succ))
        )
        memo[u] = result
        return result

    return go(t, 0)


def is_locally_confluent(rs: RewriteSystem, report: dict | None = None) -> bool:
    """Exhaustive joinability on all trees with three internal nodes.

    Quadratic left-hand sides only overlap on three internal nodes, so
    joinability of every arity-4 peak certifies local confluence of the
    whole system.  With ``report`` a dict, a witness peak is recorded on
    failure.
    """
    for t in iter_trees(rs.signature, 4):
        try:
            nfs = reachable_normal_forms(rs, t)
        except StepCapExceededError as exc:
            if report is not None:
                report["tree"] = t
                report["error"] = str(exc)
            return False
        if len(nfs) > 1:
            if report is not None:
                report["tree"] = t
                report["normal_forms"] = sorted(nfs, key=lambda x: x.canonical_key())
            return False
    return True


def count_normal_forms(rs: RewriteSystem, n: int) -> int:
    """Number of irreducible trees of arity ``n``.

    Exhaustive: every (shape, labeling) pair of the arity component is
    scanned against the left-hand-side pattern table.  Tree objects are
    not materialized; a labeling is irreducible iff no internal edge
    matches a pattern.
    """
    if n < 1:
        raise ValueError("arity must be at least 1")
    if n == 1:
        return 1
    gens = [g.name for g in rs.signature]
    lhs = rs.lhs_map
    total = 0
    for shape in _shapes(n):
        edges = shape_edges(shape)
        for labels in itertools.product(gens, repeat=n - 1):
            if not any((labels[p], side, labels[c]) in lhs for p, c, side in edges):
                total += 1
    return total


def normal_forms(rs: RewriteSystem, n: int) -> Iterator[SyntaxTree]:
    """Lazily yield the irreducible trees of arity ``n`` in canonical order."""
    for t in iter_trees(rs.signature, n):
        if is_irreducible(rs, t):
            yield t
