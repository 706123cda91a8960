"""Degree-3 multilinear checks relating the half-shuffle family to the
commutative and polydendriform ones.

Everything runs inside the multilinear degree-3 component of the free
algebra on x, y, z over the indexed half-shuffle operations: terms are
binary bracketings of the three variables with labeled products.  The
half-shuffle identity, oriented left-to-right,

    (u sh_a' v) sh_a w  ->  u sh_{a^a'} (v sh_a w) + u sh_{a^a'} (w sh_a' v)

(with a^a' the label minimum) rewrites every left-nested term in one
step, so right-nested terms are free coordinates and "reduces to zero"
is an exact coefficient statement.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable

from .linear import LinComb

VARS = ("x", "y", "z")


class MultilinearTerm:
    """A binary bracketing of distinct variables with labeled products."""

    __slots__ = ("label", "left", "right", "variables", "arity", "_hash")

    def __init__(self, label: int, left, right):
        self.label = label
        self.left = left
        self.right = right
        lv = (left,) if isinstance(left, str) else left.variables
        rv = (right,) if isinstance(right, str) else right.variables
        if set(lv) & set(rv):
            raise ValueError("a variable may appear only once")
        self.variables = lv + rv
        self.arity = len(self.variables)
        self._hash = hash((label, left, right))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultilinearTerm):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.label == other.label
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        fmt = lambda s: s if isinstance(s, str) else repr(s)
        return f"({fmt(self.left)} sh_{self.label} {fmt(self.right)})"


def sh(label: int, left, right) -> LinComb:
    """Bilinear product on LinCombs of terms/variables."""
    lterms = [(left, Fraction(1))] if isinstance(left, (str, MultilinearTerm)) else list(left)
    rterms = [(right, Fraction(1))] if isinstance(right, (str, MultilinearTerm)) else list(right)
    out: dict = {}
    for lt, lc in lterms:
        for rt, rc in rterms:
            key = MultilinearTerm(label, lt, rt)
            out[key] = out.get(key, 0) + lc * rc
    return LinComb(out)


def _is_right_nested(t: MultilinearTerm) -> bool:
    return isinstance(t.left, str) and isinstance(t.right, MultilinearTerm)


def zin_normal_form(gamma: int, e: LinComb) -> LinComb:
    """Rewrite left-nested degree-3 terms; the output is right-nested.

    One step suffices at degree 3: (u sh_a' v) sh_a w maps to
    u sh_{min(a,a')} (v sh_a w) + u sh_{min(a,a')} (w sh_a' v), and both
    images are right-nested whenever u is a variable.
    """
    out = LinComb.zero()
    for t, c in e:
        if not isinstance(t, MultilinearTerm) or t.arity != 3:
            raise ValueError("expected degree-3 multilinear terms")
        if _is_right_nested(t):
            out = out + c * LinComb.monomial(t)
            continue
        inner = t.left  # (u sh_a' v) sh_a w
        a, ap = t.label, inner.label
        u, v, w = inner.left, inner.right, t.right
        m = min(a, ap)
        out = out + c * sh(m, u, sh(a, v, w)) + c * sh(m, u, sh(ap, w, v))
    return out


def right_nested_terms(gamma: int) -> list[MultilinearTerm]:
    """The 6 gamma^2 free coordinates of the degree-3 component."""
    import itertools

    out = []
    for u, v, w in itertools.permutations(VARS):
        for b in range(1, gamma + 1):
            for c in range(1, gamma + 1):
                out.append(MultilinearTerm(b, u, MultilinearTerm(c, v, w)))
    return out


def _nf_zero(gamma: int, e: LinComb) -> bool:
    return zin_normal_form(gamma, e).is_zero()


def _lozenge(a: int, u, v) -> LinComb:
    """The symmetrized product u sh_a v + v sh_a u."""
    return sh(a, u, v) + sh(a, v, u)


def verify_com_from_zin(gamma: int) -> bool:
    """Symmetrizing each half-shuffle yields commutative associative ops.

    Commutativity is syntactic; same-index associativity must reduce to
    zero in the right-nested coordinates, for every label.
    """
    for a in range(1, gamma + 1):
        if not (_lozenge(a, "x", "y") - _lozenge(a, "y", "x")).is_zero():
            return False
        assoc = _lozenge(a, _lozenge(a, "x", "y"), "z") - _lozenge(
            a, "x", _lozenge(a, "y", "z")
        )
        if not _nf_zero(gamma, assoc):
            return False
    return True


def verify_dendr_from_zin(gamma: int) -> bool:
    """x prec_a y := x sh_a y, x succ_a y := y sh_a x satisfy the three
    min-indexed polydendriform identities for all label pairs."""
    prec = lambda a, u, v: sh(a, u, v)
    succ = lambda a, u, v: sh(a, v, u)
    for a in range(1, gamma + 1):
        for ap in range(1, gamma + 1):
            m = min(a, ap)
            r1 = prec(a, succ(ap, "x", "y"), "z") - succ(ap, "x", prec(a, "y", "z"))
            r2 = (
                prec(a, prec(ap, "x", "y"), "z")
                - prec(m, "x", prec(a, "y", "z"))
                - prec(m, "x", succ(ap, "y", "z"))
            )
            r3 = (
                succ(m, prec(ap, "x", "y"), "z")
                + succ(m, succ(a, "x", "y"), "z")
                - succ(a, "x", succ(ap, "y", "z"))
            )
            if not (_nf_zero(gamma, r1) and _nf_zero(gamma, r2) and _nf_zero(gamma, r3)):
                return False
    return True


def com_cross_index_defect(gamma: int, a: int, b: int) -> LinComb:
    """(x dia_a y) dia_b z - x dia_a (y dia_b z), in normal form.

    Cross-index associativity is not part of the commutative structure;
    for a != b the defect is generically nonzero.
    """
    lhs = _lozenge(b, _lozenge(a, "x", "y"), "z")
    rhs = _lozenge(a, "x", _lozenge(b, "y", "z"))
    return zin_normal_form(gamma, lhs - rhs)
