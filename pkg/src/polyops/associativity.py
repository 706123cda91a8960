"""Associative arity-2 elements of presented operads.

An arity-2 element x is associative when x o_1 x - x o_2 x falls in the
relation span.  Two routes are implemented: a direct membership test over
the rationals, and a symbolic quadratic system (the coordinates of
x o_1 x - x o_2 x on the complement monomials after reduction against the
relation span) that can be evaluated over small prime fields.  Exhaustive
projective search over GF(p) at two primes classifies all associative
elements at desk scale; that certifies the classification statements
without solving quadratic systems over the rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .linear import LinComb
from .presentations import Presentation, comp, ideal_component
from .trees import Generator, corolla_tree


class SearchSpaceError(ValueError):
    """The projective search space is too large to enumerate."""


def _as_coefficient_vector(pres: Presentation, x: LinComb) -> list[Fraction]:
    coeffs = []
    table = {corolla_tree(g): g for g in pres.signature}
    seen = dict(x.terms)
    for g in pres.signature:
        coeffs.append(Fraction(seen.pop(corolla_tree(g), 0)))
    if seen:
        raise ValueError("element contains keys outside the arity-2 generator span")
    return coeffs


def associator(pres: Presentation, x: LinComb) -> LinComb:
    """x o_1 x - x o_2 x as an arity-3 combination."""
    out: dict = {}
    for t1, c1 in x:
        g1 = t1.gen
        for t2, c2 in x:
            g2 = t2.gen
            for i, sign in ((1, 1), (2, -1)):
                key = comp(g1, i, g2)
                out[key] = out.get(key, 0) + sign * c1 * c2
    return LinComb(out)


def is_associative(pres: Presentation, x: LinComb) -> bool:
    """Membership of the associator in the relation span."""
    if x.is_zero():
        return True
    return ideal_component(pres, 3).contains(associator(pres, x))


def element(pres: Presentation, *terms) -> LinComb:
    """Arity-2 element from (coeff, generator-name) pairs."""
    out: dict = {}
    for c, name in terms:
        key = corolla_tree(pres.signature[name])
        out[key] = out.get(key, 0) + Fraction(c)
    return LinComb(out)


@dataclass
class QuadraticSystem:
    """Vanishing conditions for associativity, one quadratic form per
    complement monomial.

    Each equation is a mapping (i, j) -> coefficient over generator-index
    pairs; an arity-2 element with coefficient vector v is associative iff
    sum_{i,j} c[i,j] v[i] v[j] vanishes for every equation.
    """

    generators: tuple[Generator, ...]
    equations: tuple[Mapping[tuple[int, int], Fraction], ...]

    def evaluate(self, coeffs) -> list[Fraction]:
        return [
            sum((c * coeffs[i] * coeffs[j] for (i, j), c in eq.items()), Fraction(0))
            for eq in self.equations
        ]

    def evaluate_modp(self, coeffs, p: int) -> bool:
        """True iff every equation vanishes mod p at the integer vector."""
        for eq in self.equations:
            acc = 0
            for (i, j), c in eq.items():
                num = c.numerator % p
                den = pow(c.denominator, -1, p)
                acc = (acc + num * den * coeffs[i] * coeffs[j]) % p
            if acc:
                return False
        return True


def extract_quadratic_system(pres: Presentation) -> QuadraticSystem:
    """Symbolic associator coordinates on the complement monomials.

    For generators g_i the associator of x = sum v_i g_i is
    sum v_i v_j (g_i o_1 g_j - g_i o_2 g_j); reducing each monomial against
    the relation span once makes the residual coordinates exact quadratic
    forms in the v_i.
    """
    rel = ideal_component(pres, 3)
    gens = tuple(pres.signature)
    residues: dict = {}
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            v = LinComb({comp(gi, 1, gj): 1, comp(gi, 2, gj): -1})
            residues[(i, j)] = rel.reduce(v)
    # one equation per complement coordinate, identically-zero ones included
    keys = rel.complement_keys()
    equations = []
    for key in keys:
        eq: dict[tuple[int, int], Fraction] = {}
        for (i, j), r in residues.items():
            c = r[key]
            if c:
                eq[(i, j)] = c
        equations.append(eq)
    return QuadraticSystem(gens, tuple(equations))


def classify_associative_modp(
    pres: Presentation, p: int, max_candidates: int = 200_000
) -> set[tuple[int, ...]]:
    """All projective GF(p) solutions of the associativity system.

    Vectors are normalized so the first nonzero coordinate is 1; the
    result is the set of solution lines.  The search is exhaustive, so the
    space (p^s - 1)/(p - 1) is bounded by ``max_candidates``.
    """
    s = len(pres.signature)
    count = (p**s - 1) // (p - 1)
    if count > max_candidates:
        raise SearchSpaceError(
            f"{count} projective candidates exceed the bound {max_candidates}"
        )
    system = extract_quadratic_system(pres)
    solutions: set[tuple[int, ...]] = set()
    for vec in _projective_vectors(s, p):
        if system.evaluate_modp(vec, p):
            solutions.add(vec)
    return solutions


def _projective_vectors(s: int, p: int) -> Iterable[tuple[int, ...]]:
    """One representative per line of GF(p)^s: first nonzero entry is 1."""
    for lead in range(s):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(p), repeat=s - lead - 1):
            yield prefix + tail


def line_of(pres: Presentation, x: LinComb, p: int) -> tuple[int, ...]:
    """The GF(p) line of a rational arity-2 element (for set comparisons)."""
    coeffs = _as_coefficient_vector(pres, x)
    ints = [(c.numerator % p) * pow(c.denominator, -1, p) % p for c in coeffs]
    lead = next((v for v in ints if v), None)
    if lead is None:
        raise ValueError("the zero element spans no line")
    inv = pow(lead, -1, p)
    return tuple(v * inv % p for v in ints)
