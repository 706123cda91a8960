"""Exact rational linear algebra over distinguished monomial bases.

Vectors are ``LinComb`` objects: finite formal sums of hashable basis keys
(syntax trees, labeled trees, ...) with nonzero ``Fraction`` coefficients.
Spans are reduced against a fixed monomial order; the workhorse is a
sparse integer row-echelon accumulator (fraction-free eliminations with
content reduction), which keeps arity-4 ideal computations fast while all
exposed coordinates stay exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Hashable, Iterable, Mapping, Sequence


class ArityMismatchError(ValueError):
    """Raised when vectors of different arities are mixed."""


def _key_arity(key) -> int:
    a = getattr(key, "arity", None)
    if a is None:
        raise TypeError(f"basis key {key!r} has no arity")
    return a


class LinComb:
    """Immutable formal sum of basis keys with exact rational coefficients.

    Zero coefficients are never stored; all keys share one arity.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Fraction | int] | None = None):
        clean: dict = {}
        arity = None
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            a = _key_arity(k)
            if arity is None:
                arity = a
            elif a != arity:
                raise ArityMismatchError(f"mixed arities {arity} and {a}")
            clean[k] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, key, coeff: Fraction | int = 1) -> "LinComb":
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls({})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def arity(self) -> int | None:
        for k in self.terms:
            return _key_arity(k)
        return None

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return LinComb(out)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "LinComb":
        scalar = Fraction(scalar)
        if scalar == 0:
            return LinComb()
        return LinComb({k: scalar * c for k, c in self.terms.items()})

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def __setattr__(self, name, value):
        if name in ("terms", "_hash") and not hasattr(self, "_hash"):
            super().__setattr__(name, value)
        elif name == "_hash":
            super().__setattr__(name, value)
        else:
            raise AttributeError("LinComb is immutable")

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), key=lambda kc: repr(kc[0])):
            if c == 1:
                parts.append(f"{k!r}")
            elif c == -1:
                parts.append(f"-{k!r}")
            else:
                parts.append(f"{c}*{k!r}")
        return " + ".join(parts).replace("+ -", "- ")

    def map_keys(self, f: Callable) -> "LinComb":
        out: dict = {}
        for k, c in self.terms.items():
            nk = f(k)
            out[nk] = out.get(nk, 0) + c
        return LinComb(out)


def lincomb(*pairs) -> LinComb:
    """Convenience builder: lincomb((coeff, key), ...)."""
    out: dict = {}
    for c, k in pairs:
        out[k] = out.get(k, 0) + Fraction(c)
    return LinComb(out)


# -- sparse integer echelon --------------------------------------------------


def _content_reduce(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for k in row:
            row[k] //= g
    return row


class Echelon:
    """Incremental sparse row echelon over the integers.

    Rows are dicts column->int, pairwise with distinct minimal columns
    (pivots).  Insertion is fraction-free; rational coordinates are
    recovered on demand.  Instances are append-only, so concurrent readers
    after construction require no locking.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}  # pivot -> row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce_int(self, row: dict[int, int]) -> dict[int, int]:
        while row:
            c = min(row)
            pivot_row = self.rows.get(c)
            if pivot_row is None:
                return row
            a, b = row[c], pivot_row[c]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            for k, v in pivot_row.items():
                s = row.get(k, 0) * ma - v * mb
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
            _content_reduce(row)
        return row

    def insert(self, row: Mapping[int, int | Fraction]) -> bool:
        """Reduce ``row`` and absorb it; True iff the rank grew."""
        introw = _clear_denominators(row)
        introw = self._reduce_int(introw)
        if not introw:
            return False
        c = min(introw)
        if introw[c] < 0:
            introw = {k: -v for k, v in introw.items()}
        self.rows[c] = introw
        return True

    def reduce(self, row: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Normal form of ``row`` modulo the span: eliminate every pivot."""
        rem, _ = self.reduce_with_coords(row)
        return rem

    def reduce_with_coords(self, row: Mapping[int, Fraction]):
        """Remainder plus the pivot->coefficient combination used."""
        rem = {k: Fraction(v) for k, v in row.items() if v}
        coords: dict[int, Fraction] = {}
        scanned: set[int] = set()
        while rem:
            candidates = [c for c in rem if c not in scanned]
            if not candidates:
                break
            c = min(candidates)
            scanned.add(c)
            pivot_row = self.rows.get(c)
            if pivot_row is None:
                continue
            coef = rem[c] / pivot_row[c]
            coords[c] = coef
            for k, v in pivot_row.items():
                s = rem.get(k, 0) - coef * v
                if s == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = s
        return rem, coords

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        return not self.reduce(row)

    def pivot_columns(self) -> list[int]:
        return sorted(self.rows)

    def free_columns(self) -> list[int]:
        pivots = set(self.rows)
        return [c for c in range(self.ncols) if c not in pivots]

    def rref_rows(self) -> list[dict[int, Fraction]]:
        """Fully reduced rows with leading coefficient 1, by pivot order."""
        pivots = sorted(self.rows)
        out: list[dict[int, Fraction]] = []
        for p in reversed(pivots):
            row = {k: Fraction(v) for k, v in self.rows[p].items()}
            lead = row[p]
            row = {k: v / lead for k, v in row.items()}
            for done in out:
                dp = min(done)
                coef = row.get(dp)
                if coef:
                    for k, v in done.items():
                        s = row.get(k, 0) - coef * v
                        if s == 0:
                            row.pop(k, None)
                        else:
                            row[k] = s
            out.append(row)
        out.reverse()
        return out


def _clear_denominators(row: Mapping[int, int | Fraction]) -> dict[int, int]:
    lcm = 1
    for v in row.values():
        if isinstance(v, Fraction):
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
    out: dict[int, int] = {}
    for k, v in row.items():
        iv = int(v * lcm)
        if iv:
            out[k] = iv
    return _content_reduce(out)


# -- bases over explicit monomial orders ---------------------------------------


class Basis:
    """Row-reduced echelon basis of a span inside an ordered monomial space.

    ``order`` is the full list of basis keys of the ambient space in the
    canonical monomial order.  ``vectors`` are LinCombs in reduced
    row-echelon form: strictly increasing leading monomials, each with
    leading coefficient 1.
    """

    def __init__(self, order: Sequence[Hashable], echelon: Echelon):
        self.order = tuple(order)
        self.index = {k: i for i, k in enumerate(self.order)}
        self._echelon = echelon
        self._vectors: tuple[LinComb, ...] | None = None

    @property
    def dimension(self) -> int:
        return self._echelon.rank

    @property
    def ambient_dimension(self) -> int:
        return len(self.order)

    @property
    def vectors(self) -> tuple[LinComb, ...]:
        if self._vectors is None:
            rows = self._echelon.rref_rows()
            self._vectors = tuple(
                LinComb({self.order[c]: v for c, v in row.items()}) for row in rows
            )
        return self._vectors

    def _to_row(self, v: LinComb) -> dict[int, Fraction]:
        row = {}
        for k, c in v:
            i = self.index.get(k)
            if i is None:
                raise ArityMismatchError(f"key {k!r} is not in the ambient monomial order")
            row[i] = c
        return row

    def contains(self, v: LinComb) -> bool:
        return not self._echelon.reduce(self._to_row(v))

    def reduce(self, v: LinComb) -> LinComb:
        rem = self._echelon.reduce(self._to_row(v))
        return LinComb({self.order[c]: x for c, x in rem.items()})

    def coordinates(self, v: LinComb) -> list[Fraction] | None:
        """Coordinates of ``v`` over ``self.vectors``, or None if outside."""
        rem, _ = self._echelon.reduce_with_coords(self._to_row(v))
        if rem:
            return None
        # re-derive against the RREF vectors for well-defined output
        coords = []
        work = v
        for b in self.vectors:
            lead_key = min(b.terms, key=self.index.__getitem__)
            c = work[lead_key]
            coords.append(c)
            if c:
                work = work - c * b
        return coords

    def complement_keys(self) -> list[Hashable]:
        """Monomials whose classes form a basis of the quotient by the span."""
        return [self.order[c] for c in self._echelon.free_columns()]


def span_basis(vectors: Iterable[LinComb], order: Sequence[Hashable]) -> Basis:
    """Echelon basis of the span of ``vectors`` inside the ordered space."""
    order = tuple(order)
    index = {k: i for i, k in enumerate(order)}
    ech = Echelon(len(order))
    for v in vectors:
        row = {}
        for k, c in v:
            i = index.get(k)
            if i is None:
                raise ArityMismatchError(f"key {k!r} is not in the ambient monomial order")
            row[i] = c
        ech.insert(row)
    return Basis(order, ech)


def member(v: LinComb, basis: Basis):
    """(is-in-span, coordinates-or-None) for ``v`` against ``basis``."""
    if basis.order and not v.is_zero() and v.arity != _key_arity(basis.order[0]):
        raise ArityMismatchError("vector arity does not match the basis ambient space")
    coords = basis.coordinates(v)
    return (coords is not None), coords


def orthogonal_complement(
    basis: Basis, sign: Callable[[Hashable], int]
) -> Basis:
    """Annihilator of ``basis`` for the diagonal form <m, m> = sign(m).

    ``sign`` maps each ambient monomial to +1 or -1; distinct monomials are
    orthogonal.  dim(basis) + dim(result) equals the ambient dimension.
    """
    order = basis.order
    D = len(order)
    eps = [sign(k) for k in order]
    constraint = Echelon(D)
    for vec in basis.vectors:
        row = {basis.index[k]: c * eps[basis.index[k]] for k, c in vec}
        constraint.insert(row)
    # nullspace from RREF: one solution per free column
    rref = constraint.rref_rows()
    pivots = [min(r) for r in rref]
    pivot_set = set(pivots)
    null = Echelon(D)
    for f in range(D):
        if f in pivot_set:
            continue
        sol = {f: Fraction(1)}
        for r in rref:
            p = min(r)
            c = r.get(f)
            if c:
                sol[p] = -c
        null.insert(sol)
    return Basis(order, null)
