"""Exact truncated power series and every closed-form dimension formula.

Dimension series are computed two independent ways: from closed forms
(Catalan/Narayana sums and rational functions) and from the quadratic
functional equations solved coefficient-by-coefficient.  The Koszul
inverse check composes the alternating-sign variants of two series and
compares with t, all in exact rational arithmetic; no radical is ever
evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


def catalan(n: int) -> int:
    """Binary trees with n internal nodes: C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """nar(n, k) = C(n-1, k) C(n, k) / (k + 1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in 0..{n - 1}")
    return comb(n - 1, k) * comb(n, k) // (k + 1)


@dataclass(frozen=True)
class DimSeries:
    """Coefficients of t^0..t^N; operad Hilbert series have zero constant."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def dims(self) -> list[int]:
        """Integer coefficients of t^1..t^N."""
        out = []
        for c in self.coefficients[1:]:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(int(c))
        return out

    def __repr__(self) -> str:
        return f"DimSeries({self.dims()})"


_FAMILY_ALIASES = {
    "dendr": "dendr",
    "dup": "dup",
    "as": "as",
    "das": "das",
    "tdendr": "tdendr",
    "dias": "dias",
}


def _family(name: str) -> str:
    key = name.strip().lower()
    if key not in _FAMILY_ALIASES:
        raise ValueError(
            f"unknown dimension family {name!r}; expected one of "
            f"{sorted(_FAMILY_ALIASES)}"
        )
    return _FAMILY_ALIASES[key]


def dims(family: str, gamma: int, N: int) -> DimSeries:
    """Closed-form dimensions d(1)..d(N) of the named operad family."""
    if N < 1:
        raise ValueError("truncation order must be at least 1")
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    fam = _family(family)
    coeffs = [Fraction(0)]
    for n in range(1, N + 1):
        coeffs.append(Fraction(_dim(fam, gamma, n)))
    return DimSeries(tuple(coeffs))


def _dim(fam: str, gamma: int, n: int) -> int:
    if n == 1:
        return 1
    if fam in ("dendr", "dup"):
        return gamma ** (n - 1) * catalan(n)
    if fam == "as":
        return gamma
    if fam == "das":
        return sum(
            gamma ** (k + 1) * (gamma - 1) ** (n - k - 2) * narayana(n - 1, k)
            for k in range(0, n - 1)
        )
    if fam == "tdendr":
        return sum(
            (gamma + 1) ** k * gamma ** (n - k - 1) * narayana(n, k)
            for k in range(0, n)
        )
    if fam == "dias":
        # coefficients of t / (1 - gamma t)^2
        return n * gamma ** (n - 1)
    raise AssertionError(fam)


def series_from_equation(family: str, gamma: int, N: int) -> DimSeries:
    """Unique series solution H = t + O(t^2) of the family's equation.

    Each coefficient depends only on lower-order ones, so plain iteration
    solves the fixed point exactly:

    - dendr, dup:  H = t + 2g t H + g^2 t H^2
    - das:         H = t + t H + (g - 1) H^2
    - tdendr:      H = t + (2g + 1) t H + g(g + 1) t H^2
    - as:          (1 - t) H = t + (g - 1) t^2
    - dias:        (1 - g t)^2 H = t
    """
    if N < 1:
        raise ValueError("truncation order must be at least 1")
    fam = _family(family)
    g = gamma
    h = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        if fam in ("dendr", "dup"):
            val = Fraction(n == 1) + 2 * g * h[n - 1]
            val += g * g * sum(h[i] * h[n - 1 - i] for i in range(1, n - 1))
        elif fam == "das":
            val = Fraction(n == 1) + h[n - 1]
            val += (g - 1) * sum(h[i] * h[n - i] for i in range(1, n))
        elif fam == "tdendr":
            val = Fraction(n == 1) + (2 * g + 1) * h[n - 1]
            val += g * (g + 1) * sum(h[i] * h[n - 1 - i] for i in range(1, n - 1))
        elif fam == "as":
            val = Fraction(n == 1) + (g - 1) * (n == 2) + h[n - 1]
        elif fam == "dias":
            val = Fraction(n == 1) + 2 * g * h[n - 1] - g * g * h[n - 2] if n >= 2 else Fraction(1)
        else:
            raise AssertionError(fam)
        h[n] = val
    return DimSeries(tuple(h))


def compose_series(outer: DimSeries, inner: DimSeries, N: int) -> DimSeries:
    """outer(inner(t)) mod t^{N+1}; inner must have zero constant term."""
    if inner[0] != 0:
        raise ValueError("inner series must have zero constant term")
    result = [Fraction(0)] * (N + 1)
    result[0] = outer[0] if outer.order >= 0 else Fraction(0)
    power = [Fraction(0)] * (N + 1)
    power[0] = Fraction(1)
    for k in range(1, min(outer.order, N) + 1):
        power = _mul_trunc(power, inner.coefficients, N)
        ck = outer[k]
        if ck:
            for i in range(N + 1):
                result[i] += ck * power[i]
    return DimSeries(tuple(result))


def _mul_trunc(a, b, N: int):
    out = [Fraction(0)] * (N + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > N:
            continue
        for j in range(0, N - i + 1):
            bj = b[j] if j < len(b) else 0
            if bj:
                out[i + j] += ai * bj
    return out


def alternate(series: DimSeries) -> DimSeries:
    """-H(-t): flips the sign of every even-degree coefficient."""
    return DimSeries(
        tuple(-c if n % 2 == 0 else c for n, c in enumerate(series.coefficients))
    )


def check_koszul_inverse(a: DimSeries, b: DimSeries, N: int) -> bool:
    """True iff H_a(-H_b(-t)) = t modulo t^{N+1}.

    That identity characterizes the Hilbert series of Koszul dual pairs.
    Both series must start t + O(t^2).
    """
    for s in (a, b):
        if s[0] != 0:
            raise ValueError("operad Hilbert series have zero constant term")
        if s.order < 1 or s[1] != 1:
            raise ValueError("operad Hilbert series start with t")
    composed = compose_series(a, alternate(b), N)
    return all(
        composed[n] == (1 if n == 1 else 0) for n in range(0, N + 1)
    )
