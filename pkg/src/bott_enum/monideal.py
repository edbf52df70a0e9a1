"""Monomial-ideal calculus: squares, degree slices, Hilbert data.

Every fixed-point ideal handled by this package is monomial, so minimal
generators, slices and Hilbert counts reduce to exponent-vector arithmetic.
"""

from __future__ import annotations

from math import comb
from typing import Iterable

from . import backend
from .charalg import LaurentMonomial, monomial_exponents
from .polyfit import RatPoly, lagrange


class MonomialIdeal:
    """A monomial ideal, stored by its minimal generators in canonical order.

    Generators must have nonnegative exponents.  Minimalization and the
    canonical (graded lexicographic) ordering happen at construction, so
    structural equality decides ideal equality.
    """

    __slots__ = ("generators", "ambient")

    def __init__(self, generators: Iterable[LaurentMonomial], ambient: int):
        pool = []
        for g in generators:
            if g.ambient != ambient:
                raise ValueError("ambient mismatch")
            if any(e < 0 for e in g.exponents):
                raise ValueError("negative exponent present")
            pool.append(g)
        pool.sort(key=LaurentMonomial.sort_key)
        minimal: list[LaurentMonomial] = []
        for g in pool:
            if not any(h.divides(g) for h in minimal):
                minimal.append(g)
        object.__setattr__(self, "generators", tuple(minimal))
        object.__setattr__(self, "ambient", ambient)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __reduce__(self):
        return (MonomialIdeal, (self.generators, self.ambient))

    def exponent_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.exponents for g in self.generators)

    def contains(self, c: LaurentMonomial) -> bool:
        """Ideal membership for a single monomial."""
        return any(g.divides(c) for g in self.generators)

    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.ambient == other.ambient
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.generators))

    def __repr__(self) -> str:
        return f"MonomialIdeal({list(self.generators)!r}, ambient={self.ambient})"

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def ideal(gens: Iterable[Iterable[int]], ambient: int) -> MonomialIdeal:
    """Build an ideal from raw exponent vectors."""
    return MonomialIdeal([LaurentMonomial(g) for g in gens], ambient)


def square(i: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the ideal generated by all pairwise products."""
    gens = i.generators
    products = [gens[a] * gens[b] for a in range(len(gens)) for b in range(a, len(gens))]
    return MonomialIdeal(products, i.ambient)


def degree_slice(i: MonomialIdeal, d: int) -> set[LaurentMonomial]:
    """All degree-d monomials divisible by at least one generator."""
    if d < 0:
        raise ValueError("negative degree")
    rows = [g.exponents for g in i.generators if g.degree <= d]
    out = set()
    for e in monomial_exponents(i.ambient, d):
        for g in rows:
            if all(a >= b for a, b in zip(e, g)):
                out.add(LaurentMonomial(e))
                break
    return out


def hilbert_count(i: MonomialIdeal, d: int) -> int:
    """C(d+n, n) minus the slice size: the quotient's Hilbert function at d."""
    if d < 0:
        raise ValueError("negative degree")
    return comb(d + i.ambient, i.ambient) - backend.slice_count(
        i.exponent_rows(), i.ambient + 1, d
    )


def hilbert_polynomial(i: MonomialIdeal, ceiling: int | None = None) -> RatPoly:
    """The quotient's Hilbert polynomial, by stabilized interpolation.

    Fits a window of ambient+1 consecutive Hilbert-function values and slides
    it until two successive fits agree and the fit also reproduces the value
    at the ceiling degree.  The distant confirmation point guards against
    pre-stable values that happen to lie on one low-degree polynomial.
    """
    if ceiling is None:
        ceiling = 4 * max(1, i.max_generator_degree())
    window = i.ambient + 1
    values = {d: hilbert_count(i, d) for d in range(min(window, ceiling + 1))}

    def value(d):
        if d not in values:
            values[d] = hilbert_count(i, d)
        return values[d]

    def fit(s):
        return lagrange([(d, value(d)) for d in range(s, s + window)])

    previous = None
    for s in range(0, ceiling - window + 2):
        current = fit(s)
        if current == previous and current.eval(ceiling) == value(ceiling):
            return current
        previous = current
    raise ValueError("Hilbert polynomial did not stabilize")
