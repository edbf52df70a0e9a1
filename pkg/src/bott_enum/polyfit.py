"""Exact Lagrange interpolation over the rationals.

Used for the closed-form degree polynomials and for Hilbert polynomials.
No floating point anywhere: the coefficients that show up in practice
(e.g. denominators past 10^18) are not float-representable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class RatPoly:
    """A univariate polynomial with exact rational coefficients.

    Coefficients are stored in ascending degree with trailing zeros trimmed,
    so equality is structural.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    def __reduce__(self):
        return (RatPoly, (self.coefficients,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def eval(self, d) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * d + c
        return acc

    def common_denominator(self) -> tuple[int, tuple[int, ...]]:
        """Return (q, numerators) with coefficients = numerators / q."""
        q = 1
        for c in self.coefficients:
            q = q * c.denominator // gcd(q, c.denominator)
        return q, tuple(int(c * q) for c in self.coefficients)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coefficients)!r})"

    def _terms(self, coeffs: Sequence, var: str) -> str:
        parts = []
        for k in range(len(coeffs) - 1, -1, -1):
            c = coeffs[k]
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        head = parts[0].removeprefix("+ ")
        if head.startswith("- "):
            head = "-" + head[2:]
        return " ".join([head] + parts[1:])

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "d") -> str:
        """Render with rational coefficients, descending degree."""
        return self._terms(self.coefficients, var)

    def format_common_denominator(self, var: str = "d") -> str:
        """Render as (integer polynomial)/q."""
        q, numerators = self.common_denominator()
        body = self._terms(numerators, var)
        return body if q == 1 else f"({body})/{q}"


def lagrange(points: Sequence[tuple]) -> RatPoly:
    """The unique polynomial of degree < len(points) through all points.

    Newton's divided differences, expanded to the monomial basis at the end.
    """
    if not points:
        raise ValueError("at least one point required")
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa")
    # divided-difference coefficients c[i] = f[x_0..x_i]
    table = [Fraction(p[1]) for p in points]
    coeffs = [table[0]]
    for level in range(1, len(points)):
        for i in range(len(points) - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
        coeffs.append(table[level])
    # Horner expansion of sum_i c_i * prod_{j<i} (x - x_j)
    poly = [coeffs[-1]]
    for i in range(len(points) - 2, -1, -1):
        poly = [Fraction(0)] + poly
        for k in range(len(poly) - 1):
            poly[k] -= xs[i] * poly[k + 1]
        poly[0] += coeffs[i]
    return RatPoly(poly)
