"""Exact algebra of torus characters and virtual representations.

Characters of the diagonal torus acting on P^n are Laurent monomials in the
homogeneous coordinates x_0..x_n.  Finite integer combinations of characters
(virtual representations) are the common currency for tangent spaces, normal
bundles and fibers throughout the package.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping


class LaurentMonomial:
    """A torus character, stored as the exponent vector of x_0..x_n.

    Exponents may be negative; the zero vector is the trivial character 1.
    Instances are immutable and hashable.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int]):
        object.__setattr__(self, "exponents", tuple(int(e) for e in exponents))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentMonomial is immutable")

    # default slots pickling would call the blocked __setattr__
    def __reduce__(self):
        return (LaurentMonomial, (self.exponents,))

    @property
    def ambient(self) -> int:
        return len(self.exponents) - 1

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        return LaurentMonomial(a + b for a, b in zip(self.exponents, other.exponents, strict=True))

    def __truediv__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        return LaurentMonomial(a - b for a, b in zip(self.exponents, other.exponents, strict=True))

    def inverse(self) -> "LaurentMonomial":
        return LaurentMonomial(-e for e in self.exponents)

    def divides(self, other: "LaurentMonomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents, strict=True))

    def sort_key(self) -> tuple:
        # graded order first, then lexicographic with x_0 heaviest
        return (self.degree, tuple(-e for e in self.exponents))

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentMonomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __lt__(self, other: "LaurentMonomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"LaurentMonomial({self.exponents})"

    def __str__(self) -> str:
        num = [(i, e) for i, e in enumerate(self.exponents) if e > 0]
        den = [(i, -e) for i, e in enumerate(self.exponents) if e < 0]

        def side(factors):
            return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in factors)

        top = side(num) if num else "1"
        if not den:
            return top
        bottom = side(den)
        if len(den) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"


def char(*exponents: int) -> LaurentMonomial:
    """Shorthand constructor for a character from its exponents."""
    return LaurentMonomial(exponents)


class VirtualRep:
    """A finite integer-multiplicity combination of characters.

    Multiplicities may be negative (formal differences of representations);
    only :func:`expand` insists on effectivity.  Stored sparsely with no zero
    multiplicities, so equality and hashing are structural.
    """

    __slots__ = ("terms", "ambient")

    def __init__(self, terms: Mapping[LaurentMonomial, int], ambient: int):
        cleaned = {}
        for c, m in terms.items():
            if c.ambient != ambient:
                raise ValueError("ambient mismatch")
            if m:
                cleaned[c] = int(m)
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "ambient", ambient)

    def __setattr__(self, name, value):
        raise AttributeError("VirtualRep is immutable")

    def __reduce__(self):
        return (VirtualRep, (self.terms, self.ambient))

    @classmethod
    def zero(cls, ambient: int) -> "VirtualRep":
        return cls({}, ambient)

    @classmethod
    def from_chars(cls, chars: Iterable[LaurentMonomial], ambient: int) -> "VirtualRep":
        terms: dict[LaurentMonomial, int] = {}
        for c in chars:
            terms[c] = terms.get(c, 0) + 1
        return cls(terms, ambient)

    @property
    def dimension(self) -> int:
        return sum(self.terms.values())

    def items(self) -> list[tuple[LaurentMonomial, int]]:
        """Terms in canonical (graded lexicographic) order."""
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def multiplicity(self, c: LaurentMonomial) -> int:
        return self.terms.get(c, 0)

    def __contains__(self, c: LaurentMonomial) -> bool:
        return c in self.terms

    def __iter__(self) -> Iterator[LaurentMonomial]:
        return iter(sorted(self.terms, key=LaurentMonomial.sort_key))

    def _combine(self, other: "VirtualRep", sign: int) -> "VirtualRep":
        if not isinstance(other, VirtualRep):
            return NotImplemented
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        terms = dict(self.terms)
        for c, m in other.terms.items():
            terms[c] = terms.get(c, 0) + sign * m
        return VirtualRep(terms, self.ambient)

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        return self._combine(other, 1)

    def __sub__(self, other: "VirtualRep") -> "VirtualRep":
        return self._combine(other, -1)

    def __mul__(self, other):
        if isinstance(other, VirtualRep):
            return tensor(self, other)
        if isinstance(other, int):
            return VirtualRep({c: other * m for c, m in self.terms.items()}, self.ambient)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "VirtualRep":
        return self * -1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VirtualRep)
            and self.ambient == other.ambient
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"VirtualRep({dict(self.items())!r}, ambient={self.ambient})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, m in self.items():
            if m == 1:
                parts.append(str(c))
            elif m == -1:
                parts.append(f"-{c}")
            else:
                parts.append(f"{m}*{c}")
        return " + ".join(parts).replace("+ -", "- ")


def tensor(a: VirtualRep, b: VirtualRep) -> VirtualRep:
    """Bilinear character product; multiplicities multiply."""
    if a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    terms: dict[LaurentMonomial, int] = {}
    for c1, m1 in a.terms.items():
        for c2, m2 in b.terms.items():
            c = c1 * c2
            terms[c] = terms.get(c, 0) + m1 * m2
    return VirtualRep(terms, a.ambient)


def dual(a: VirtualRep) -> VirtualRep:
    """Negate every exponent vector, keeping multiplicities."""
    return VirtualRep({c.inverse(): m for c, m in a.terms.items()}, a.ambient)


def trivial(ambient: int, multiplicity: int = 1) -> VirtualRep:
    """The trivial character with the given multiplicity."""
    return VirtualRep({LaurentMonomial((0,) * (ambient + 1)): multiplicity}, ambient)


def monomial_exponents(ambient: int, d: int) -> Iterator[tuple[int, ...]]:
    """Yield the exponent vectors of all degree-d monomials in x_0..x_ambient."""
    # stars and bars: each cut set corresponds to one composition of d
    m = ambient + 1
    for cuts in itertools.combinations(range(d + m - 1), m - 1):
        prev = -1
        exps = []
        for c in cuts:
            exps.append(c - prev - 1)
            prev = c
        exps.append(d + m - 2 - prev)
        yield tuple(exps)


def sym_power(ambient: int, d: int) -> VirtualRep:
    """All degree-d monomials in x_0..x_ambient, each with multiplicity 1."""
    if d < 0:
        raise ValueError("negative degree")
    return VirtualRep(
        {LaurentMonomial(e): 1 for e in monomial_exponents(ambient, d)}, ambient
    )


def degree_part(a: VirtualRep, d: int) -> VirtualRep:
    """Restrict to total-degree-d characters.  Requires nonnegative exponents."""
    for c in a.terms:
        if any(e < 0 for e in c.exponents):
            raise ValueError("negative exponent present")
    return VirtualRep({c: m for c, m in a.terms.items() if c.degree == d}, a.ambient)


def expand(a: VirtualRep) -> list[LaurentMonomial]:
    """Flatten to a list of characters, each repeated by its multiplicity.

    Raises if any multiplicity is negative: a tangent or normal computation
    that fails to cancel is an upstream bug, not data.
    """
    out = []
    for c, m in a.items():
        if m < 0:
            raise ValueError("virtual representation not effective")
        out.extend([c] * m)
    return out
