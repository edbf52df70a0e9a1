"""Bott residue evaluation at torus fixed points.

A one-parameter subgroup with pairwise-distinct weights w_0..w_n acts on P^n
with isolated fixed loci on the parameter spaces used here.  Each fixed point
contributes the top elementary symmetric function of its complement-bundle
weights divided by the product of its tangent weights; the exact rational sum
of contributions is the degree being computed, and must come out a
nonnegative integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from . import backend
from .charalg import LaurentMonomial, VirtualRep, dual, expand, tensor
from .monideal import MonomialIdeal


class WeightVector:
    """Integer weights of x_0..x_n under the one-parameter torus."""

    __slots__ = ("w",)

    def __init__(self, w: Iterable[int]):
        object.__setattr__(self, "w", tuple(int(x) for x in w))

    def __setattr__(self, name, value):
        raise AttributeError("WeightVector is immutable")

    def __reduce__(self):
        return (WeightVector, (self.w,))

    @property
    def distinct(self) -> bool:
        return len(set(self.w)) == len(self.w)

    def __iter__(self):
        return iter(self.w)

    def __len__(self):
        return len(self.w)

    def __getitem__(self, i):
        return self.w[i]

    def __eq__(self, other):
        return isinstance(other, WeightVector) and self.w == other.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return f"WeightVector{self.w}"

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.w) + ")"


def _entries(w) -> tuple[int, ...]:
    return tuple(w.w) if isinstance(w, WeightVector) else tuple(int(x) for x in w)


# paper-sourced defaults: the generic list covers P^3..P^5 by truncation, the
# linear-family demo list and the elliptic-quartic list are their own rows
_DEFAULTS = {
    "generic": (11, 17, 32, 55, 95, 160),
    "linear": (4, 11, 17, 32, 55, 95, 160, 267, 441),
    "elliptic_quartic": (55, 95, 160, 267),
}


def default_weights(n: int, kind: str = "generic") -> WeightVector:
    """Default weight vector for P^n, per family kind."""
    table = list(_DEFAULTS[kind])
    while len(table) < n + 1:
        table.append(table[-1] + table[-2])
    return WeightVector(table[: n + 1])


def weight_of(c: LaurentMonomial, w) -> int:
    """Dot product of the exponent vector with the weights."""
    return sum(e * x for e, x in zip(c.exponents, _entries(w), strict=True))


def elem_symm(weights: Iterable[int], k: int) -> int:
    """k-th elementary symmetric function, exactly, via the truncated product."""
    if k < 0:
        raise ValueError("negative symmetric-function index")
    coef = [0] * (k + 1)
    coef[0] = 1
    seen = 0
    for v in weights:
        seen += 1
        for j in range(k if k < seen else seen, 0, -1):
            coef[j] += v * coef[j - 1]
    return coef[k]


def tgrass(ambient_rep: VirtualRep, point: VirtualRep) -> VirtualRep:
    """Tangent representation of a Grassmannian at a coordinate point:
    (ambient_rep - point) tensor dual(point)."""
    return tensor(ambient_rep - point, dual(point))


@dataclass(frozen=True)
class BlowUpPoint:
    """One fixed point on the exceptional fiber over a blow-up center."""

    normal: VirtualRep
    character: LaurentMonomial
    tangent: VirtualRep
    new_generator: LaurentMonomial


def blow_up(t_ambient: VirtualRep, t_center: VirtualRep) -> list[BlowUpPoint]:
    """Fixed points introduced by blowing up along a center inside the ambient.

    The normal representation N = t_ambient - t_center must be effective with
    multiplicity-free characters; each eigenline chi of N yields one point
    with tangent t_center + chi + (N - chi) tensor dual(chi), and a new ideal
    generator chi*D, where D clears every denominator appearing in N.
    """
    n_rep = t_ambient - t_center
    if any(m < 0 for m in n_rep.terms.values()):
        raise ValueError("center tangent not a subrepresentation")
    if any(m > 1 for m in n_rep.terms.values()):
        raise ValueError("non-isolated fixed points on exceptional fiber")
    chars = list(n_rep)
    nvars = t_ambient.ambient + 1
    d_exps = tuple(
        max(0, max(-c.exponents[i] for c in chars)) for i in range(nvars)
    )
    denominator = LaurentMonomial(d_exps)
    out = []
    for chi in chars:
        line = VirtualRep({chi: 1}, n_rep.ambient)
        tangent = t_center + line + tensor(n_rep - line, dual(line))
        if tangent.dimension != t_ambient.dimension:
            raise RuntimeError("internal: blow-up tangent has wrong dimension")
        new_gen = chi * denominator
        if any(e < 0 for e in new_gen.exponents):
            raise RuntimeError("internal: new generator has a negative exponent")
        out.append(
            BlowUpPoint(
                normal=n_rep, character=chi, tangent=tangent, new_generator=new_gen
            )
        )
    return out


@dataclass(frozen=True)
class FixedPoint:
    """One summand of the Bott formula.

    The ideal cuts out the fiber: degree-d members of the family's total
    space over this point are exactly the degree-d elements of the ideal.
    """

    family: str
    ideal: MonomialIdeal
    tangent: VirtualRep
    dim_w: int
    n: int
    label: str = ""
    d_min: int = 0

    def __post_init__(self):
        flat = expand(self.tangent)
        if len(flat) != self.dim_w:
            raise ValueError("tangent dimension does not match dim_w")
        if any(c.is_trivial() for c in flat):
            raise ValueError("tangent contains the trivial character")


def contribution(f: FixedPoint, d: int, w) -> Fraction:
    """This point's exact rational summand of the Bott formula at degree d."""
    ws = _entries(w)
    tangent_weights = []
    for c, m in f.tangent.items():
        x = weight_of(c, ws)
        if x == 0:
            raise ValueError("degenerate weights")
        tangent_weights.extend([x] * m)
    _, ek = backend.complement_esym(
        f.ideal.exponent_rows(), f.n + 1, d, ws, f.dim_w
    )
    return Fraction(ek, prod(tangent_weights))


def bott_sum(points: Sequence[FixedPoint], d: int, w) -> int:
    """Sum of contributions; asserts the total is a nonnegative integer."""
    if len({(p.family, p.dim_w, p.n) for p in points}) > 1:
        raise ValueError("fixed points do not share a family")
    total = sum((contribution(p, d, w) for p in points), Fraction(0))
    if total.denominator != 1 or total < 0:
        raise ValueError("weight or fixed-point data inconsistent")
    return int(total)


@dataclass(frozen=True)
class WeightReport:
    """Diagnostic result of validate_weights."""

    ok: bool
    problems: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "pass"
        return "fail\n" + "\n".join(f"  {p}" for p in self.problems)


def validate_weights(points: Sequence[FixedPoint], w) -> WeightReport:
    """Check the weights are usable: pairwise distinct, no zero tangent weight."""
    ws = _entries(w)
    problems = []
    if len(set(ws)) != len(ws):
        problems.append("weight entries not pairwise distinct")
    else:
        for idx, p in enumerate(points):
            for c in p.tangent:
                if weight_of(c, ws) == 0:
                    where = p.label or str(p.ideal)
                    problems.append(
                        f"zero tangent weight at point {idx} ({where}), character {c}"
                    )
    return WeightReport(ok=not problems, problems=tuple(problems))
