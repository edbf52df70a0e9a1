"""Fixed-point generation for the six families of singular loci.

Each generator returns the complete list of torus-fixed points of the
family's parameter space, every one carrying the monomial ideal that cuts
out its member scheme, the tangent representation at the point, and the
flatness threshold below which degree slices stop matching the family's
Hilbert polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from .charalg import (
    LaurentMonomial,
    VirtualRep,
    dual,
    monomial_exponents,
    sym_power,
    tensor,
    trivial,
)
from .localize import FixedPoint, WeightVector, blow_up, default_weights, tgrass
from .monideal import MonomialIdeal, degree_slice, hilbert_polynomial, square
from .polyfit import RatPoly

TAGS = (
    "linear",
    "plane_curve",
    "twisted_cubic",
    "ruled_cubic",
    "segre",
    "elliptic_quartic",
)

_DETNET_AMBIENT = {"twisted_cubic": 3, "ruled_cubic": 4, "segre": 5}


def _mono(n: int, *powers: tuple[int, int]) -> LaurentMonomial:
    exps = [0] * (n + 1)
    for i, e in powers:
        exps[i] += e
    return LaurentMonomial(exps)


def _var(n: int, i: int) -> LaurentMonomial:
    return _mono(n, (i, 1))


def _line(chars: Iterable[LaurentMonomial], n: int) -> VirtualRep:
    return VirtualRep.from_chars(chars, n)


def _gcd(a: LaurentMonomial, b: LaurentMonomial) -> LaurentMonomial:
    return LaurentMonomial(tuple(min(x, y) for x, y in zip(a.exponents, b.exponents)))


@dataclass(frozen=True)
class DetNetType:
    """Character patterns of one isomorphism class of determinantal nets.

    Rows are exponent patterns over four index placeholders; a repeated
    syzygy row encodes a multiplicity-two character.
    """

    type_id: int
    generator_pattern: tuple[tuple[int, int, int, int], ...]
    syzygy_pattern: tuple[tuple[int, int, int, int], ...]

    def generators(self, n: int) -> VirtualRep:
        return VirtualRep.from_chars(
            (LaurentMonomial(row + (0,) * (n - 3)) for row in self.generator_pattern), n
        )

    def syzygies(self, n: int) -> VirtualRep:
        return VirtualRep.from_chars(
            (LaurentMonomial(row + (0,) * (n - 3)) for row in self.syzygy_pattern), n
        )


NET_TYPES: tuple[DetNetType, ...] = (
    DetNetType(1, ((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)), ((1, 1, 1, 0), (0, 1, 1, 1))),
    DetNetType(2, ((1, 1, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0)), ((1, 1, 1, 0), (1, 1, 1, 0))),
    DetNetType(3, ((1, 1, 0, 0), (0, 0, 2, 0), (1, 0, 1, 0)), ((1, 1, 1, 0), (1, 0, 2, 0))),
    DetNetType(4, ((2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0)), ((2, 1, 0, 0), (1, 2, 0, 0))),
    DetNetType(5, ((2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0)), ((2, 1, 0, 0), (2, 0, 1, 0))),
)


def net_tangent(generators: VirtualRep, syzygies: VirtualRep, n: int) -> VirtualRep:
    """Tangent representation of the determinantal-net space at a monomial net
    with generator characters E and syzygy characters F:

        dual(F) (x) E (x) S(1) - End(E) - End(F) + 1.
    """
    hom = tensor(tensor(dual(syzygies), generators), sym_power(n, 1))
    return (
        hom
        - tensor(generators, dual(generators))
        - tensor(syzygies, dual(syzygies))
        + trivial(n)
    )


def _permute_char(c: LaurentMonomial, perm: tuple[int, ...]) -> LaurentMonomial:
    exps = [0] * len(perm)
    for i, e in enumerate(c.exponents):
        exps[perm[i]] = e
    return LaurentMonomial(exps)


def _permute_point(p: FixedPoint, perm: tuple[int, ...]) -> FixedPoint:
    ideal_ = MonomialIdeal((_permute_char(g, perm) for g in p.ideal.generators), p.n)
    tangent = VirtualRep(
        {_permute_char(c, perm): m for c, m in p.tangent.items()}, p.n
    )
    return FixedPoint(
        p.family, ideal_, tangent, p.dim_w, p.n, label=p.label, d_min=p.d_min
    )


def permutation_closure(points: Iterable[FixedPoint]) -> list[FixedPoint]:
    """Close a point list under all coordinate permutations, deduplicating by
    the (canonical) ideal. Distinct routes to one ideal must agree on tangent
    and label; anything else means the generation pipeline is broken."""
    seen: dict[MonomialIdeal, FixedPoint] = {}
    for p in points:
        for perm in itertools.permutations(range(p.n + 1)):
            q = _permute_point(p, perm)
            prev = seen.setdefault(q.ideal, q)
            if prev is not q and (prev.tangent != q.tangent or prev.label != q.label):
                raise AssertionError(
                    "coordinate permutation produced conflicting fixed-point data"
                )
    return sorted(seen.values(), key=lambda f: (f.label, f.ideal.exponent_rows()))


def gen_linear(k: int, n: int) -> list[FixedPoint]:
    """Fixed points for k-planes in P^n: one per coordinate (n-k-1)-plane."""
    if not 0 <= k < n - 1:
        raise ValueError("invalid linear-family parameters: need 0 <= k < n-1")
    s1 = sym_power(n, 1)
    dim_w = (k + 1) * (n - k)
    points = []
    for subset in itertools.combinations(range(n + 1), n - k):
        gens = [_var(n, i) for i in subset]
        points.append(
            FixedPoint(
                "linear",
                square(MonomialIdeal(gens, n)),
                tgrass(s1, _line(gens, n)),
                dim_w,
                n,
                label="<" + ",".join(f"x{i}" for i in subset) + ">",
                d_min=2,
            )
        )
    return points


def gen_plane_curves(m: int) -> list[FixedPoint]:
    """Fixed points for degree-m plane curves in P^3: a coordinate plane x_i
    together with a degree-m monomial in the other three variables."""
    if m < 2:
        raise ValueError("plane-curve degree must be at least 2")
    s1 = sym_power(3, 1)
    dim_w = 2 + comb(m + 2, 2)
    points = []
    for i in range(4):
        xi = _var(3, i)
        others = tuple(j for j in range(4) if j != i)
        forms = []
        for exps in monomial_exponents(2, m):
            row = [0, 0, 0, 0]
            for j, e in zip(others, exps):
                row[j] = e
            forms.append(LaurentMonomial(row))
        plane_forms = VirtualRep.from_chars(forms, 3)
        for c in forms:
            tangent = tgrass(s1, _line([xi], 3)) + tgrass(plane_forms, _line([c], 3))
            points.append(
                FixedPoint(
                    "plane_curve",
                    square(MonomialIdeal([xi, c], 3)),
                    tangent,
                    dim_w,
                    3,
                    label=f"<x{i},{c}>",
                    d_min=2 * m,
                )
            )
    return points


def _type5_label(c: LaurentMonomial, n: int) -> str:
    if n != 3:
        return "type-5"
    a, b, e = c.exponents[1], c.exponents[2], c.exponents[3]
    if (a, b, e) == (1, 1, 1):
        return "type-5.1"
    if e == 0 and {a, b} == {1, 2}:
        return "type-5.2"
    if e == 1 and {a, b} == {0, 2}:
        return "type-5.3"
    if e == 0 and {a, b} == {0, 3}:
        return "type-5.4"
    raise AssertionError(f"unclassified exceptional cubic {c}")


def gen_detnet(n: int) -> list[FixedPoint]:
    """Fixed points for determinantal nets of quadrics (twisted cubics in P^3,
    ruled cubic surfaces in P^4, Segre threefolds in P^5).

    One representative per net type; types 4 and 5 sit on blow-up centers and
    are replaced by the fixed points of their exceptional fibers; the closure
    under coordinate permutations then yields the full list.
    """
    if n not in (3, 4, 5):
        raise ValueError("determinantal nets require ambient P^3, P^4 or P^5")
    tag = {3: "twisted_cubic", 4: "ruled_cubic", 5: "segre"}[n]
    dim_w = 6 * n - 6
    s1 = sym_power(n, 1)
    x0, x1, x2 = _var(n, 0), _var(n, 1), _var(n, 2)
    points = []
    for net in NET_TYPES:
        e_rep = net.generators(n)
        tangent = net_tangent(e_rep, net.syzygies(n), n)
        quadrics = list(e_rep)
        label = f"type-{net.type_id}"
        if net.type_id <= 3:
            points.append(
                FixedPoint(
                    tag, square(MonomialIdeal(quadrics, n)), tangent, dim_w, n,
                    label=label, d_min=4,
                )
            )
        elif net.type_id == 4:
            # conjugate pair of double points: <x_0,x_1>^4 survives, plus one
            # quartic from the exceptional fiber
            center = tgrass(s1, _line([x0, x1], n))
            quartics = [_mono(n, (0, a), (1, 4 - a)) for a in range(5)]
            for bp in blow_up(tangent, center):
                points.append(
                    FixedPoint(
                        tag,
                        MonomialIdeal(quartics + [bp.new_generator], n),
                        bp.tangent,
                        dim_w,
                        n,
                        label=label,
                        d_min=4,
                    )
                )
        else:
            # net with the fixed plane x_0: flag of a line inside the plane
            center = tgrass(s1, _line([x0], n)) + tgrass(
                sym_power(n, 1) - _line([x0], n), _line([x1, x2], n)
            )
            for bp in blow_up(tangent, center):
                points.append(
                    FixedPoint(
                        tag,
                        square(MonomialIdeal(quadrics + [bp.new_generator], n)),
                        bp.tangent,
                        dim_w,
                        n,
                        label=_type5_label(bp.new_generator, n),
                        d_min=4,
                    )
                )
    return permutation_closure(points)


def gen_elliptic_quartics() -> list[FixedPoint]:
    """Fixed points for elliptic quartic curves in P^3: all 45 monomial
    pencils of quadrics, with the common-factor pencils replaced by the
    cascade of up to three blow-ups over them."""
    s1, s2 = sym_power(3, 1), sym_power(3, 2)
    points: list[FixedPoint] = []

    def final(ideal_: MonomialIdeal, tangent: VirtualRep, label: str) -> None:
        points.append(
            FixedPoint("elliptic_quartic", ideal_, tangent, 16, 3, label=label, d_min=6)
        )

    for q1, q2 in itertools.combinations(list(s2), 2):
        tangent = tgrass(s2, _line([q1, q2], 3))
        shared = _gcd(q1, q2)
        if shared.is_trivial():
            squares = sum(1 for q in (q1, q2) if max(q.exponents) == 2)
            final(square(MonomialIdeal([q1, q2], 3)), tangent,
                  {2: "type-1", 1: "type-2", 0: "type-3"}[squares])
            continue

        # pencil x_i * <line>: the point lies on the first blow-up center,
        # the flag of the line <x_i, x_j> (or <x_j, x_k>) inside the plane x_i
        i = shared.exponents.index(1)
        plane = _line([shared], 3)
        line_chars = [q1 / shared, q2 / shared]
        center = tgrass(s1, plane) + tgrass(s1, _line(line_chars, 3))
        double_line = shared in line_chars
        for bp in blow_up(tangent, center):
            c = bp.new_generator
            if not double_line:
                final(square(MonomialIdeal([q1, q2, c], 3)), bp.tangent, "type-5")
                continue
            xj = next(ch for ch in line_chars if ch != shared)
            j = xj.exponents.index(1)
            if c.exponents[i] > 0:
                # cubic keeps the plane factor: second blow-up, center the
                # configurations (plane, line, conic q in the residual plane)
                q = c / shared
                rest = [r for r in range(4) if r not in (i, j)]
                residual_quadrics = VirtualRep.from_chars(
                    (
                        _mono(3, (rest[0], 2)),
                        _mono(3, (rest[0], 1), (rest[1], 1)),
                        _mono(3, (rest[1], 2)),
                    ),
                    3,
                )
                center2 = (
                    tgrass(s1, plane)
                    + tgrass(s1 - plane, _line([xj], 3))
                    + tgrass(residual_quadrics, _line([q], 3))
                )
                for bp2 in blow_up(bp.tangent, center2):
                    final(
                        square(MonomialIdeal([q1, q2, c, bp2.new_generator], 3)),
                        bp2.tangent,
                        "type-6",
                    )
            elif c.exponents[j] >= 2:
                # cubic is x_j^2 times a line: embedded-point locus, third
                # blow-up contributes one quintic generator (not squared)
                cubics = tensor(_line([xj * xj], 3), s1 - plane)
                center3 = (
                    tgrass(s1, plane)
                    + tgrass(s1 - plane, _line([xj], 3))
                    + tgrass(cubics, _line([c], 3))
                )
                for bp3 in blow_up(bp.tangent, center3):
                    base = square(MonomialIdeal([q1, q2, c], 3))
                    final(
                        MonomialIdeal(
                            list(base.generators) + [bp3.new_generator], 3
                        ),
                        bp3.tangent,
                        "type-7",
                    )
            else:
                final(square(MonomialIdeal([q1, q2, c], 3)), bp.tangent, "type-4")
    return permutation_closure(points)


def fiber(f: FixedPoint, d: int) -> set[LaurentMonomial]:
    """Degree-d piece of the point's ideal: the monomial basis of the fiber of
    the bundle of degree-d forms singular along the member."""
    if d < f.d_min:
        raise ValueError("below flatness/injectivity threshold")
    return degree_slice(f.ideal, d)


@dataclass(frozen=True)
class FamilySpec:
    """Static description of one family: ambient space, dimensions, flatness
    threshold, the Hilbert polynomial shared by all member ideals, default
    weights and interpolation degree bounds."""

    tag: str
    params: tuple[tuple[str, int], ...]
    n: int
    dim_w: int
    dim_member: int
    d_min: int
    hilb: RatPoly
    default_weights: WeightVector

    @property
    def degree_bound_safe(self) -> int:
        return self.n * self.dim_w

    @property
    def degree_bound_conjectural(self) -> int:
        return (self.dim_member + 1) * self.dim_w

    def hypersurface_space_dim(self, d: int) -> int:
        return comb(d + self.n, self.n) - 1

    def points(self) -> tuple[FixedPoint, ...]:
        return _points(self.tag, self.params)


@lru_cache(maxsize=None)
def _points(tag: str, params: tuple[tuple[str, int], ...]) -> tuple[FixedPoint, ...]:
    p = dict(params)
    if tag == "linear":
        return tuple(gen_linear(p["k"], p["n"]))
    if tag == "plane_curve":
        return tuple(gen_plane_curves(p["m"]))
    if tag in _DETNET_AMBIENT:
        return tuple(gen_detnet(_DETNET_AMBIENT[tag]))
    return tuple(gen_elliptic_quartics())


@lru_cache(maxsize=None)
def _spec(tag: str, params: tuple[tuple[str, int], ...]) -> FamilySpec:
    p = dict(params)
    if tag == "linear":
        k, n = p["k"], p["n"]
        if not 0 <= k < n - 1:
            raise ValueError("invalid linear-family parameters: need 0 <= k < n-1")
        member = MonomialIdeal([_var(n, i) for i in range(n - k)], n)
        dim_w, dim_member, d_min, kind = (k + 1) * (n - k), k, 2, "linear"
    elif tag == "plane_curve":
        m, n = p["m"], 3
        if m < 2:
            raise ValueError("plane-curve degree must be at least 2")
        member = MonomialIdeal([_var(3, 0), _mono(3, (1, m))], 3)
        dim_w, dim_member, d_min, kind = 2 + comb(m + 2, 2), 1, 2 * m, "generic"
    elif tag in _DETNET_AMBIENT:
        n = _DETNET_AMBIENT[tag]
        member = MonomialIdeal(list(NET_TYPES[0].generators(n)), n)
        dim_w, dim_member, d_min, kind = 6 * n - 6, n - 2, 4, "generic"
    elif tag == "elliptic_quartic":
        n = 3
        member = MonomialIdeal([_mono(3, (0, 2)), _mono(3, (1, 2))], 3)
        dim_w, dim_member, d_min, kind = 16, 1, 6, "elliptic_quartic"
    else:
        raise ValueError(f"unknown family {tag!r}")
    return FamilySpec(
        tag=tag,
        params=params,
        n=n,
        dim_w=dim_w,
        dim_member=dim_member,
        d_min=d_min,
        hilb=hilbert_polynomial(square(member)),
        default_weights=default_weights(n, kind),
    )


def family_spec(tag: str, **params: int) -> FamilySpec:
    """Build the FamilySpec for a family tag.

    linear takes k and n; plane_curve takes m; the other four take nothing.
    """
    if tag not in TAGS:
        raise ValueError(f"unknown family {tag!r}")
    required = {"linear": {"k", "n"}, "plane_curve": {"m"}}.get(tag, set())
    if set(params) != required:
        wanted = ", ".join(sorted(required)) if required else "no parameters"
        raise ValueError(f"family {tag!r} takes {wanted}")
    return _spec(tag, tuple(sorted(params.items())))
