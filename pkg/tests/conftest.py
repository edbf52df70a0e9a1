"""Shared test helpers."""

import re

from bott_enum.charalg import LaurentMonomial, VirtualRep

_XTOKEN = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _accumulate(part: str, exps: list[int], sign: int) -> int:
    """Fold the factors of one side of a fraction into exps; return the coefficient."""
    coeff = 1
    for token in part.strip("()").split("*"):
        if not token:
            continue
        if token.isdigit():
            coeff *= int(token)
            continue
        m = _XTOKEN.match(token)
        if m is None:
            raise ValueError(f"cannot parse factor {token!r}")
        exps[int(m.group(1))] += sign * int(m.group(2) or 1)
    return coeff


def rep(text: str, ambient: int) -> VirtualRep:
    """Parse a displayed sum of Laurent monomials into a VirtualRep.

    Accepts the notation used throughout the tests, e.g.
    ``"2*x0^2*x1/(x2*x3) + 1 - x3/x0"``.
    """
    s = text.replace(" ", "")
    if not s.startswith(("+", "-")):
        s = "+" + s
    terms: dict[LaurentMonomial, int] = {}
    for sign_ch, term in re.findall(r"([+-])([^+-]+)", s):
        sign = 1 if sign_ch == "+" else -1
        num, _, den = term.partition("/")
        exps = [0] * (ambient + 1)
        coeff = _accumulate(num, exps, 1)
        if den:
            dcoeff = _accumulate(den, exps, -1)
            if dcoeff != 1:
                raise ValueError("integer denominators not supported")
        c = LaurentMonomial(exps)
        terms[c] = terms.get(c, 0) + sign * coeff
    return VirtualRep(terms, ambient)


def mono(text: str, ambient: int) -> LaurentMonomial:
    """Parse a single monomial."""
    r = rep(text, ambient)
    ((c, m),) = r.items()
    assert m == 1
    return c
