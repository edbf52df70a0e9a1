"""Pure-Python enumeration kernels.

Fallback for :mod:`bott_enum._core`.  Same API, same exact results, no
dependencies.  Exponent vectors are packed into single integers with a guard
bit per variable so that a divisibility test is one subtraction and one mask
instead of a componentwise loop.
"""

from __future__ import annotations


def _packing(gens, nvars: int, d: int):
    """Packed generators, guard mask and lane width for degree-d enumeration."""
    live = [g for g in gens if sum(g) <= d]
    lane = max(1, d.bit_length()) + 1
    guards = 0
    for i in range(nvars):
        guards |= 1 << (lane * i + lane - 1)
    packed = []
    for g in live:
        acc = 0
        for i, e in enumerate(g):
            acc |= e << (lane * i)
        packed.append(acc)
    packed.sort()
    return packed, guards, lane


def _validate(gens, nvars: int, d: int):
    if d < 0:
        raise ValueError("negative degree")
    for g in gens:
        if len(g) != nvars:
            raise ValueError("generator arity mismatch")
        if any(e < 0 for e in g):
            raise ValueError("negative exponent present")


def slice_count(gens, nvars: int, d: int) -> int:
    """Number of degree-d monomials in nvars variables divisible by a generator."""
    _validate(gens, nvars, d)
    packed, guards, lane = _packing(gens, nvars, d)
    if not packed:
        return 0
    # colex walk over compositions of d; exponent vector kept packed in x
    x = guards + d
    count = 0
    c = [0] * (nvars + 1)
    c[0] = d
    c[nvars] = 1  # sentinel
    while True:
        for g in packed:
            if (x - g) & guards == guards:
                count += 1
                break
        j = 0
        while c[j] == 0:
            j += 1
        if j >= nvars - 1:
            return count
        v = c[j]
        c[j] = 0
        c[j + 1] += 1
        c[0] = v - 1
        x += (v - 1) - (v << lane * j) + (1 << lane * (j + 1))


def complement_esym(gens, nvars: int, d: int, weights, k: int):
    """Count degree-d monomials outside the ideal and return (count, e_k of their weights).

    The weight of a monomial is the dot product of its exponent vector with
    `weights`.  e_k is accumulated exactly via the truncated product of
    (1 + w*t) over the complement, so the result is an arbitrary-precision
    integer.
    """
    _validate(gens, nvars, d)
    if len(weights) != nvars:
        raise ValueError("weight arity mismatch")
    if k < 0:
        raise ValueError("negative symmetric-function index")
    packed, guards, lane = _packing(gens, nvars, d)
    coef = [0] * (k + 1)
    coef[0] = 1
    count = 0
    w = tuple(weights)
    x = guards + d
    c = [0] * (nvars + 1)
    c[0] = d
    c[nvars] = 1  # sentinel
    wgt = d * w[0]
    while True:
        hit = False
        for g in packed:
            if (x - g) & guards == guards:
                hit = True
                break
        if not hit:
            count += 1
            top = count if count < k else k
            for j in range(top, 0, -1):
                coef[j] += wgt * coef[j - 1]
        j = 0
        while c[j] == 0:
            j += 1
        if j >= nvars - 1:
            return count, coef[k]
        v = c[j]
        c[j] = 0
        c[j + 1] += 1
        c[0] = v - 1
        x += (v - 1) - (v << lane * j) + (1 << lane * (j + 1))
        wgt += (v - 1) * w[0] - v * w[j] + w[j + 1]
