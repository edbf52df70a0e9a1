import math
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bott_enum import _core_py, backend
from bott_enum.charalg import monomial_exponents

compiled = pytest.importorskip("bott_enum._core") if backend.BACKEND == "c" else None


def naive_slice(gens, nvars, d):
    out = []
    for e in monomial_exponents(nvars - 1, d):
        if any(all(a >= b for a, b in zip(e, g)) for g in gens):
            out.append(e)
    return out


def naive_esym(values, k):
    coeffs = [1]
    for v in values:
        coeffs = [a + v * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs[k] if k < len(coeffs) else 0


gens_strategy = st.lists(
    st.tuples(*([st.integers(0, 3)] * 4)).filter(any),
    max_size=5,
).map(tuple)

weights_strategy = st.tuples(*([st.integers(-50, 50)] * 4))


@given(gens_strategy, st.integers(0, 7))
def test_pure_slice_count_matches_naive(gens, d):
    assert _core_py.slice_count(gens, 4, d) == len(naive_slice(gens, 4, d))


@given(gens_strategy, st.integers(0, 7), weights_strategy, st.integers(0, 5))
def test_pure_complement_esym_matches_naive(gens, d, weights, k):
    count, ek = _core_py.complement_esym(gens, 4, d, weights, k)
    inside = naive_slice(gens, 4, d)
    assert count == math.comb(d + 3, 3) - len(inside)
    outside = [
        sum(a * w for a, w in zip(e, weights))
        for e in monomial_exponents(3, d)
        if not any(all(a >= b for a, b in zip(e, g)) for g in gens)
    ]
    assert ek == naive_esym(outside, k)


@pytest.mark.skipif(backend.BACKEND != "c", reason="compiled kernel unavailable")
class TestCompiledAgreesWithPure:
    @given(gens_strategy, st.integers(0, 8))
    def test_slice_count(self, gens, d):
        assert compiled.slice_count(gens, 4, d) == _core_py.slice_count(gens, 4, d)

    @settings(max_examples=200)
    @given(gens_strategy, st.integers(0, 8), weights_strategy, st.integers(0, 6))
    def test_complement_esym(self, gens, d, weights, k):
        assert compiled.complement_esym(gens, 4, d, weights, k) == _core_py.complement_esym(
            gens, 4, d, weights, k
        )

    def test_overflow_rejected(self):
        with pytest.raises(OverflowError):
            compiled.complement_esym(((1, 1),), 2, 4, (1 << 61, 3), 2)


def test_backend_routes_huge_weights():
    # values past the int64 guard must still come out exact
    w = (1 << 70, 3, 5, 7)
    got = backend.complement_esym(((2, 0, 0, 0),), 4, 2, w, 1)
    want = _core_py.complement_esym(((2, 0, 0, 0),), 4, 2, w, 1)
    assert got == want
    assert got[1] > 1 << 70


def test_count_plus_slice_is_total():
    gens = ((1, 1, 0, 0), (0, 0, 2, 1))
    for d in range(6):
        count, _ = backend.complement_esym(gens, 4, d, (4, 11, 17, 32), 0)
        assert count + backend.slice_count(gens, 4, d) == math.comb(d + 3, 3)


def test_validation_errors():
    with pytest.raises(ValueError, match="negative degree"):
        backend.slice_count(((1, 0),), 2, -1)
    with pytest.raises(ValueError, match="arity"):
        backend.slice_count(((1, 0, 0),), 2, 3)
    with pytest.raises(ValueError, match="negative exponent"):
        backend.slice_count(((-1, 0),), 2, 3)
    with pytest.raises(ValueError, match="arity"):
        backend.complement_esym(((1, 0),), 2, 3, (1, 2, 3), 1)


def _spawn_backend(value):
    env = dict(os.environ, BOTT_ENUM_BACKEND=value)
    return subprocess.run(
        [sys.executable, "-c", "from bott_enum import backend; print(backend.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )


def test_backend_env_override():
    forced = _spawn_backend("py")
    assert forced.returncode == 0
    assert forced.stdout.strip() == "py"
    bad = _spawn_backend("fortran")
    assert bad.returncode != 0
    assert "BOTT_ENUM_BACKEND" in bad.stderr
