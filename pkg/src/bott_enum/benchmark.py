"""Time the compiled kernel against the pure Python one.

Run as ``python3 -m bott_enum.benchmark``.  Each workload is one
complement-count/elementary-symmetric evaluation on a real fixed-point ideal;
results are checked equal before timing is reported.
"""

from __future__ import annotations

import argparse
import time

from . import _core_py
from .families import family_spec

try:
    from . import _core
except ImportError:
    _core = None


def _workloads():
    for tag, d in (
        ("twisted_cubic", 12),
        ("twisted_cubic", 24),
        ("ruled_cubic", 16),
        ("elliptic_quartic", 20),
        ("segre", 8),
    ):
        spec = family_spec(tag)
        p = spec.points()[0]
        gens = p.ideal.exponent_rows()
        w = tuple(spec.default_weights)
        yield f"{tag} d={d} e_{spec.dim_w}", (gens, spec.n + 1, d, w, spec.dim_w)


def _best(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="python3 -m bott_enum.benchmark")
    parser.add_argument("--repeat", type=int, default=3)
    opts = parser.parse_args(argv)
    if _core is None:
        print("compiled kernel not built; only the pure kernel is available")
        return 0
    print(f"{'workload':<34}{'pure':>12}{'compiled':>12}{'speedup':>10}")
    for name, args in _workloads():
        want = _core_py.complement_esym(*args)
        got = _core.complement_esym(*args)
        if want != got:
            raise AssertionError(f"kernel mismatch on {name}: {want} != {got}")
        tp = _best(_core_py.complement_esym, args, opts.repeat)
        tc = _best(_core.complement_esym, args, opts.repeat)
        print(f"{name:<34}{tp:>10.4f} s{tc:>10.4f} s{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
