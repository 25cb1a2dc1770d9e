#!/usr/bin/env python3
"""Timing comparison of the pure-numpy and compiled pair-product kernels.

Runs the hot assemblies at the sizes the paper-scale experiments use:
the 51-mode single-angle products of the toy run, the 21-mode per-node
batch of the polar run, and the 8x8 double-angle batch of the pyramidal
run, plus a short full step loop of the pyramidal model under each
backend.  Usage: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from ringlab.kernels import pure

try:
    from ringlab.kernels import _fast
except ImportError:
    _fast = None


def _time(fn, *args, repeat=200):
    fn(*args)  # warm up
    start = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - start) / repeat


def bench_pair_products():
    rng = np.random.RandomState(0)
    cases = [
        ("toy 1D products (1 x 51)", "batch_cc1", rng.randn(1, 51), 50),
        ("polar batch (72 x 21)", "batch_ss1", rng.randn(72, 21), 20),
        ("pyramidal batch (72 x 8 x 8)", "batch_cc2", rng.randn(72, 8, 8), 7),
    ]
    print(f"{'case':34s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label, name, a, n_out in cases:
        a = np.ascontiguousarray(a)
        t_pure = _time(getattr(pure, name), a, a, n_out)
        if _fast is not None:
            t_fast = _time(getattr(_fast, name), a, a, n_out)
            print(f"{label:34s} {t_pure*1e6:8.1f}us {t_fast*1e6:8.1f}us {t_pure/t_fast:7.2f}x")
        else:
            print(f"{label:34s} {t_pure*1e6:8.1f}us {'-':>10s} {'-':>8s}")


def bench_step_loop():
    import importlib
    import os

    results = {}
    for backend in ("python", "compiled") if _fast is not None else ("python",):
        os.environ["RINGLAB_BACKEND"] = backend
        import ringlab.kernels
        import ringlab.model3d

        importlib.reload(ringlab.kernels)
        importlib.reload(ringlab.model3d)
        params = ringlab.model3d.Params3D(
            nu=0.02, omega=4.0, n_modes=7, intervals=73, r_max=10.0,
            dt=1e-4, t_final=0.005, snapshot_every=1000,
        )
        start = time.perf_counter()
        ringlab.model3d.run_3d(params)
        results[backend] = time.perf_counter() - start
    os.environ.pop("RINGLAB_BACKEND", None)
    print()
    print("pyramidal model, 50 explicit steps at paper scale:")
    for backend, seconds in results.items():
        print(f"  {backend:9s} {seconds*1e3:8.1f} ms")


if __name__ == "__main__":
    print("pair-product kernels, mean call time")
    bench_pair_products()
    bench_step_loop()
