"""Time the numba kernels against their numpy twins.

Usage::

    python benchmarks/bench_kernels.py [--repeat 5]

Both paths run in one process by flipping the backend switch, after a warm-up
call so numba compilation is not counted. Each kernel's outputs are checked for
equality before timing.
"""
import argparse
import time

import numpy as np
from scipy import ndimage

from avgrade import _accel, kernels
from avgrade.synthgen import SceneSpec, generate_scene


def _vessel_mask():
    avmap, _ = generate_scene(SceneSpec(seed=0))
    return avmap.vessel_mask


def _polyline(rng):
    t = np.linspace(0, 1, 400)
    xs = 20 + 470 * t
    ys = 256 + 120 * np.sin(6 * t) + rng.normal(0, 0.5, t.size)
    return xs, ys, np.full(t.size, 3.0), (512, 512)


def _conv_input(rng):
    xp = rng.standard_normal((32, 16, 34, 34)).astype(np.float32)
    return xp, 3, 1, 32, 32


def cases(rng):
    mask = _vessel_mask()
    blobs = ndimage.binary_dilation(rng.random((256, 256)) > 0.97, iterations=4)
    poly = _polyline(rng)
    xp, k, s, ho, wo = _conv_input(rng)
    cols = kernels.im2col(xp, k, s, ho, wo)
    n, c, hp, wp = xp.shape
    return {
        "thin (512x512 vessel map)": lambda: kernels.thin(mask),
        "thin (256x256 blobs)": lambda: kernels.thin(blobs),
        "raster_polyline (400 pts)": lambda: kernels.raster_polyline(*poly),
        "im2col (32x16x34x34, k=3)": lambda: kernels.im2col(xp, k, s, ho, wo),
        "col2im (32x16x34x34, k=3)": lambda: kernels.col2im(cols, n, c, hp, wp, k, s, ho, wo),
    }


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.allclose(a, b, rtol=1e-5, atol=1e-5)


def best_of(fn, repeat):
    fn()  # warm-up (and JIT compile)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not _accel.HAS_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(0)
    table = cases(rng)
    old = _accel._DISABLED
    print(f"{'kernel':32s} {'numba ms':>10s} {'numpy ms':>10s} {'speed-up':>9s}")
    try:
        for name, fn in table.items():
            _accel._DISABLED = False
            fast_out, fast = fn(), best_of(fn, args.repeat)
            _accel._DISABLED = True
            slow_out, slow = fn(), best_of(fn, args.repeat)
            assert _same(fast_out, slow_out), f"{name}: backends disagree"
            print(f"{name:32s} {fast * 1e3:10.2f} {slow * 1e3:10.2f} {slow / fast:8.1f}x")
    finally:
        _accel._DISABLED = old


if __name__ == "__main__":
    main()
