"""Compare the compiled and pure-Python rainbow-tree kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from rainbow3 import kernels
from rainbow3.graph import complete_bipartite, cycle, random_min_degree, three_sun
from rainbow3.rainbow import extend_via_2dominating, is_k_rainbow, rx3_exact
from rainbow3.domination import min_k_dominating_exact


def verify_suite():
    colorings = []
    for seed in range(20):
        g = random_min_degree(12, 3, seed)
        d = min_k_dominating_exact(g, 2, require_connected=True)
        colorings.append((g, extend_via_2dominating(g, d, verify=False)))
    return lambda: [is_k_rainbow(g, c).ok for g, c in colorings]


def exact_suite():
    graphs = [cycle(7), three_sun(), complete_bipartite(3, 3), complete_bipartite(3, 4)]
    return lambda: [rx3_exact(g).value for g in graphs]


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available()
    print(f"backends: {', '.join(backends)}")
    for name, make in (("verify 20 extension colorings (n=12)", verify_suite),
                       ("rx3_exact C7, 3-sun, K33, K34", exact_suite)):
        fn = make()
        times = {}
        results = {}
        for b in backends:
            with kernels.backend(b):
                times[b], results[b] = timed(fn, args.repeat)
        assert len({repr(r) for r in results.values()}) == 1, "backends disagree"
        row = "  ".join(f"{b}={times[b] * 1000:9.1f} ms" for b in backends)
        speed = f"  speedup x{times['python'] / times['cython']:.1f}" if "cython" in times else ""
        print(f"{name:<40} {row}{speed}")


if __name__ == "__main__":
    main()
