"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import timeit

from turanlab import kernels
from turanlab.graph import new_graph
from turanlab.multipartite import path_embeddings_multipartite
from turanlab.presets import complete, cycle, path
from turanlab.search import embedding_count
from turanlab.turan import turan_graph


def workloads():
    rng = random.Random(1)
    # a fixed random host on 16 vertices
    G16 = new_graph(16, [(u, v) for u in range(16) for v in range(u + 1, 16) if rng.random() < 0.5])
    return [
        ("P6 in T3(12)", lambda b: embedding_count(path(6), turan_graph(12, 3), backend=b)),
        ("C5 in G(16, 1/2)", lambda b: embedding_count(cycle(5), G16, backend=b)),
        ("K4 in G(16, 1/2)", lambda b: embedding_count(complete(4), G16, backend=b)),
        ("P8 in K(4,4,4)", lambda b: path_embeddings_multipartite([4, 4, 4], 8, backend=b)),
        ("P6 in K(8,8,8,8)", lambda b: path_embeddings_multipartite([8, 8, 8, 8], 6, backend=b)),
    ]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'workload':<20}" + "".join(f"{b + ' ms':>14}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, fn in workloads():
        results = {b: fn(b) for b in backends}
        assert len(set(results.values())) == 1, f"backends disagree on {name}: {results}"
        times = {b: min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat)) * 1e3 for b in backends}
        row = f"{name:<20}" + "".join(f"{times[b]:>14.2f}" for b in backends)
        if len(backends) > 1:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
