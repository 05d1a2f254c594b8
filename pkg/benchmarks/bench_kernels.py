"""Time the compiled kernels against the pure-Python ones on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import statistics
import time

from prismatic import _pykernels
from prismatic.graph import complete_bipartite, petersen_graph, prism, random_gnp


def cases():
    yield "ham prism(K3,7) [none]", "hamilton_cycle", prism(complete_bipartite(3, 7))
    yield "ham prism(Petersen)", "hamilton_cycle", prism(petersen_graph())
    yield "mis gnp(40, 0.3)", "max_independent_set", random_gnp(40, 0.3, 1)
    yield "mis gnp(50, 0.5)", "max_independent_set", random_gnp(50, 0.5, 2)
    yield "tough gnp(16, 0.4)", "toughness_scan", random_gnp(16, 0.4, 3)
    yield "tough gnp(18, 0.5)", "toughness_scan", random_gnp(18, 0.5, 4)


def timed(fn, g, repeat):
    runs = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(g.adj, g.n)
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        from prismatic import _ckernels
    except ImportError:
        print("compiled kernels not built; only the Python backend is available")
        return
    print(f"{'case':28s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn_name, g in cases():
        py_t, py_out = timed(getattr(_pykernels, fn_name), g, args.repeat)
        c_t, c_out = timed(getattr(_ckernels, fn_name), g, args.repeat)
        if fn_name == "hamilton_cycle":
            same = py_out[0] == c_out[0]
        elif fn_name == "max_independent_set":
            same = bin(py_out).count("1") == bin(c_out).count("1")
        else:
            same = py_out[0] * c_out[1] == c_out[0] * py_out[1]
        flag = "" if same else "  MISMATCH"
        print(f"{name:28s} {py_t:10.4f} {c_t:10.4f} {py_t / max(c_t, 1e-9):8.1f}{flag}")


if __name__ == "__main__":
    main()
