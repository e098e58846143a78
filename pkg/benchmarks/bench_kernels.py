#!/usr/bin/env python3
"""Benchmark the numba kernels against their numpy fallbacks.

Both backends are imported directly (the HGMD_NUMBA env flag only picks the
default dispatch), so one process compares them side by side on a Cora-sized
synthetic workload.

Usage: python benchmarks/bench_kernels.py [--nodes 2708] [--degree 4]
       [--classes 7] [--hidden 256] [--repeat 20]
"""

import argparse
import time

import numpy as np

from hgmd import kernels
from hgmd.graph import gen_synthetic_sbm, normalize_adjacency
from hgmd.tensor import log_clamped, softmax_temp

PAIRS = [
    ("spmm", "spmm_numba", "spmm_numpy"),
    ("csr_matmul", "csr_matmul_numba", "csr_matmul_numpy"),
    ("csr_t_matmul", "csr_t_matmul_numba", "csr_t_matmul_numpy"),
    ("edge_probs", "edge_probs_numba", "edge_probs_numpy"),
    ("weight_loss_grad", "weight_loss_grad_numba", "weight_loss_grad_numpy"),
    ("mixup_loss_grad", "mixup_loss_grad_numba", "mixup_loss_grad_numpy"),
]


def timeit(fn, args, repeat):
    fn(*args)  # warm up (JIT compile / cache load)
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - t0) / repeat


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nodes", type=int, default=2708)
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--classes", type=int, default=7)
    ap.add_argument("--hidden", type=int, default=256)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()

    if not hasattr(kernels, "spmm_numba"):
        raise SystemExit("numba backend unavailable (HGMD_NUMBA=0 or numba missing); "
                         "benchmark needs both implementations")

    blocks = 4
    npb = max(2, args.nodes // blocks)
    p_in = min(1.0, args.degree / npb)
    ds = gen_synthetic_sbm(blocks, npb, p_in, p_in / 10, 8, seed=0)
    g = ds.graph
    adj = normalize_adjacency(g)
    n, e, c = g.num_nodes, g.num_edges, args.classes
    rng = np.random.default_rng(0)
    print(f"graph: {n} nodes, {e} directed edges; C={c}, F={args.hidden}, "
          f"repeat={args.repeat}")

    x = rng.normal(size=(n, args.hidden))
    z = rng.normal(size=(n, c))
    h = rng.normal(size=(n, c))
    pt = softmax_temp(z, 1.0)
    logpt = log_clamped(pt)
    q = softmax_temp(h, 1.0)
    logq = log_clamped(q)
    t_ent = -np.sum(pt * logpt, axis=1)
    s_ent = -np.sum(q * logq, axis=1)
    norms = np.sqrt(np.einsum("nc,nc->n", z, z))
    p = rng.random(e)
    mask = rng.random(e) < 0.7
    lam = rng.random(e)

    arg_map = {
        "spmm": (adj.offsets, adj.targets, adj.weights, x),
        "csr_matmul": (g.offsets, g.targets, rng.random(e), x),
        "csr_t_matmul": (g.offsets, g.targets, rng.random(e), n, x),
        "edge_probs": (g.offsets, g.targets, z, norms, t_ent, s_ent, 5.0, 1e-6),
        "weight_loss_grad": (g.offsets, g.targets, mask, p, pt, logpt, q, logq, 1.0, False),
        "mixup_loss_grad": (g.offsets, g.targets, mask, p, lam, z, pt, logpt, q, logq, 1.0),
    }

    print(f"{'kernel':<18} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, nb, npy in PAIRS:
        t_nb = timeit(getattr(kernels, nb), arg_map[name], args.repeat)
        t_np = timeit(getattr(kernels, npy), arg_map[name], args.repeat)
        print(f"{name:<18} {t_nb * 1e3:9.3f}ms {t_np * 1e3:9.3f}ms {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
