"""Compare the compiled kernels with the Python fallback on generated networks.

    python benchmarks/bench_kernels.py --repeat 3
"""
import argparse
import random
import timeit

from partbound import kernels
from partbound.npartite import gen_type2
from partbound.properties import fig3_network


def masks(net):
    idx = net.index
    adj = [0] * len(net.nodes)
    for u, v in net.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    return idx, adj


def cases(seed):
    rng = random.Random(seed)
    out = []
    for label, net in [("fig3", fig3_network()), ("type2 3,3,4", gen_type2([3, 3, 4])),
                       ("type2 4,4,4,4", gen_type2([4, 4, 4, 4]))]:
        idx, adj = masks(net)
        n = len(net.nodes)
        su = [idx[s.source] for s in net.sessions]
        sv = [idx[s.sink] for s in net.sessions]
        half = [rng.randint(0, 1) for _ in range(n * n)]
        weight = [half[min(a, b) * n + max(a, b)] for a in range(n) for b in range(n)]
        out.append((label, n, adj, su, sv, weight))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    mods = kernels.backends()
    if "cython" not in mods:
        print("compiled kernels not built; timing the Python fallback only")
    print(f"{'case':<16}{'kernel':<14}" + "".join(f"{name:>12}" for name in mods) + f"{'speedup':>10}")
    for label, n, adj, su, sv, weight in cases(args.seed):
        jobs = {
            "cut scan": lambda m: m.sparsest_cut_scan(n, adj, su, sv),
            "min crossing": lambda m: m.min_crossing_path(n, adj, weight, 0, n - 1),
        }
        for kname, job in jobs.items():
            times = {name: min(timeit.repeat(lambda: job(m), number=1, repeat=args.repeat))
                     for name, m in mods.items()}
            speed = f"{times['python'] / times['cython']:>9.1f}x" if "cython" in times else ""
            print(f"{label:<16}{kname:<14}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times.values()) + speed)


if __name__ == "__main__":
    main()
