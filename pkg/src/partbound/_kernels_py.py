"""Pure-Python (numpy-vectorised) twin of the compiled kernels in _kernels.pyx."""
from __future__ import annotations

from math import gcd

import numpy as np

BACKEND = "python"


def sparsest_cut_scan(
    n: int, adj: list[int], sess_u: list[int], sess_v: list[int]
) -> tuple[int, int, list[int]]:
    if n < 2 or n > 40:
        raise ValueError("sparsest_cut_scan supports 2..40 nodes")
    total = 1 << (n - 1)
    best_num, best_den = 0, 0
    ties: list[int] = []
    chunk = 1 << 16
    for start in range(1, total, chunk):
        sides = np.arange(start, min(start + chunk, total), dtype=np.int64) << 1
        sep = np.zeros(len(sides), dtype=np.int64)
        for u, v in zip(sess_u, sess_v):
            sep += ((sides >> u) ^ (sides >> v)) & 1
        cross = np.zeros(len(sides), dtype=np.int64)
        for u in range(n):
            for v in range(u + 1, n):
                if adj[u] >> v & 1:
                    cross += ((sides >> u) ^ (sides >> v)) & 1
        keep = sep > 0
        if not keep.any():
            continue
        sides, sep, cross = sides[keep], sep[keep], cross[keep]
        # exact minimum: compare cross/sep by cross-multiplication
        pairs = set(zip(cross.tolist(), sep.tolist()))
        num, den = next(iter(pairs))
        for c, s in pairs:
            if c * den < num * s:
                num, den = c, s
        if best_den:
            if num * best_den > best_num * den:
                continue
            if num * best_den < best_num * den:
                ties = []
        best_num, best_den = num, den
        hit = cross * best_den == sep * best_num
        ties.extend(int(x) for x in sides[hit])
    if best_den:
        g = gcd(best_num, best_den)
        return best_num // g, best_den // g, ties
    return 0, 0, ties


def min_crossing_path(
    n: int, adj: list[int], weight: list[int], s: int, t: int
) -> int:
    best = n

    def dfs(x: int, visited: int, cur: int) -> None:
        nonlocal best
        if cur >= best:
            return
        if x == t:
            best = cur
            return
        nb = adj[x] & ~visited
        while nb:
            low = nb & -nb
            y = low.bit_length() - 1
            nb ^= low
            c = cur + (1 if weight[x * n + y] else 0)
            if c < best:
                dfs(y, visited | low, c)

    dfs(s, 1 << s, 0)
    return -1 if best >= n else best
