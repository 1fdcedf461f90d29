"""Independent brute-force references.  Nothing here imports the search code it checks."""
from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from itertools import combinations

from partbound.graph import Network


def adjacency(net: Network) -> dict[str, set[str]]:
    adj = {u: set() for u in net.nodes}
    for u, v in net.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def opt_by_partitions(net: Network) -> int:
    """Max number of co-located sessions over all partitions into independent sets."""
    adj = adjacency(net)
    best = 0
    for parts in set_partitions(list(net.nodes)):
        if any(adj[u] & set(p) for p in parts for u in p):
            continue
        where = {u: i for i, p in enumerate(parts) for u in p}
        best = max(best, sum(where[s.source] == where[s.sink] for s in net.sessions))
    return best


def count_simple_paths(net: Network, u: str, v: str) -> int:
    adj = adjacency(net)
    count = 0
    stack = [(u, {u})]
    while stack:
        x, seen = stack.pop()
        for w in adj[x]:
            if w == v:
                count += 1
            elif w not in seen:
                stack.append((w, seen | {w}))
    return count


def min_crossing_01bfs(net: Network, u: str, v: str, F) -> int | None:
    """0-1 BFS: a minimum-weight walk with non-negative weights can be taken simple."""
    F = {tuple(sorted(e)) for e in F}
    adj = adjacency(net)
    dist = {u: 0}
    dq = deque([u])
    while dq:
        x = dq.popleft()
        for w in adj[x]:
            c = dist[x] + (tuple(sorted((x, w))) in F)
            if c < dist.get(w, 1 << 30):
                dist[w] = c
                (dq.appendleft if c == dist[x] else dq.append)(w)
    return dist.get(v)


def sparsest_by_subsets(net: Network) -> Fraction | None:
    best = None
    nodes = list(net.nodes)
    for k in range(1, len(nodes)):
        for side in combinations(nodes, k):
            side = set(side)
            sep = sum((s.source in side) != (s.sink in side) for s in net.sessions)
            if not sep:
                continue
            cross = sum((a in side) != (b in side) for a, b in net.edges)
            r = Fraction(cross, sep)
            best = r if best is None or r < best else best
    return best


def mis_by_subsets(net: Network) -> int:
    adj = adjacency(net)
    nodes = list(net.nodes)
    for k in range(len(nodes), 0, -1):
        for sub in combinations(nodes, k):
            s = set(sub)
            if not any(adj[u] & s for u in s):
                return k
    return 0


def random_network(rng: random.Random, max_nodes: int = 8, max_sessions: int = 6) -> Network:
    n = rng.randint(2, max_nodes)
    nodes = [f"n{i}" for i in range(n)]
    p = rng.uniform(0.15, 0.7)
    edges = [(a, b) for a, b in combinations(nodes, 2) if rng.random() < p]
    k = rng.randint(1, max_sessions)
    sessions = []
    for i in range(1, k + 1):
        s, t = rng.sample(nodes, 2)
        sessions.append((i, s, t))
    return Network.build(nodes, edges, sessions)


def random_graph(rng: random.Random, max_nodes: int = 9) -> Network:
    n = rng.randint(1, max_nodes)
    nodes = [f"g{i}" for i in range(n)]
    p = rng.uniform(0.1, 0.8)
    return Network.build(nodes, [(a, b) for a, b in combinations(nodes, 2) if rng.random() < p])
