"""Partition bound, the co-location parameter opt(I), and the sparsest cut.

All values are exact.  ``opt_exact`` is the authoritative co-location search;
``opt_recursion`` evaluates the literal conflict-set recursion and is kept
only so the two can be compared.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import kernels
from .graph import CutSet, Network, NetworkError, cut_set, neighbors


@dataclass(frozen=True)
class PartitionSolution:
    parts: tuple[frozenset[str], ...]
    realized: frozenset[int]


@dataclass(frozen=True)
class BoundReport:
    edge_count: int
    session_count: int
    opt_size: int
    bound: Fraction

    def __str__(self) -> str:
        b = self.bound
        return (
            f"|E|={self.edge_count} |I|={self.session_count} "
            f"opt={self.opt_size} bound={b.numerator}/{b.denominator}"
        )


def restrict_sessions(net: Network) -> frozenset[int]:
    """Sessions whose endpoints are not adjacent; only these can share a part."""
    return frozenset(s.id for s in net.sessions if not net.adjacent(s.source, s.sink))


def conf(net: Network, k: int) -> frozenset[int]:
    # Evaluated verbatim: both clauses use the neighbourhood of s(k) only.
    hat = restrict_sessions(net)
    if k not in hat:
        raise NetworkError(f"session {k} is not in the restricted session set")
    sk = net.session(k)
    ends = {sk.source, sk.sink}
    ne = neighbors(net, sk.source)
    out = set()
    for l in hat:
        sl = net.session(l)
        if (sl.sink in ends and sl.source in ne) or (sl.source in ends and sl.sink in ne):
            out.add(l)
    return frozenset(out)


def opt_recursion(net: Network) -> int:
    hat = sorted(restrict_sessions(net))
    pos = {sid: i for i, sid in enumerate(hat)}
    conflict = [0] * len(hat)
    for sid in hat:
        for l in conf(net, sid):
            conflict[pos[sid]] |= 1 << pos[l]

    @lru_cache(maxsize=None)
    def rec(remaining: int) -> int:
        if not remaining:
            return 0
        i = (remaining & -remaining).bit_length() - 1
        skip = rec(remaining & ~(1 << i))
        take = 1 + rec(remaining & ~(1 << i) & ~conflict[i])
        return max(skip, take)

    return rec((1 << len(hat)) - 1)


class _Merger:
    """Bitmask state for merging session endpoints into independent classes."""

    def __init__(self, net: Network):
        self.index = net.index
        self.adj = [0] * len(net.nodes)
        for u, v in net.edges:
            a, b = self.index[u], self.index[v]
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a

    def start(self) -> tuple[int, ...]:
        return tuple(1 << i for i in range(len(self.adj)))

    def neighbourhood(self, cls: int) -> int:
        nb = 0
        while cls:
            low = cls & -cls
            nb |= self.adj[low.bit_length() - 1]
            cls ^= low
        return nb

    def merge(self, classes: tuple[int, ...], a: int, b: int) -> tuple[int, ...] | None:
        ca, cb = classes[a], classes[b]
        if ca == cb:
            return classes
        if self.neighbourhood(ca) & cb:
            return None
        merged = ca | cb
        out = list(classes)
        m = merged
        while m:
            low = m & -m
            out[low.bit_length() - 1] = merged
            m ^= low
        return tuple(out)


def _solution(net: Network, classes: tuple[int, ...]) -> PartitionSolution:
    seen = []
    for c in classes:
        if c not in seen:
            seen.append(c)
    parts = tuple(
        frozenset(net.nodes[i] for i in range(len(net.nodes)) if c >> i & 1)
        for c in seen
    )
    part_of = {u: p for p in parts for u in p}
    realized = frozenset(
        s.id for s in net.sessions if part_of[s.source] is part_of[s.sink]
    )
    parts = tuple(sorted(parts, key=lambda p: (-len(p), sorted(p))))
    return PartitionSolution(parts, realized)


def opt_exact(net: Network) -> tuple[int, PartitionSolution]:
    """Largest set of sessions whose endpoints can share independent parts.

    Branch-and-bound over the restricted sessions (include before exclude),
    merging endpoint classes and pruning when a merged class stops being
    independent or the remaining sessions cannot beat the incumbent.
    """
    merger = _Merger(net)
    idx = merger.index
    hat = [net.session(i) for i in sorted(restrict_sessions(net))]
    pairs = [(idx[s.source], idx[s.sink]) for s in hat]
    best = [-1, merger.start()]

    def search(i: int, count: int, classes: tuple[int, ...]) -> None:
        if count + (len(pairs) - i) <= best[0]:
            return
        if i == len(pairs):
            best[0], best[1] = count, classes
            return
        a, b = pairs[i]
        merged = merger.merge(classes, a, b)
        if merged is not None:
            search(i + 1, count + 1, merged)
            if merged is classes:
                return  # already co-located, including is free
        search(i + 1, count, classes)

    search(0, 0, merger.start())
    return best[0], _solution(net, best[1])


def opt_bruteforce(net: Network, limit: int = 15) -> int:
    """Reference: try session subsets of the restricted set, largest first."""
    hat = [net.session(i) for i in sorted(restrict_sessions(net))]
    if len(hat) > limit:
        raise NetworkError(f"brute force limited to {limit} restricted sessions")
    merger = _Merger(net)
    idx = merger.index
    for size in range(len(hat), 0, -1):
        for subset in combinations(hat, size):
            classes: tuple[int, ...] | None = merger.start()
            for s in subset:
                classes = merger.merge(classes, idx[s.source], idx[s.sink])
                if classes is None:
                    break
            if classes is not None:
                return size
    return 0


def partition_bound(net: Network) -> BoundReport:
    if not net.sessions:
        raise NetworkError("partition bound needs at least one session")
    opt, _ = opt_exact(net)
    e, k = len(net.edges), len(net.sessions)
    return BoundReport(e, k, opt, Fraction(e, k + opt))


def sparsest_cut(net: Network) -> tuple[Fraction, CutSet]:
    """Minimum over cuts of crossing edges per separated session (unit capacity)."""
    n = len(net.nodes)
    if n < 2 or not net.sessions:
        raise NetworkError("no cut separates any session")
    idx = net.index
    adj = [0] * n
    for u, v in net.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    su = [idx[s.source] for s in net.sessions]
    sv = [idx[s.sink] for s in net.sessions]
    num, den, masks = kernels.sparsest_cut_scan(n, adj, su, sv)
    if den == 0:
        raise NetworkError("no cut separates any session")
    sides = [
        tuple(sorted(net.nodes[i] for i in range(n) if m >> i & 1)) for m in masks
    ]
    return Fraction(num, den), cut_set(net, min(sides))
