"""Orthogonality / compatibility of edge sets and the (P1)/(P2) cut properties.

A set of edges F is orthogonal to a session when every shortest source-sink
path uses at most one edge of F, and compatible with it when every shortest
path uses as few edges of F as any simple source-sink path does.  (P1) asks
that no cut-set is orthogonal to all sessions; (P2) asks that whenever the
union of two disjoint cut-sets is compatible with every session, at least two
sessions have a shortest path meeting that union more than twice.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import kernels
from .graph import (
    CutSet,
    Edge,
    Network,
    NetworkError,
    cut_set,
    enumerate_cut_sets,
    path_edges,
    shortest_paths,
)
from .npartite import gen_type1

Perm = dict[str, str]


def fig3_network() -> Network:
    """The Type-I 3-partite network with parts {v1,v2}, {v3,v4}, {v5,v6,v7}."""
    parts = [["v1", "v2"], ["v3", "v4"], ["v5", "v6", "v7"]]
    names = {f"p{i}_{j}": u for i, p in enumerate(parts, 1) for j, u in enumerate(p, 1)}
    base = gen_type1((2, 2, 3)).relabel(names)
    return Network.build(
        base.nodes,
        base.edges,
        [(1, "v2", "v1"), (2, "v3", "v4"), (3, "v5", "v6"), (4, "v6", "v7"), (5, "v5", "v7")],
    )


def _as_edges(F: Iterable[Edge] | CutSet) -> frozenset[Edge]:
    if isinstance(F, CutSet):
        return F.edges
    return frozenset(tuple(sorted(e)) for e in F)


def _shortest(net: Network, i: int):
    s = net.session(i)
    try:
        return shortest_paths(net, s.source, s.sink)
    except NetworkError:
        raise NetworkError(f"session {i} endpoints are disconnected") from None


def crossing_profile(net: Network, i: int, F) -> tuple[int, int]:
    """(max over shortest paths, min over simple paths) of edges shared with F."""
    F = _as_edges(F)
    most = max(sum(e in F for e in path_edges(p)) for p in _shortest(net, i))
    s = net.session(i)
    idx = net.index
    n = len(net.nodes)
    adj = [0] * n
    weight = [0] * (n * n)
    for u, v in net.edges:
        a, b = idx[u], idx[v]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
        if (u, v) in F:
            weight[a * n + b] = weight[b * n + a] = 1
    least = kernels.min_crossing_path(n, adj, weight, idx[s.source], idx[s.sink])
    return most, least


def is_orthogonal(net: Network, F, i: int) -> bool:
    F = _as_edges(F)
    return all(sum(e in F for e in path_edges(p)) <= 1 for p in _shortest(net, i))


def is_compatible(net: Network, F, i: int) -> bool:
    most, least = crossing_profile(net, i, F)
    return most == least


def non_orthogonal(net: Network, F) -> frozenset[int]:
    F = _as_edges(F)
    return frozenset(s.id for s in net.sessions if not is_orthogonal(net, F, s.id))


def check_p1(net: Network) -> tuple[bool, list[tuple[CutSet, frozenset[int]]]]:
    rows = [(c, non_orthogonal(net, c)) for c in enumerate_cut_sets(net)]
    return all(bad for _, bad in rows), rows


def disjoint_cut_partners(net: Network, alpha: Iterable[str]) -> list[frozenset[str]]:
    own = cut_set(net, alpha)
    out = [
        c.side
        for c in enumerate_cut_sets(net)
        if c.side != own.side and not (c.edges & own.edges)
    ]
    return sorted(out, key=_side_key)


@dataclass(frozen=True)
class P2Witness:
    alpha: frozenset[str]
    beta: frozenset[str]
    compatible_all: bool
    heavy_sessions: frozenset[int]


def check_p2(net: Network) -> tuple[bool, list[P2Witness]]:
    cuts = enumerate_cut_sets(net)
    witnesses = []
    for a, b in combinations(cuts, 2):
        if a.edges & b.edges:
            continue
        F = a.edges | b.edges
        compatible = all(is_compatible(net, F, s.id) for s in net.sessions)
        heavy = frozenset(
            s.id
            for s in net.sessions
            if any(sum(e in F for e in path_edges(p)) > 2 for p in _shortest(net, s.id))
        )
        witnesses.append(P2Witness(a.side, b.side, compatible, heavy))
    holds = all(len(w.heavy_sessions) >= 2 for w in witnesses if w.compatible_all)
    return holds, witnesses


def automorphisms(net: Network) -> list[Perm]:
    """All adjacency-preserving node permutations (sessions ignored)."""
    nodes = net.nodes
    adj = {u: set() for u in nodes}
    for u, v in net.edges:
        adj[u].add(v)
        adj[v].add(u)
    out: list[Perm] = []
    image: Perm = {}
    used: set[str] = set()

    def extend(k: int) -> None:
        if k == len(nodes):
            out.append(dict(image))
            return
        u = nodes[k]
        for w in nodes:
            if w in used or len(adj[w]) != len(adj[u]):
                continue
            if all((x in adj[u]) == (image[x] in adj[w]) for x in nodes[:k]):
                image[u] = w
                used.add(w)
                extend(k + 1)
                used.discard(w)
                del image[u]

    extend(0)
    return out


def generate_group(generators: Iterable[Perm]) -> list[Perm]:
    gens = [dict(g) for g in generators]
    if not gens:
        return []
    nodes = sorted(gens[0])
    key = lambda p: tuple(p[u] for u in nodes)  # noqa: E731
    identity = {u: u for u in nodes}
    seen = {key(identity): identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = {u: g[p[u]] for u in nodes}
                if key(q) not in seen:
                    seen[key(q)] = q
                    nxt.append(q)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


def fig3_symmetry_generators() -> list[Perm]:
    def perm(*cycles: tuple[str, ...]) -> Perm:
        p = {f"v{i}": f"v{i}" for i in range(1, 8)}
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                p[a] = b
        return p

    return [
        perm(("v1", "v2")),
        perm(("v3", "v4")),
        perm(("v5", "v6")),
        perm(("v5", "v6", "v7")),
        perm(("v1", "v3"), ("v2", "v4")),
    ]


def transport_sessions(net: Network, sigma: Perm, ids: Iterable[int]) -> frozenset[int]:
    """Relabel session ids along a node permutation, following unordered pairs."""
    by_pair = {}
    for s in net.sessions:
        by_pair.setdefault(s.pair, s.id)
    out = set()
    for i in ids:
        s = net.session(i)
        moved = tuple(sorted((sigma[s.source], sigma[s.sink])))
        if moved not in by_pair:
            raise NetworkError(f"session {i} has no image under the permutation")
        out.add(by_pair[moved])
    return frozenset(out)


def _side_key(side: Iterable[str]) -> tuple[int, tuple[str, ...]]:
    side = sorted(side)
    return len(side), tuple(side)


@dataclass(frozen=True)
class OrthogonalityRow:
    alpha: frozenset[str]
    non_orthogonal: frozenset[int]
    partners: tuple[frozenset[str], ...]
    symmetric: tuple[frozenset[str], ...] = ()


def table1_report(net: Network, group: list[Perm] | None = None) -> list[OrthogonalityRow]:
    """One row per symmetry class of cut sides containing the smallest node.

    Two sides are in the same class when a group element maps one onto the
    other; the representative is the smallest side by (size, names).
    """
    anchor = net.nodes[0]
    if group is None:
        group = automorphisms(net)
    everything = frozenset(net.nodes)
    sides = [everything - c.side for c in enumerate_cut_sets(net)]
    placed: set[frozenset[str]] = set()
    rows = []
    for alpha in sorted(sides, key=_side_key):
        if alpha in placed:
            continue
        images = {frozenset(sigma[u] for u in alpha) for sigma in group}
        members = sorted((s for s in images if anchor in s), key=_side_key)
        members = members or [alpha]
        placed.update(members)
        rep = members[0]
        rows.append(
            OrthogonalityRow(
                rep,
                non_orthogonal(net, cut_set(net, rep)),
                tuple(disjoint_cut_partners(net, rep)),
                tuple(members[1:]),
            )
        )
    return rows


def format_set(nodes: Iterable[str]) -> str:
    return "{" + ",".join(sorted(nodes)) + "}"


def format_row(row: OrthogonalityRow) -> str:
    ids = ",".join(str(i) for i in sorted(row.non_orthogonal)) or "-"
    partners = ";".join(format_set(p) for p in row.partners) or "-"
    return f"alpha={format_set(row.alpha)} nonorth={ids} partners={partners}"
