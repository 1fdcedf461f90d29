"""Independent Set -> Optimal-Pairs gadget, checked by brute force on small graphs."""
from __future__ import annotations

from dataclasses import dataclass

from .bounds import opt_exact
from .graph import Network, NetworkError, Session, neighbors

Graph = Network  # a network whose session list is ignored


def gadget_family(g: Graph, v: str) -> list[tuple[str, Network]]:
    """For each x in {v} and its neighbours: x is the source of one session per other node."""
    anchor = {v} | neighbors(g, v)
    out = []
    for x in sorted(anchor):
        sinks = [u for u in g.nodes if u != x]
        sessions = tuple(Session(i, x, y) for i, y in enumerate(sinks, 1))
        out.append((x, Network(g.nodes, g.edges, sessions, g.capacity)))
    return out


def max_independent_set(g: Graph) -> tuple[int, frozenset[str]]:
    n = len(g.nodes)
    if n > 64:
        raise NetworkError("max_independent_set is exhaustive; at most 64 nodes")
    idx = g.index
    adj = [0] * n
    for u, w in g.edges:
        adj[idx[u]] |= 1 << idx[w]
        adj[idx[w]] |= 1 << idx[u]
    best = [0, 0]

    def search(chosen: int, size: int, candidates: int) -> None:
        if size + bin(candidates).count("1") <= best[0]:
            return
        if not candidates:
            best[0], best[1] = size, chosen
            return
        # branch on the candidate with most candidate neighbours
        pick = max(
            (i for i in range(n) if candidates >> i & 1),
            key=lambda i: (bin(adj[i] & candidates).count("1"), -i),
        )
        bit = 1 << pick
        search(chosen | bit, size + 1, candidates & ~bit & ~adj[pick])
        if adj[pick] & candidates:
            search(chosen, size, candidates & ~bit)

    search(0, 0, (1 << n) - 1)
    return best[0], frozenset(g.nodes[i] for i in range(n) if best[1] >> i & 1)


def default_anchor(g: Graph) -> str:
    """A maximum-degree node, smallest name on ties."""
    if not g.nodes:
        raise NetworkError("empty graph")
    return min(g.nodes, key=lambda u: (-len(neighbors(g, u)), u))


@dataclass(frozen=True)
class GadgetResult:
    source: str
    sessions: int
    opt: int
    witness: frozenset[str]


@dataclass(frozen=True)
class ReductionReport:
    anchor: str
    mis_size: int
    gadgets: tuple[GadgetResult, ...]
    holds: bool

    @property
    def best(self) -> GadgetResult:
        return max(self.gadgets, key=lambda r: r.opt)


def reduction_report(g: Graph, v: str | None = None) -> ReductionReport:
    if v is None:
        v = default_anchor(g)
    k_star, _ = max_independent_set(g)
    results = []
    for x, gadget in gadget_family(g, v):
        opt, sol = opt_exact(gadget)
        part = next(p for p in sol.parts if x in p)
        # endpoints of the co-located sessions, plus the shared source itself
        witness = frozenset({x}) | frozenset(
            s.sink for s in gadget.sessions if s.id in sol.realized
        )
        assert witness <= part
        results.append(GadgetResult(x, len(gadget.sessions), opt, witness))
    best = max(r.opt for r in results)
    holds = best == k_star - 1 and all(
        len(r.witness) == r.opt + 1 and _independent(g, r.witness) for r in results
    ) and any(len(r.witness) == k_star for r in results)
    return ReductionReport(v, k_star, tuple(results), holds)


def check_reduction(g: Graph, v: str) -> bool:
    return reduction_report(g, v).holds


def _independent(g: Graph, nodes: frozenset[str]) -> bool:
    return all(not (neighbors(g, u) & nodes) for u in nodes)
