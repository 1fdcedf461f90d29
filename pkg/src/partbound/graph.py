"""Undirected unicast networks: representation, text format and graph primitives.

A network is an immutable value.  Nodes are kept in lexicographic order and
every enumeration in this module is deterministic, so reports built on top of
it are byte-stable.

File format (one directive per line, ``#`` starts a comment)::

    node <name>
    edge <name> <name>
    session <id> <source> <sink>
    capacity <p>/<q>
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[str, str]
Path = tuple[str, ...]


class PartboundError(ValueError):
    """Base class for domain errors raised by this package."""


class NetworkError(PartboundError):
    """Semantic error: unknown node, duplicate entity, invalid request."""


class ParseError(PartboundError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def edge(u: str, v: str) -> Edge:
    """Canonical form of the unordered pair {u, v}."""
    return (u, v) if u < v else (v, u)


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise PartboundError(f"bad fraction {text!r}") from exc


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class Session:
    id: int
    source: str
    sink: str

    @property
    def pair(self) -> Edge:
        return edge(self.source, self.sink)


@dataclass(frozen=True)
class Network:
    nodes: tuple[str, ...]
    edges: frozenset[Edge]
    sessions: tuple[Session, ...] = ()
    capacity: Fraction = Fraction(1)
    _adj: dict[str, frozenset[str]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(sorted(self.nodes)))
        object.__setattr__(self, "edges", frozenset(edge(*e) for e in self.edges))
        object.__setattr__(
            self, "sessions", tuple(sorted(self.sessions, key=lambda s: s.id))
        )
        object.__setattr__(self, "capacity", Fraction(self.capacity))
        _validate(self)
        adj: dict[str, set[str]] = {u: set() for u in self.nodes}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {u: frozenset(a) for u, a in adj.items()})

    @classmethod
    def build(
        cls,
        nodes: Iterable[str],
        edges: Iterable[tuple[str, str]] = (),
        sessions: Iterable[tuple[int, str, str]] = (),
        capacity: Fraction | int = 1,
    ) -> "Network":
        edge_list = [edge(u, v) for u, v in edges]
        if len(set(edge_list)) != len(edge_list):
            raise NetworkError("duplicate edge")
        node_list = list(nodes)
        if len(set(node_list)) != len(node_list):
            raise NetworkError("duplicate node")
        return cls(
            tuple(node_list),
            frozenset(edge_list),
            tuple(Session(i, s, t) for i, s, t in sessions),
            Fraction(capacity),
        )

    @property
    def index(self) -> dict[str, int]:
        return {u: i for i, u in enumerate(self.nodes)}

    def session(self, sid: int) -> Session:
        for s in self.sessions:
            if s.id == sid:
                return s
        raise NetworkError(f"unknown session {sid}")

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_sessions(self, sessions: Iterable[Session]) -> "Network":
        return Network(self.nodes, self.edges, tuple(sessions), self.capacity)

    def relabel(self, mapping: dict[str, str]) -> "Network":
        return Network(
            tuple(mapping[u] for u in self.nodes),
            frozenset(edge(mapping[u], mapping[v]) for u, v in self.edges),
            tuple(Session(s.id, mapping[s.source], mapping[s.sink]) for s in self.sessions),
            self.capacity,
        )


def _validate(net: Network) -> None:
    names = set(net.nodes)
    if len(names) != len(net.nodes):
        raise NetworkError("duplicate node")
    for u in net.nodes:
        if not u or any(c.isspace() for c in u):
            raise NetworkError(f"invalid node name {u!r}")
    for u, v in net.edges:
        if u == v:
            raise NetworkError(f"self-loop at {u}")
        for w in (u, v):
            if w not in names:
                raise NetworkError(f"edge {u} {v}: undeclared node {w}")
    seen: set[int] = set()
    for s in net.sessions:
        if s.id < 1:
            raise NetworkError(f"session id must be positive, got {s.id}")
        if s.id in seen:
            raise NetworkError(f"duplicate session id {s.id}")
        seen.add(s.id)
        if s.source == s.sink:
            raise NetworkError(f"session {s.id}: source equals sink")
        for w in (s.source, s.sink):
            if w not in names:
                raise NetworkError(f"session {s.id}: undeclared node {w}")
    if net.capacity <= 0:
        raise NetworkError("capacity must be positive")


def parse_network(text: str) -> Network:
    nodes: list[str] = []
    node_set: set[str] = set()
    edges: dict[Edge, int] = {}
    sessions: dict[int, Session] = {}
    capacity: Fraction | None = None

    def need(lineno: int, name: str) -> str:
        if name not in node_set:
            raise ParseError(lineno, f"undeclared node {name}")
        return name

    pending: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kw = tok[0]
        if kw == "node":
            if len(tok) != 2:
                raise ParseError(lineno, "expected: node <name>")
            if tok[1] in node_set:
                raise ParseError(lineno, f"duplicate node {tok[1]}")
            nodes.append(tok[1])
            node_set.add(tok[1])
        elif kw in ("edge", "session"):
            pending.append((lineno, tok))
        elif kw == "capacity":
            if len(tok) != 2:
                raise ParseError(lineno, "expected: capacity <p>/<q>")
            if capacity is not None:
                raise ParseError(lineno, "capacity given twice")
            try:
                capacity = parse_fraction(tok[1])
            except PartboundError as exc:
                raise ParseError(lineno, str(exc)) from None
            if capacity <= 0:
                raise ParseError(lineno, "capacity must be positive")
        else:
            raise ParseError(lineno, f"unknown directive {kw!r}")

    # node lines may appear after the edges that use them
    for lineno, tok in pending:
        if tok[0] == "edge":
            if len(tok) != 3:
                raise ParseError(lineno, "expected: edge <name> <name>")
            u, v = need(lineno, tok[1]), need(lineno, tok[2])
            if u == v:
                raise ParseError(lineno, f"self-loop at {u}")
            e = edge(u, v)
            if e in edges:
                raise ParseError(lineno, f"duplicate edge {u} {v}")
            edges[e] = lineno
        else:
            if len(tok) != 4:
                raise ParseError(lineno, "expected: session <id> <source> <sink>")
            try:
                sid = int(tok[1])
            except ValueError:
                raise ParseError(lineno, f"bad session id {tok[1]!r}") from None
            if sid < 1:
                raise ParseError(lineno, f"session id must be positive, got {sid}")
            if sid in sessions:
                raise ParseError(lineno, f"duplicate session id {sid}")
            s, t = need(lineno, tok[2]), need(lineno, tok[3])
            if s == t:
                raise ParseError(lineno, f"session {sid}: source equals sink")
            sessions[sid] = Session(sid, s, t)
    return Network(
        tuple(nodes),
        frozenset(edges),
        tuple(sessions.values()),
        capacity if capacity is not None else Fraction(1),
    )


def format_network(net: Network) -> str:
    lines = [f"node {u}" for u in net.nodes]
    lines += [f"edge {u} {v}" for u, v in net.sorted_edges()]
    lines += [f"session {s.id} {s.source} {s.sink}" for s in net.sessions]
    lines.append(f"capacity {format_fraction(net.capacity)}")
    return "\n".join(lines) + "\n"


def _check_node(net: Network, u: str) -> None:
    if u not in net._adj:
        raise NetworkError(f"unknown node {u}")


def neighbors(net: Network, u: str) -> frozenset[str]:
    _check_node(net, u)
    return net._adj[u]


def is_independent(net: Network, nodes: Iterable[str]) -> bool:
    group = set(nodes)
    for u in group:
        _check_node(net, u)
    return all(not (net._adj[u] & group) for u in group)


@dataclass(frozen=True)
class CutSet:
    """A node bipartition, stored by the side that excludes the smallest node."""

    side: frozenset[str]
    edges: frozenset[Edge]

    def sort_key(self) -> tuple[str, ...]:
        return tuple(sorted(self.side))


def cut_set(net: Network, side: Iterable[str]) -> CutSet:
    alpha = frozenset(side)
    for u in alpha:
        _check_node(net, u)
    if not alpha or len(alpha) == len(net.nodes):
        raise NetworkError("cut side must be a nonempty proper subset of the nodes")
    if net.nodes[0] in alpha:
        alpha = frozenset(net.nodes) - alpha
    crossing = frozenset(e for e in net.edges if (e[0] in alpha) != (e[1] in alpha))
    return CutSet(alpha, crossing)


def enumerate_cut_sets(net: Network) -> list[CutSet]:
    if len(net.nodes) < 2:
        raise NetworkError("need at least 2 nodes to form a cut")
    rest = net.nodes[1:]
    cuts = [
        cut_set(net, combo)
        for k in range(1, len(rest) + 1)
        for combo in combinations(rest, k)
    ]
    cuts.sort(key=CutSet.sort_key)
    return cuts


def distances(net: Network, source: str) -> dict[str, int]:
    _check_node(net, source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in net._adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(net: Network, u: str, v: str) -> int | None:
    """Hop distance, or None when v is unreachable from u."""
    _check_node(net, v)
    return distances(net, u).get(v)


def shortest_paths(net: Network, u: str, v: str) -> list[Path]:
    if u == v:
        raise NetworkError("shortest_paths needs distinct endpoints")
    to_v = distances(net, v)
    if u not in to_v:
        raise NetworkError(f"{u} and {v} are disconnected (distance is infinite)")
    out: list[Path] = []

    def walk(path: list[str]) -> None:
        x = path[-1]
        if x == v:
            out.append(tuple(path))
            return
        for w in sorted(net._adj[x]):
            if to_v.get(w) == to_v[x] - 1:
                path.append(w)
                walk(path)
                path.pop()

    walk([u])
    return out


def iter_simple_paths(net: Network, u: str, v: str) -> Iterator[Path]:
    _check_node(net, u)
    _check_node(net, v)
    if u == v:
        raise NetworkError("simple_paths needs distinct endpoints")
    path = [u]
    on_path = {u}

    def walk() -> Iterator[Path]:
        x = path[-1]
        for w in sorted(net._adj[x]):
            if w == v:
                yield tuple(path) + (v,)
            elif w not in on_path:
                path.append(w)
                on_path.add(w)
                yield from walk()
                on_path.discard(path.pop())

    yield from walk()


def simple_paths(net: Network, u: str, v: str) -> list[Path]:
    return list(iter_simple_paths(net, u, v))


def path_edges(path: Path) -> list[Edge]:
    return [edge(a, b) for a, b in zip(path, path[1:])]


def is_valid_path(net: Network, path: Path) -> bool:
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    if any(u not in net._adj for u in path):
        return False
    return all(net.adjacent(a, b) for a, b in zip(path, path[1:]))
