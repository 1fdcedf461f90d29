"""Type-I / Type-II n-partite networks and their optimal routing schemes.

Both network families sit on the complete n-partite graph with parts
``P_1..P_n`` (every part has at least two nodes).  Type-I networks carry one
session per unordered pair inside a part; Type-II networks carry one session
per unordered pair of nodes.

The routing constructions are inductive: a two-part base scheme is extended
one part at a time, rescaling the previous scheme to the new edge capacity and
topping up every old session through the new part.  Parts are added in
nondecreasing size order; adding a large part on top of small ones in the
opposite order can drive per-path amounts negative.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .graph import (
    Edge,
    Network,
    NetworkError,
    Path,
    PartboundError,
    ParseError,
    Session,
    edge,
    format_fraction,
    is_valid_path,
    parse_fraction,
    path_edges,
)


def _check_sizes(sizes: Sequence[int]) -> list[int]:
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2:
        raise NetworkError("need at least 2 parts")
    if any(s < 2 for s in sizes):
        raise NetworkError("every part needs at least 2 nodes")
    return sizes


def part_names(sizes: Sequence[int]) -> list[list[str]]:
    return [[f"p{i}_{j}" for j in range(1, s + 1)] for i, s in enumerate(sizes, 1)]


def _multipartite(sizes: Sequence[int], pairs: list[tuple[str, str]]) -> Network:
    parts = part_names(sizes)
    nodes = [u for p in parts for u in p]
    edges = [
        (u, v)
        for a, b in combinations(range(len(parts)), 2)
        for u in parts[a]
        for v in parts[b]
    ]
    # (larger, smaller) orientation; irrelevant for every computation
    sessions = [Session(i, t, s) for i, (s, t) in enumerate(sorted(pairs), 1)]
    return Network(tuple(nodes), frozenset(edges), tuple(sessions))


def gen_type1(sizes: Sequence[int]) -> Network:
    sizes = _check_sizes(sizes)
    pairs = [edge(u, v) for p in part_names(sizes) for u, v in combinations(p, 2)]
    return _multipartite(sizes, pairs)


def gen_type2(sizes: Sequence[int]) -> Network:
    sizes = _check_sizes(sizes)
    nodes = [u for p in part_names(sizes) for u in p]
    return _multipartite(sizes, [edge(u, v) for u, v in combinations(nodes, 2)])


def edge_count_recurrence(sizes: Sequence[int]) -> int:
    sizes = _check_sizes(sizes)
    count, seen = 0, 0
    for s in sizes:
        count += s * seen
        seen += s
    return count


def edge_count_pairwise(sizes: Sequence[int]) -> int:
    sizes = _check_sizes(sizes)
    return sum(a * b for a, b in combinations(sizes, 2))


def intra_capacity(sizes: Sequence[int]) -> int:
    return sum(s * (s - 1) for s in sizes)


@dataclass(frozen=True)
class PathFlow:
    session: int
    path: Path
    amount: Fraction


@dataclass(frozen=True)
class RoutingScheme:
    capacity: Fraction
    rate: Fraction
    flows: tuple[PathFlow, ...]

    def scaled(self, factor: Fraction) -> "RoutingScheme":
        factor = Fraction(factor)
        if factor <= 0:
            raise PartboundError("scale factor must be positive")
        return RoutingScheme(
            self.capacity * factor,
            self.rate * factor,
            tuple(PathFlow(f.session, f.path, f.amount * factor) for f in self.flows),
        )


def _type1_flows(sizes: list[int]) -> tuple[int, int, dict[Edge, dict[Path, Fraction]]]:
    """Inductive Type-I construction, keyed by the session's unordered pair.

    Returns (capacity, rate, flows).  Paths run from the larger node name to
    the smaller one, matching the generated session orientation.
    """
    parts = part_names(sizes)
    flows: dict[Edge, dict[Path, Fraction]] = defaultdict(lambda: defaultdict(Fraction))

    def send(pair: Edge, via: str, amount: Fraction) -> None:
        lo, hi = pair
        flows[pair][(hi, via, lo)] += amount

    order = sorted(range(len(sizes)), key=lambda i: (sizes[i], i))
    a, b = order[0], order[1]
    for x, y in ((a, b), (b, a)):
        for pair in combinations(parts[x], 2):
            for w in parts[y]:
                send(pair, w, Fraction(sizes[x]))
    cap = intra_capacity([sizes[a], sizes[b]])
    rate = sizes[a] * sizes[b]
    done = [a, b]

    for m in order[2:]:
        p = sizes[m]
        new_cap = cap + p * (p - 1)
        new_rate = rate + p * sum(sizes[j] for j in done)
        factor = Fraction(new_cap, cap)
        for per_pair in flows.values():
            for path in per_pair:
                per_pair[path] *= factor
        deficit = new_rate - factor * rate
        if deficit < 0:
            raise PartboundError(
                f"inductive routing fails for sizes {sizes}: negative deficit {deficit}"
            )
        for j in done:
            for pair in combinations(parts[j], 2):
                for w in parts[m]:
                    send(pair, w, deficit / p)
        for j in done:
            amount = (new_cap - (sizes[j] - 1) * deficit / p) / (p - 1)
            if amount < 0:
                raise PartboundError(
                    f"inductive routing fails for sizes {sizes}: "
                    f"negative amount {amount} through part {j + 1}"
                )
            for pair in combinations(parts[m], 2):
                for w in parts[j]:
                    send(pair, w, amount)
        cap, rate = new_cap, new_rate
        done.append(m)
    return cap, rate, flows


def _assemble(net: Network, per_pair: dict[Edge, dict[Path, Fraction]]) -> list[PathFlow]:
    ids = {s.pair: s.id for s in net.sessions}
    out = [
        PathFlow(ids[pair], path, amount)
        for pair, paths in per_pair.items()
        for path, amount in paths.items()
        if amount > 0
    ]
    out.sort(key=lambda f: (f.session, f.path))
    return out


def route_type1(sizes: Sequence[int]) -> RoutingScheme:
    sizes = _check_sizes(sizes)
    cap, rate, per_pair = _type1_flows(sizes)
    flows = _assemble(gen_type1(sizes), per_pair)
    return RoutingScheme(Fraction(cap), Fraction(rate), tuple(flows))


def route_type2(sizes: Sequence[int]) -> RoutingScheme:
    """Type-I scheme for intra-part sessions plus a direct flow per cross pair."""
    sizes = _check_sizes(sizes)
    intra_cap, rate, per_pair = _type1_flows(sizes)
    net = gen_type2(sizes)
    for u, v in net.edges:
        per_pair[(u, v)] = {(v, u): Fraction(rate)}
    flows = _assemble(net, per_pair)
    return RoutingScheme(Fraction(rate + intra_cap), Fraction(rate), tuple(flows))


@dataclass(frozen=True)
class VerificationReport:
    feasible: bool
    achieved_rate: Fraction
    per_edge_load: dict[Edge, Fraction]
    saturated: bool
    balanced: bool
    session_totals: dict[int, Fraction]


def verify_routing(net: Network, scheme: RoutingScheme) -> VerificationReport:
    load = {e: Fraction(0) for e in net.sorted_edges()}
    totals = {s.id: Fraction(0) for s in net.sessions}
    ends = {s.id: s.pair for s in net.sessions}
    for f in scheme.flows:
        if f.session not in ends:
            raise NetworkError(f"flow for unknown session {f.session}")
        if f.amount <= 0:
            raise NetworkError(f"session {f.session}: flow amounts must be positive")
        if not is_valid_path(net, f.path):
            raise NetworkError(f"session {f.session}: invalid path {' '.join(f.path)}")
        if edge(f.path[0], f.path[-1]) != ends[f.session]:
            raise NetworkError(
                f"session {f.session}: path {' '.join(f.path)} does not join its endpoints"
            )
        for e in path_edges(f.path):
            load[e] += f.amount
        totals[f.session] += f.amount
    rate = min(totals.values(), default=Fraction(0))
    balanced = all(t == rate for t in totals.values())
    within = all(x <= scheme.capacity for x in load.values())
    saturated = bool(load) and all(x == scheme.capacity for x in load.values())
    return VerificationReport(within and balanced, rate, load, saturated, balanced, totals)


def parse_scheme(text: str) -> RoutingScheme:
    capacity = rate = None
    flows: list[PathFlow] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] in ("capacity", "rate"):
                if len(tok) != 2:
                    raise ParseError(lineno, f"expected: {tok[0]} <p>/<q>")
                value = parse_fraction(tok[1])
                if tok[0] == "capacity":
                    if capacity is not None:
                        raise ParseError(lineno, "capacity given twice")
                    capacity = value
                else:
                    if rate is not None:
                        raise ParseError(lineno, "rate given twice")
                    rate = value
            elif tok[0] == "flow":
                if len(tok) < 5:
                    raise ParseError(lineno, "expected: flow <id> <p>/<q> <node> <node> ...")
                flows.append(PathFlow(int(tok[1]), tuple(tok[3:]), parse_fraction(tok[2])))
            else:
                raise ParseError(lineno, f"unknown directive {tok[0]!r}")
        except ParseError:
            raise
        except (PartboundError, ValueError) as exc:
            raise ParseError(lineno, str(exc)) from None
    if capacity is None or rate is None:
        raise PartboundError("scheme needs both capacity and rate lines")
    if capacity <= 0:
        raise PartboundError("capacity must be positive")
    return RoutingScheme(capacity, rate, tuple(flows))


def format_scheme(scheme: RoutingScheme) -> str:
    lines = [
        f"capacity {format_fraction(scheme.capacity)}",
        f"rate {format_fraction(scheme.rate)}",
    ]
    lines += [
        f"flow {f.session} {format_fraction(f.amount)} {' '.join(f.path)}"
        for f in scheme.flows
    ]
    return "\n".join(lines) + "\n"
