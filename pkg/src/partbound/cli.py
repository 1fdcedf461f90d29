"""Command-line interface.

Exit status: 0 on success, 1 on a domain or input error, 2 on a usage error.
With ``--kv`` every result is printed as one ``key=value`` pair per line.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .bounds import opt_exact, opt_recursion, partition_bound, sparsest_cut
from .graph import PartboundError, format_fraction, format_network, parse_network
from .npartite import (
    format_scheme,
    gen_type1,
    gen_type2,
    parse_scheme,
    route_type1,
    route_type2,
    verify_routing,
)
from .properties import check_p1, check_p2, fig3_network, format_row, format_set, table1_report
from .reduction import reduction_report


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _net(path: str):
    return parse_network(_read(path))


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(args, line: str, pairs: list[tuple[str, object]]) -> None:
    if args.kv:
        for k, v in pairs:
            print(f"{k}={v}")
    else:
        print(line)


def cmd_bound(args) -> None:
    net = _net(args.file)
    if args.kind == "partition":
        rep = partition_bound(net)
        _emit(args, str(rep), [
            ("edges", rep.edge_count),
            ("sessions", rep.session_count),
            ("opt", rep.opt_size),
            ("bound", format_fraction(rep.bound)),
        ])
    else:
        value, cut = sparsest_cut(net)
        separated = sum((s.source in cut.side) != (s.sink in cut.side) for s in net.sessions)
        pairs = [
            ("sparsest", format_fraction(value)),
            ("side", format_set(cut.side)),
            ("edges", len(cut.edges)),
            ("separated", separated),
        ]
        _emit(args, " ".join(f"{k}={v}" for k, v in pairs), pairs)


def cmd_opt(args) -> None:
    net = _net(args.file)
    if args.method == "recursion":
        pairs = [("opt", opt_recursion(net)), ("method", "recursion")]
    else:
        value, sol = opt_exact(net)
        pairs = [
            ("opt", value),
            ("method", "exact"),
            ("parts", ";".join(format_set(p) for p in sol.parts)),
            ("realized", ",".join(map(str, sorted(sol.realized))) or "-"),
        ]
    _emit(args, " ".join(f"{k}={v}" for k, v in pairs), pairs)


def cmd_gen(args) -> None:
    gen = gen_type1 if args.kind == "type1" else gen_type2
    sys.stdout.write(format_network(gen(args.sizes)))


def cmd_route(args) -> None:
    route = route_type1 if args.kind == "type1" else route_type2
    sys.stdout.write(format_scheme(route(args.sizes)))


def cmd_verify(args) -> None:
    net = _net(args.network)
    scheme = parse_scheme(_read(args.scheme))
    rep = verify_routing(net, scheme)
    pairs = [
        ("feasible", _yes(rep.feasible)),
        ("rate", format_fraction(rep.achieved_rate)),
        ("capacity", format_fraction(scheme.capacity)),
        ("saturated", _yes(rep.saturated)),
        ("balanced", _yes(rep.balanced)),
        ("ratio", format_fraction(rep.achieved_rate / scheme.capacity)),
    ]
    _emit(args, " ".join(f"{k}={v}" for k, v in pairs), pairs)
    if args.loads:
        for (u, v), load in rep.per_edge_load.items():
            print(f"load {u} {v} {format_fraction(load)}")


def cmd_check(args) -> None:
    net = _net(args.file)
    if args.prop == "p1":
        holds, rows = check_p1(net)
        if holds:
            least = min(len(bad) for _, bad in rows)
            line = (
                f"P1: holds ({len(rows)} cut-sets, "
                f"min non-orthogonal sessions per cut-set: {least})"
            )
        else:
            empty = [c for c, bad in rows if not bad]
            least = 0
            line = (
                f"P1: fails ({len(rows)} cut-sets, {len(empty)} orthogonal to every "
                f"session, first {format_set(empty[0].side)})"
            )
        _emit(args, line, [
            ("property", "P1"),
            ("holds", _yes(holds)),
            ("cut_sets", len(rows)),
            ("min_nonorth", least),
        ])
    else:
        holds, witnesses = check_p2(net)
        qualifying = [w for w in witnesses if w.compatible_all]
        detail = f"{len(qualifying)} of {len(witnesses)} disjoint cut-set pairs compatible with all sessions"
        if holds and not qualifying:
            line = f"P2: holds (vacuous: {detail})"
        elif holds:
            line = f"P2: holds ({detail}, each with at least 2 heavy sessions)"
        else:
            bad = next(w for w in qualifying if len(w.heavy_sessions) < 2)
            line = (
                f"P2: fails ({detail}; alpha={format_set(bad.alpha)} "
                f"beta={format_set(bad.beta)} has {len(bad.heavy_sessions)} heavy sessions)"
            )
        _emit(args, line, [
            ("property", "P2"),
            ("holds", _yes(holds)),
            ("disjoint_pairs", len(witnesses)),
            ("compatible_pairs", len(qualifying)),
        ])


def cmd_table1(args) -> None:
    net = _net(args.file) if args.file else fig3_network()
    for row in table1_report(net):
        print(format_row(row))


def cmd_reduce(args) -> None:
    g = _net(args.graph)
    rep = reduction_report(g, args.anchor)
    if not args.kv:
        for r in rep.gadgets:
            print(f"x={r.source} sessions={r.sessions} opt={r.opt} witness={format_set(r.witness)}")
    pairs = [
        ("anchor", rep.anchor),
        ("mis", rep.mis_size),
        ("max_opt", rep.best.opt),
        ("equivalence", "holds" if rep.holds else "fails"),
    ]
    _emit(args, " ".join(f"{k}={v}" for k, v in pairs), pairs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partbound",
        description="Partition bound, routing schemes and cut properties of undirected unicast networks.",
    )
    parser.add_argument("--kv", action="store_true", help="print one key=value pair per line")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("bound", help="partition bound or brute-force sparsest cut")
    p.add_argument("kind", choices=["partition", "sparsest-cut"])
    p.add_argument("file", help="network file, '-' for stdin")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("opt", help="size of the largest co-locatable session set")
    p.add_argument("file")
    p.add_argument("--method", choices=["exact", "recursion"], default="exact")
    p.set_defaults(func=cmd_opt)

    p = sub.add_parser("gen", help="emit a Type-I or Type-II n-partite network")
    p.add_argument("kind", choices=["type1", "type2"])
    p.add_argument("sizes", type=int, nargs="+")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("route", help="emit the optimal routing scheme for an n-partite network")
    p.add_argument("kind", choices=["type1", "type2"])
    p.add_argument("sizes", type=int, nargs="+")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("verify", help="check a routing scheme against a network")
    p.add_argument("network")
    p.add_argument("scheme")
    p.add_argument("--loads", action="store_true", help="also print every edge load")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="decide property P1 or P2")
    p.add_argument("prop", choices=["p1", "p2"])
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table1", help="cut-set orthogonality summary (default: the 7-node fixture)")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("reduce", help="check the Independent Set gadget on a graph file")
    p.add_argument("graph")
    p.add_argument("--anchor", help="anchor node (default: a maximum-degree node)")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (PartboundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
