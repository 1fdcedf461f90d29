import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import count_simple_paths, random_network
from partbound.graph import (
    NetworkError,
    ParseError,
    cut_set,
    distance,
    enumerate_cut_sets,
    format_network,
    is_independent,
    neighbors,
    parse_network,
    shortest_paths,
    simple_paths,
)

DATA = Path(__file__).parent / "data"


def test_parse_minimal():
    net = parse_network("node a\nnode b\nedge a b\nsession 1 a b")
    assert net.nodes == ("a", "b")
    assert net.edges == {("a", "b")}
    assert len(net.sessions) == 1
    assert net.capacity == 1


def test_parse_fixture_file():
    net = parse_network((DATA / "fig3.net").read_text())
    assert (len(net.nodes), len(net.edges), len(net.sessions)) == (7, 16, 5)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("node a\nedge a a", "self-loop"),
        ("node a\nnode a", "duplicate node"),
        ("node a\nnode b\nedge a b\nedge b a", "duplicate edge"),
        ("node a\nnode b\nsession 1 a b\nsession 1 b a", "duplicate session"),
        ("node a\nedge a b", "undeclared node b"),
        ("node a\nnode b\nsession 1 a a", "source equals sink"),
        ("node a\nfrobnicate", "unknown directive"),
        ("node a\ncapacity 0/1", "positive"),
        ("node a\ncapacity 1\ncapacity 2", "twice"),
    ],
)
def test_parse_rejects(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_network(text)


def test_parse_error_carries_line_number():
    with pytest.raises(ParseError) as info:
        parse_network("# header\nnode a\n\nedge a a\n")
    assert info.value.lineno == 4


def test_comments_and_capacity():
    net = parse_network("node x # first\nnode y\nedge y x\ncapacity 6/4\n")
    assert net.capacity == Fraction(3, 2)
    assert "capacity 3/2" in format_network(net)


def test_serialization_is_sorted():
    net = parse_network("node b\nnode a\nedge b a\nsession 2 a b\nsession 1 b a")
    assert format_network(net) == (
        "node a\nnode b\nedge a b\nsession 1 b a\nsession 2 a b\ncapacity 1/1\n"
    )


def test_neighbors(fig3):
    assert neighbors(fig3, "v1") == {"v3", "v4", "v5", "v6", "v7"}
    assert neighbors(fig3, "v5") == {"v1", "v2", "v3", "v4"}
    lonely = parse_network("node a\nnode b")
    assert neighbors(lonely, "a") == frozenset()
    with pytest.raises(NetworkError):
        neighbors(fig3, "v9")


def test_is_independent(fig3):
    assert is_independent(fig3, {"v5", "v6", "v7"})
    assert not is_independent(fig3, {"v1", "v3"})
    assert is_independent(fig3, set())


def test_cut_set(fig3):
    assert len(cut_set(fig3, {"v1"}).edges) == 5
    # v1, v2 are non-adjacent with degree 5 each; {v3..v7} has 6 internal edges
    assert len(cut_set(fig3, {"v1", "v2"}).edges) == 10
    rest = {f"v{i}" for i in range(2, 8)}
    assert cut_set(fig3, {"v1"}) == cut_set(fig3, rest)
    assert cut_set(fig3, {"v1"}).side == rest
    for bad in (set(), set(fig3.nodes)):
        with pytest.raises(NetworkError):
            cut_set(fig3, bad)


def test_enumerate_cut_sets(fig3):
    cuts = enumerate_cut_sets(fig3)
    assert len(cuts) == 63
    assert len({c.side for c in cuts}) == 63
    assert [c.sort_key() for c in cuts] == sorted(c.sort_key() for c in cuts)
    assert len(enumerate_cut_sets(parse_network("node a\nnode b\nedge a b"))) == 1
    four = parse_network("node a\nnode b\nnode c\nnode d\nedge a b\nedge c d")
    assert len(enumerate_cut_sets(four)) == 7
    with pytest.raises(NetworkError):
        enumerate_cut_sets(parse_network("node a"))


def test_shortest_paths(fig3):
    paths = shortest_paths(fig3, "v5", "v6")
    assert paths == [("v5", w, "v6") for w in ("v1", "v2", "v3", "v4")]
    assert shortest_paths(fig3, "v1", "v3") == [("v1", "v3")]
    assert len(shortest_paths(fig3, "v1", "v2")) == 5
    split = parse_network("node a\nnode b")
    with pytest.raises(NetworkError, match="infinite"):
        shortest_paths(split, "a", "b")


def test_simple_paths_small():
    tri = parse_network("node a\nnode b\nnode c\nedge a b\nedge b c\nedge a c")
    assert sorted(simple_paths(tri, "a", "b")) == [("a", "b"), ("a", "c", "b")]
    assert simple_paths(parse_network("node a\nnode b\nedge a b"), "a", "b") == [("a", "b")]
    assert simple_paths(parse_network("node a\nnode b"), "a", "b") == []


def test_simple_paths_match_dfs_oracle(fig3):
    assert len(simple_paths(fig3, "v1", "v2")) == count_simple_paths(fig3, "v1", "v2")


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_cut_and_path_invariants(seed):
    net = random_network(random.Random(seed))
    everything = set(net.nodes)
    for c in enumerate_cut_sets(net):
        assert cut_set(net, everything - c.side) == c
        assert all((u in c.side) != (v in c.side) for u, v in c.edges)
    assert len(enumerate_cut_sets(net)) == 2 ** (len(net.nodes) - 1) - 1
    s = net.sessions[0]
    d = distance(net, s.source, s.sink)
    simple = simple_paths(net, s.source, s.sink)
    assert len(simple) == count_simple_paths(net, s.source, s.sink)
    if d is not None:
        short = shortest_paths(net, s.source, s.sink)
        assert all(len(p) - 1 == d for p in short)
        assert set(short) <= set(simple)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip(seed):
    net = random_network(random.Random(seed))
    assert parse_network(format_network(net)) == net
