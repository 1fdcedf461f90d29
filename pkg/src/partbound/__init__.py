"""Exact partition-bound computations for undirected unicast networks."""
from .bounds import (
    BoundReport,
    PartitionSolution,
    conf,
    opt_exact,
    opt_recursion,
    partition_bound,
    restrict_sessions,
    sparsest_cut,
)
from .graph import (
    CutSet,
    Network,
    NetworkError,
    ParseError,
    PartboundError,
    Session,
    cut_set,
    enumerate_cut_sets,
    format_network,
    is_independent,
    neighbors,
    parse_network,
    shortest_paths,
    simple_paths,
)
from .npartite import (
    PathFlow,
    RoutingScheme,
    VerificationReport,
    gen_type1,
    gen_type2,
    route_type1,
    route_type2,
    verify_routing,
)

__version__ = "0.1.0"
