"""Packing chromatic numbers of super subdivisions and corona graphs.

Library layout:

- :mod:`.graphs` immutable labeled graphs, distances, exact structure stats
- :mod:`.families` family generators (paths, cycles, coronas, fssd, ...)
- :mod:`.coloring` the packing-coloring verifier and constructive patterns
- :mod:`.solver` exact chi_rho by k-decision search plus a brute-force oracle
- :mod:`.harness` machine checks of the supported structural claims
- :mod:`.cli` the ``pcn`` command line front end
"""

from .coloring import (
    ColoringError,
    PackingColoring,
    VerificationReport,
    greedy_coloring,
    lift_to_fssd,
    pattern_fssd_bipartite,
    pattern_fssd_cn_corona,
    pattern_fssd_complete,
    pattern_fssd_cycle,
    pattern_fssd_kn_corona,
    pattern_fssd_splitting_complete,
    pattern_fssd_splitting_cycle,
    verify,
)
from .families import (
    FamilyError,
    FamilyMeta,
    FamilySpec,
    erdos_renyi,
    fssd,
    generate,
    locate,
    neighborhood_corona,
    parse_spec,
    random_connected_graph,
    splitting,
)
from .graphs import (
    INFINITY,
    DistanceMatrix,
    Graph,
    GraphError,
    GraphStats,
    VertexLabel,
    all_pairs_distances,
    build_graph,
    components,
    graph_from_dict,
    graph_to_dict,
    induced_subgraph,
    is_connected,
    stats,
    to_dot,
)
from .solver import (
    DecideTimeout,
    SolveOptions,
    SolveResult,
    brute_force_chi,
    decide_k,
    packing_chromatic_number,
    trivial_lower_bound,
)

__version__ = "0.1.0"
