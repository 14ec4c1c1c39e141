"""Exact packing chromatic number computation.

The decision core answers "is there a coloring with colors 1..k whose color-i
class is an i-packing?" by depth-first search with forward checking: giving
color c to vertex v forbids c on every vertex within distance c of v.  One
bitmask per color makes that update and the per-vertex feasibility test a few
integer operations; the next branch vertex is always one with the fewest
remaining colors, which finds wipeouts early and keeps infeasibility proofs
small.  Colors larger than the diameter of a connected graph can never be
shared, so at any node only the smallest unused such color is tried.

``packing_chromatic_number`` probes k upward from a cheap sound lower bound,
seeded with a greedy upper bound, so an exact answer always carries both a
feasibility witness and an exhausted search one color below.
"""

from __future__ import annotations

import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass

from .coloring import PackingColoring, greedy_coloring, verify
from .graphs import (
    INFINITY,
    DistanceMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    components,
    induced_subgraph,
)

ORDER_STRATEGIES = ("degree-desc", "eccentricity-asc", "input")


class DecideTimeout(Exception):
    """A decision search hit its deadline: the outcome is indeterminate."""

    def __init__(self, nodes: int = 0):
        super().__init__("decision search timed out")
        self.nodes = nodes


@dataclass(frozen=True)
class SolveOptions:
    time_budget: float = 0.0  # seconds, 0 = unlimited
    order_strategy: str = "degree-desc"
    parallel: bool = False
    k_upper_cap: int | None = None

    def __post_init__(self) -> None:
        if self.time_budget < 0:
            raise ValueError("time budget must be >= 0")
        if self.order_strategy not in ORDER_STRATEGIES:
            raise ValueError(
                f"order strategy must be one of {ORDER_STRATEGIES}, "
                f"got {self.order_strategy!r}"
            )


@dataclass(frozen=True)
class SolveResult:
    status: str  # "exact" | "timeout-with-bounds"
    chi: int | None
    bounds: tuple[int, int] | None
    witness: PackingColoring
    nodes_explored: int
    elapsed: float


def static_order(g: Graph, dist: DistanceMatrix, strategy: str) -> list[int]:
    """Deterministic branch order; high-degree-first is the default because
    a vertex's closed neighborhood forces that many distinct colors."""
    if strategy == "input":
        return list(range(g.n))
    if strategy == "degree-desc":
        return sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    ecc = []
    for v in range(g.n):
        finite = [d for d in dist.rows[v] if d != INFINITY]
        ecc.append(max(finite) if finite else 0)
    return sorted(range(g.n), key=lambda v: (ecc[v], v))


class _DecisionSearch:
    """Backtracking search for one (graph, k) decision."""

    def __init__(
        self,
        n: int,
        rows,
        k: int,
        order: list[int],
        deadline: float | None,
    ):
        self.n = n
        self.k = k
        self.deadline = deadline
        self.nodes = 0
        self.assign = [0] * n
        self.uncolored = (1 << n) - 1
        self.full_mask = (1 << n) - 1

        finite = [d for row in rows for d in row if d != INFINITY]
        diam = int(max(finite)) if finite else 0
        connected = all(d != INFINITY for d in rows[0]) if n else True
        # colors beyond the diameter of a connected graph are single-use and
        # pairwise interchangeable; represent them as an ordered pool
        if connected and k > diam:
            self.normal_k = diam
            self.singletons = list(range(diam + 1, k + 1))
        else:
            self.normal_k = k
            self.singletons = []
        self.used_singletons = 0

        # balls[v][c]: vertices within distance c of v (v included)
        self.balls: list[list[int]] = []
        for v in range(n):
            row = rows[v]
            per = [0] * (self.normal_k + 1)
            for w in range(n):
                d = row[w]
                if d != INFINITY and d <= self.normal_k:
                    bit = 1 << w
                    for c in range(max(int(d), 1), self.normal_k + 1):
                        per[c] |= bit
            balls_v = [0]
            for c in range(1, self.normal_k + 1):
                balls_v.append(per[c] | (1 << v))
            self.balls.append(balls_v)

        self.forb = [0] * (self.normal_k + 1)
        self.rank = [0] * n
        for r, v in enumerate(order):
            self.rank[v] = r

    def preassign(self, v: int, c: int) -> None:
        self.assign[v] = c
        self.uncolored ^= 1 << v
        if c > self.normal_k:
            self.used_singletons += 1
        else:
            self.forb[c] |= self.balls[v][c]

    def _select(self) -> tuple[int, list[int]]:
        """Most-constrained uncolored vertex and its feasible colors."""
        normal_k = self.normal_k
        forb = self.forb
        have_singleton = self.used_singletons < len(self.singletons)
        best_v, best_cnt, best_rank = -1, normal_k + 2, 0
        m = self.uncolored
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            cnt = 1 if have_singleton else 0
            for c in range(1, normal_k + 1):
                if not (forb[c] >> v) & 1:
                    cnt += 1
            if cnt == 0:
                return v, []
            if cnt < best_cnt or (cnt == best_cnt and self.rank[v] < best_rank):
                best_v, best_cnt, best_rank = v, cnt, self.rank[v]
        cands = [
            c for c in range(1, normal_k + 1) if not (forb[c] >> best_v) & 1
        ]
        if have_singleton:
            cands.append(self.singletons[self.used_singletons])
        return best_v, cands

    def search(self) -> bool:
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes % 2048 == 0
            and time.monotonic() > self.deadline
        ):
            raise DecideTimeout(self.nodes)
        if self.uncolored == 0:
            return True
        v, cands = self._select()
        if not cands:
            return False
        bit = 1 << v
        for c in cands:
            self.assign[v] = c
            self.uncolored ^= bit
            if c > self.normal_k:
                self.used_singletons += 1
                if self.search():
                    return True
                self.used_singletons -= 1
            else:
                old = self.forb[c]
                self.forb[c] = old | self.balls[v][c]
                if self.search():
                    return True
                self.forb[c] = old
            self.uncolored ^= bit
            self.assign[v] = 0
        return False


def _decide(
    g: Graph,
    dist: DistanceMatrix,
    k: int,
    order: list[int],
    deadline: float | None,
) -> tuple[PackingColoring | None, int]:
    search = _DecisionSearch(g.n, dist.rows, k, order, deadline)
    if search.search():
        return PackingColoring(tuple(search.assign)), search.nodes
    return None, search.nodes


def _parallel_probe(payload) -> tuple[str, tuple[int, ...] | None, int]:
    n, rows, k, order, root, color, budget = payload
    deadline = time.monotonic() + budget if budget else None
    search = _DecisionSearch(n, rows, k, order, deadline)
    search.preassign(root, color)
    try:
        if search.search():
            return "feasible", tuple(search.assign), search.nodes
        return "infeasible", None, search.nodes
    except DecideTimeout:
        return "timeout", None, search.nodes


def _decide_parallel(
    g: Graph,
    dist: DistanceMatrix,
    k: int,
    order: list[int],
    deadline: float | None,
) -> tuple[PackingColoring | None, int]:
    """Split on the root vertex's color choices across worker processes."""
    probe = _DecisionSearch(g.n, dist.rows, k, order, None)
    root, cands = probe._select()
    if not cands:
        return None, 1
    budget = max(deadline - time.monotonic(), 0.01) if deadline else 0.0
    payloads = [
        (g.n, dist.rows, k, order, root, c, budget) for c in cands
    ]
    nodes = 1
    timed_out = False
    witness: PackingColoring | None = None
    with ProcessPoolExecutor(max_workers=min(len(payloads), 8)) as pool:
        futures = {pool.submit(_parallel_probe, p) for p in payloads}
        while futures:
            done, futures = wait(futures, return_when=FIRST_COMPLETED)
            for fut in done:
                status, assign, nd = fut.result()
                nodes += nd
                if status == "feasible" and witness is None:
                    witness = PackingColoring(assign)
                elif status == "timeout":
                    timed_out = True
            if witness is not None:
                for fut in futures:
                    fut.cancel()
                break
    if witness is not None:
        return witness, nodes
    if timed_out:
        raise DecideTimeout(nodes)
    return None, nodes


def decide_k(
    g: Graph,
    dist: DistanceMatrix,
    k: int,
    opts: SolveOptions = SolveOptions(),
) -> PackingColoring | None:
    """Coloring of ``g`` with colors in 1..k, or None when none exists.

    Raises :class:`DecideTimeout` when the time budget runs out before the
    search is exhausted; a timeout is never reported as infeasibility.
    """
    if k < 1:
        raise GraphError(f"color budget must be >= 1, got {k}")
    deadline = time.monotonic() + opts.time_budget if opts.time_budget else None
    order = static_order(g, dist, opts.order_strategy)
    if opts.parallel and g.n >= 8:
        result, _ = _decide_parallel(g, dist, k, order, deadline)
    else:
        result, _ = _decide(g, dist, k, order, deadline)
    return result


def trivial_lower_bound(g: Graph) -> int:
    """1 for edgeless graphs, 3 when a triangle exists, else 2.

    Three mutually adjacent vertices can never share any color, so a
    triangle forces three distinct colors.
    """
    if not g.edges:
        return 1
    for u, v in g.edges:
        if g.neighbor_sets[u] & g.neighbor_sets[v]:
            return 3
    return 2


def _solve_connected(
    g: Graph, opts: SolveOptions, deadline: float | None
) -> tuple[str, int, int, PackingColoring, int]:
    """Solve one connected component.

    Returns (status, lower, upper, witness, nodes); on "exact" lower == upper.
    """
    dist = all_pairs_distances(g)
    order = static_order(g, dist, opts.order_strategy)
    witness = greedy_coloring(g, order)
    upper = witness.k
    lower = trivial_lower_bound(g)
    nodes = 0
    cap = opts.k_upper_cap

    k = lower
    while k < upper and (cap is None or k <= cap):
        try:
            if opts.parallel and g.n >= 8:
                found, nd = _decide_parallel(g, dist, k, order, deadline)
            else:
                found, nd = _decide(g, dist, k, order, deadline)
        except DecideTimeout as exc:
            return "timeout-with-bounds", k, upper, witness, nodes + exc.nodes
        nodes += nd
        if found is not None:
            return "exact", k, k, found, nodes
        k += 1
    if k >= upper:
        # every k below the greedy bound is certified infeasible
        return "exact", upper, upper, witness, nodes
    # the k_upper_cap stopped probing below the greedy bound
    return "timeout-with-bounds", k, upper, witness, nodes


def packing_chromatic_number(
    g: Graph, opts: SolveOptions = SolveOptions()
) -> SolveResult:
    """Exact packing chromatic number with witness, or bounds on timeout.

    Disconnected graphs are solved per component and combined by taking the
    maximum: distances across components are infinite, so color classes never
    interact between components.
    """
    if g.n == 0:
        raise GraphError("the empty graph has no packing chromatic number")
    start = time.monotonic()
    deadline = start + opts.time_budget if opts.time_budget else None

    comps = components(g)
    lower = upper = 0
    total_nodes = 0
    all_exact = True
    combined = [0] * g.n
    for comp in comps:
        if len(comps) == 1:
            sub, back = g, {v: v for v in range(g.n)}
        else:
            sub, id_map = induced_subgraph(g, comp)
            back = {new: old for old, new in id_map.items()}
        status, lo, hi, witness, nodes = _solve_connected(sub, opts, deadline)
        total_nodes += nodes
        all_exact = all_exact and status == "exact"
        lower = max(lower, lo)
        upper = max(upper, hi)
        for new_id, c in enumerate(witness.colors):
            combined[back[new_id]] = c

    witness = PackingColoring(tuple(combined))
    rep = verify(g, witness, all_pairs_distances(g))
    if not rep.valid:  # internal invariant, never expected to fire
        raise AssertionError(f"solver produced an invalid witness: {rep.violations[:3]}")
    elapsed = time.monotonic() - start
    if all_exact or lower == upper:
        return SolveResult(
            status="exact",
            chi=upper,
            bounds=None,
            witness=witness,
            nodes_explored=total_nodes,
            elapsed=elapsed,
        )
    return SolveResult(
        status="timeout-with-bounds",
        chi=None,
        bounds=(lower, upper),
        witness=witness,
        nodes_explored=total_nodes,
        elapsed=elapsed,
    )


def brute_force_chi(g: Graph, cap: int | None = None) -> int:
    """Independent oracle: smallest k admitting a valid coloring, k <= cap.

    Enumerates assignments vertex by vertex in id order, pruning a prefix as
    soon as it violates the packing condition against the distance matrix.
    Restricted to graphs with at most 12 vertices; ``cap`` defaults to |V|,
    which always suffices (all-distinct colors are valid).
    """
    if g.n == 0:
        raise GraphError("the empty graph has no packing chromatic number")
    if g.n > 12:
        raise GraphError(f"brute force is limited to 12 vertices, got {g.n}")
    cap = g.n if cap is None else cap
    rows = all_pairs_distances(g).rows
    assign = [0] * g.n

    def extend(v: int, k: int) -> bool:
        if v == g.n:
            return True
        row = rows[v]
        for c in range(1, k + 1):
            if all(assign[w] != c or row[w] > c for w in range(v)):
                assign[v] = c
                if extend(v + 1, k):
                    return True
        assign[v] = 0
        return False

    for k in range(1, cap + 1):
        if extend(0, k):
            rep = verify(g, PackingColoring(tuple(assign)))
            if not rep.valid:  # internal invariant
                raise AssertionError("brute force found an invalid coloring")
            return k
    raise GraphError(f"no valid packing coloring with at most {cap} colors")
