"""Immutable simple graphs with structured vertex labels and exact metric helpers.

Vertices are dense integers ``0..n-1``.  Every vertex carries a structured
label (``u_1``, ``u_{1,2}^3``, ``v_{2,1}``, ...) so that constructions layered
on top of a graph -- edge multi-subdivisions, corona products -- can address
vertices by name instead of by position.  Distances are unweighted hop counts
with ``math.inf`` marking unreachable pairs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

INFINITY = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs, labels, or vertex ids."""


# ---------------------------------------------------------------------------
# Vertex labels
# ---------------------------------------------------------------------------

ORIGINAL = "original"
SUBDIVIDED_EDGE = "subdivided_edge"
COPY_VERTEX = "copy_vertex"
COPY_EDGE_SUBDIVIDED = "copy_edge_subdivided"
CONNECTOR = "connector"
SPLIT_COPY = "split_copy"
SPLIT_CONNECTOR = "split_connector"

_LABEL_ARITY = {
    ORIGINAL: 1,
    SUBDIVIDED_EDGE: 3,
    COPY_VERTEX: 2,
    COPY_EDGE_SUBDIVIDED: 4,
    CONNECTOR: 4,
    SPLIT_COPY: 1,
    SPLIT_CONNECTOR: 3,
}

# kinds introduced by an edge subdivision step
SUBDIVIDED_KINDS = frozenset(
    {SUBDIVIDED_EDGE, COPY_EDGE_SUBDIVIDED, CONNECTOR, SPLIT_CONNECTOR}
)


@dataclass(frozen=True, order=True)
class VertexLabel:
    """Tagged vertex name.

    ``kind`` selects the naming scheme and ``indices`` are the 1-based
    positions appearing in the rendered name:

    - ``original(i)``                 -> u_i
    - ``subdivided_edge(i, j, k)``    -> u_{i,j}^k       (stored with i < j)
    - ``copy_vertex(i, g)``           -> v_{i,g}
    - ``copy_edge_subdivided(i,g,h,k)`` -> v_{i,g,h}^k   (stored with g < h)
    - ``connector(j, i, g, k)``       -> s_{j,i,g}^k     (joins u_j and v_{i,g})
    - ``split_copy(i)``               -> v_i
    - ``split_connector(i, j, k)``    -> s_{i,j}^k       (joins u_i and v_j)
    """

    kind: str
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _LABEL_ARITY:
            raise GraphError(f"unknown label kind {self.kind!r}")
        if len(self.indices) != _LABEL_ARITY[self.kind]:
            raise GraphError(
                f"label kind {self.kind!r} takes {_LABEL_ARITY[self.kind]} "
                f"indices, got {self.indices!r}"
            )
        if any(not isinstance(i, int) or i < 1 for i in self.indices):
            raise GraphError(f"label indices must be positive integers: {self.indices!r}")
        if self.kind == SUBDIVIDED_EDGE and self.indices[0] >= self.indices[1]:
            raise GraphError(f"subdivided edge label must have i < j: {self.indices!r}")
        if self.kind == COPY_EDGE_SUBDIVIDED and self.indices[1] >= self.indices[2]:
            raise GraphError(f"copy edge label must have g < h: {self.indices!r}")

    # -- constructors (canonicalize symmetric index pairs) --

    @classmethod
    def original(cls, i: int) -> "VertexLabel":
        return cls(ORIGINAL, (i,))

    @classmethod
    def subdivided_edge(cls, i: int, j: int, k: int) -> "VertexLabel":
        if i == j:
            raise GraphError("subdivided edge label needs two distinct endpoints")
        return cls(SUBDIVIDED_EDGE, (min(i, j), max(i, j), k))

    @classmethod
    def copy_vertex(cls, i: int, g: int) -> "VertexLabel":
        return cls(COPY_VERTEX, (i, g))

    @classmethod
    def copy_edge_subdivided(cls, i: int, g: int, h: int, k: int) -> "VertexLabel":
        if g == h:
            raise GraphError("copy edge label needs two distinct path positions")
        return cls(COPY_EDGE_SUBDIVIDED, (i, min(g, h), max(g, h), k))

    @classmethod
    def connector(cls, j: int, i: int, g: int, k: int) -> "VertexLabel":
        return cls(CONNECTOR, (j, i, g, k))

    @classmethod
    def split_copy(cls, i: int) -> "VertexLabel":
        return cls(SPLIT_COPY, (i,))

    @classmethod
    def split_connector(cls, i: int, j: int, k: int) -> "VertexLabel":
        return cls(SPLIT_CONNECTOR, (i, j, k))

    def render(self) -> str:
        """Human-readable name, e.g. ``u_{1,2}^3``."""
        ix = self.indices
        if self.kind == ORIGINAL:
            return f"u_{ix[0]}"
        if self.kind == SUBDIVIDED_EDGE:
            return f"u_{{{ix[0]},{ix[1]}}}^{ix[2]}"
        if self.kind == COPY_VERTEX:
            return f"v_{{{ix[0]},{ix[1]}}}"
        if self.kind == COPY_EDGE_SUBDIVIDED:
            return f"v_{{{ix[0]},{ix[1]},{ix[2]}}}^{ix[3]}"
        if self.kind == CONNECTOR:
            return f"s_{{{ix[0]},{ix[1]},{ix[2]}}}^{ix[3]}"
        if self.kind == SPLIT_COPY:
            return f"v_{ix[0]}"
        return f"s_{{{ix[0]},{ix[1]}}}^{ix[2]}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "VertexLabel":
        try:
            kind = obj["kind"]
            indices = tuple(int(i) for i in obj["indices"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed label object: {obj!r}") from exc
        return cls(kind, indices)


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``edges`` is the canonical sorted tuple of ``(u, v)`` pairs with
    ``u < v``; adjacency lists are derived lazily.  Instances are immutable
    and hashable, hence safe to share across threads and to use as cache keys.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[VertexLabel, ...]
    name: str = ""

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor list per vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def label_index(self) -> dict[VertexLabel, int]:
        return {lab: v for v, lab in enumerate(self.labels)}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def label_of(self, v: int) -> VertexLabel:
        return self.labels[v]


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Mapping[int, VertexLabel] | Sequence[VertexLabel] | None = None,
    name: str = "",
) -> Graph:
    """Validate and build an immutable :class:`Graph`.

    Rejects loops, duplicate edges (after ``u < v`` canonicalization),
    out-of-range vertex ids, and duplicate labels.  Vertices without an
    explicit label default to ``u_{id+1}``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    canon: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has a vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u},{v}) is not allowed")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge ({e[0]},{e[1]})")
        seen.add(e)
        canon.append(e)
    canon.sort()

    if labels is None:
        final = [VertexLabel.original(i + 1) for i in range(n)]
    elif isinstance(labels, Mapping):
        final = [labels.get(i, VertexLabel.original(i + 1)) for i in range(n)]
    else:
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        final = list(labels)
    if len(set(final)) != n:
        dupes = sorted(
            {lab.render() for lab in final if final.count(lab) > 1}
        )
        raise GraphError(f"duplicate label(s): {', '.join(dupes)}")

    return Graph(n=n, edges=tuple(canon), labels=tuple(final), name=name)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold ``math.inf``."""

    n: int
    rows: tuple[tuple[float, ...], ...]

    def dist(self, u: int, v: int) -> float:
        return self.rows[u][v]

    def eccentricity(self, v: int) -> float:
        return max(self.rows[v]) if self.n else 0

    def max_finite(self) -> int:
        """Largest finite entry (0 for a single vertex)."""
        best = 0
        for row in self.rows:
            for d in row:
                if d != INFINITY and d > best:
                    best = d
        return int(best)


def bfs_distances(g: Graph, source: int, cutoff: float = INFINITY) -> dict[int, int]:
    """Hop distances from ``source`` to every vertex within ``cutoff``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du >= cutoff:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


@lru_cache(maxsize=64)
def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; O(n(n+m)) total."""
    rows = []
    for s in range(g.n):
        row = [INFINITY] * g.n
        for v, d in bfs_distances(g, s).items():
            row[v] = d
        rows.append(tuple(row))
    return DistanceMatrix(n=g.n, rows=tuple(rows))


# ---------------------------------------------------------------------------
# Structural statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphStats:
    diameter: float
    clique_number: int
    min_degree: int
    is_bipartite: bool
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    is_connected: bool


def _two_coloring(g: Graph) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False, None
    part_a = tuple(v for v in range(g.n) if side[v] == 0)
    part_b = tuple(v for v in range(g.n) if side[v] == 1)
    return True, (part_a, part_b)


def clique_number(g: Graph) -> int:
    """Exact maximum clique size via pivoting Bron-Kerbosch on bitmasks."""
    if g.n == 0:
        return 0
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    best = 1

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if cand == 0:
            if excl == 0 and size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        # pivot on the vertex covering the most candidates
        pivot, cover = -1, -1
        probe = cand | excl
        while probe:
            b = probe & -probe
            probe ^= b
            u = b.bit_length() - 1
            c = (cand & masks[u]).bit_count()
            if c > cover:
                pivot, cover = u, c
        ext = cand & ~masks[pivot]
        while ext:
            b = ext & -ext
            ext ^= b
            v = b.bit_length() - 1
            expand(size + 1, cand & masks[v], excl & masks[v])
            cand ^= b
            excl |= b
            if size + cand.bit_count() <= best:
                return

    expand(0, (1 << g.n) - 1, 0)
    return best


@lru_cache(maxsize=256)
def stats(g: Graph) -> GraphStats:
    """Diameter, clique number (exact), minimum degree, bipartiteness, connectivity."""
    if g.n == 0:
        raise GraphError("stats of the empty graph are undefined")
    dm = all_pairs_distances(g)
    connected = all(d != INFINITY for d in dm.rows[0])
    diameter = INFINITY if not connected else float(dm.max_finite())
    bip, parts = _two_coloring(g)
    return GraphStats(
        diameter=diameter,
        clique_number=clique_number(g),
        min_degree=min(len(a) for a in g.adj),
        is_bipartite=bip,
        bipartition=parts,
        is_connected=connected,
    )


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``keep``; labels preserved, ids re-densified.

    Returns the new graph together with the old-id -> new-id map.
    """
    kept = sorted(set(keep))
    if not kept:
        raise GraphError("cannot induce a subgraph on an empty vertex set")
    if kept[0] < 0 or kept[-1] >= g.n:
        raise GraphError(f"kept vertex ids must lie in 0..{g.n - 1}")
    id_map = {old: new for new, old in enumerate(kept)}
    edges = [
        (id_map[u], id_map[v]) for u, v in g.edges if u in id_map and v in id_map
    ]
    labels = [g.labels[old] for old in kept]
    sub = build_graph(len(kept), edges, labels, name=f"{g.name}|induced")
    return sub, id_map


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def graph_to_dict(g: Graph) -> dict:
    """JSON-ready dict: name, n, labels (parallel to ids), edges with u < v."""
    return {
        "name": g.name,
        "n": g.n,
        "labels": [lab.to_json() for lab in g.labels],
        "edges": [[u, v] for u, v in g.edges],
    }


def graph_from_dict(obj: Mapping) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
        name = str(obj.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph object: {exc}") from exc
    raw_labels = obj.get("labels")
    labels = None
    if raw_labels is not None:
        labels = [VertexLabel.from_json(item) for item in raw_labels]
    return build_graph(n, edges, labels, name=name)


def to_dot(g: Graph, colors: Sequence[int] | None = None) -> str:
    """Graphviz DOT text; node labels are the rendered vertex names.

    When ``colors`` is given each node label gains a ``:c`` suffix and a
    fill color, which is enough to reproduce coloring figures.
    """
    palette = [
        "white", "#cccccc", "#a6cee3", "#b2df8a", "#fdbf6f", "#fb9a99",
        "#cab2d6", "#ffff99", "#1f78b4", "#33a02c",
    ]
    lines = [f'graph "{g.name}" {{', "  node [shape=circle];"]
    for v in range(g.n):
        text = g.labels[v].render()
        if colors is not None:
            c = colors[v]
            fill = palette[c % len(palette)]
            lines.append(
                f'  {v} [label="{text} : {c}", style=filled, fillcolor="{fill}"];'
            )
        else:
            lines.append(f'  {v} [label="{text}"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
