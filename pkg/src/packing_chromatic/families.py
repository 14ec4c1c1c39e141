"""Graph family generators with canonical vertex labels.

Covers paths, cycles, complete graphs, stars, the Petersen graph, complete
bipartite graphs, neighborhood coronas ``G * H`` (one copy of G plus |V(G)|
copies of H, copy i joined to all neighbors of the i-th vertex of G),
splitting graphs ``S'(G) = G * K_1``, and the edge multi-subdivision
``fssd(G, m)`` that replaces every edge by a K_{2,m}.

A small spec mini-language drives the CLI::

    complete:4   cycle:7   path:5   star:6   petersen
    corona(<spec>,<spec>)   split(<spec>)   fssd(<spec>,m=2)

parsed case-insensitively with whitespace ignored.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    COPY_VERTEX,
    ORIGINAL,
    SPLIT_COPY,
    Graph,
    GraphError,
    VertexLabel,
    build_graph,
    is_connected,
)


class FamilyError(ValueError):
    """Raised for invalid family parameters or unparsable spec strings."""


# ---------------------------------------------------------------------------
# Family specs
# ---------------------------------------------------------------------------

_ATOMS = ("path", "cycle", "complete", "star", "petersen", "complete_bipartite")
_COMPOUNDS = ("corona", "split", "fssd")


@dataclass(frozen=True)
class FamilySpec:
    """Description of one generated family instance."""

    kind: str
    a: int = 0
    b: int = 0
    m: int = 1
    base: "FamilySpec | None" = None
    attach: "FamilySpec | None" = None

    def __post_init__(self) -> None:
        k = self.kind
        if k not in _ATOMS and k not in _COMPOUNDS:
            raise FamilyError(f"unknown family kind {k!r}")
        if k in ("path", "complete", "star") and self.a < 1:
            raise FamilyError(f"{k} needs at least 1 vertex, got {self.a}")
        if k == "cycle" and self.a < 3:
            raise FamilyError(f"cycle needs at least 3 vertices, got {self.a}")
        if k == "complete_bipartite" and (self.a < 1 or self.b < 1):
            raise FamilyError("complete bipartite parts must be positive")
        if k == "fssd":
            if self.base is None:
                raise FamilyError("fssd needs a base spec")
            if self.m < 1:
                raise FamilyError(f"fssd multiplicity must be >= 1, got {self.m}")
        if k == "corona" and (self.base is None or self.attach is None):
            raise FamilyError("corona needs base and attach specs")
        if k == "split" and self.base is None:
            raise FamilyError("split needs a base spec")

    # -- constructors --

    @classmethod
    def path(cls, n: int) -> "FamilySpec":
        return cls("path", a=n)

    @classmethod
    def cycle(cls, n: int) -> "FamilySpec":
        return cls("cycle", a=n)

    @classmethod
    def complete(cls, n: int) -> "FamilySpec":
        return cls("complete", a=n)

    @classmethod
    def star(cls, n: int) -> "FamilySpec":
        return cls("star", a=n)

    @classmethod
    def petersen(cls) -> "FamilySpec":
        return cls("petersen")

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "FamilySpec":
        return cls("complete_bipartite", a=a, b=b)

    @classmethod
    def corona(cls, base: "FamilySpec", attach: "FamilySpec") -> "FamilySpec":
        return cls("corona", base=base, attach=attach)

    @classmethod
    def split(cls, base: "FamilySpec") -> "FamilySpec":
        return cls("split", base=base)

    @classmethod
    def fssd(cls, base: "FamilySpec", m: int) -> "FamilySpec":
        return cls("fssd", base=base, m=m)

    def to_string(self) -> str:
        """Mini-language rendering (``complete_bipartite`` is display-only)."""
        if self.kind == "petersen":
            return "petersen"
        if self.kind == "complete_bipartite":
            return f"complete_bipartite:{self.a}:{self.b}"
        if self.kind in ("path", "cycle", "complete", "star"):
            return f"{self.kind}:{self.a}"
        if self.kind == "corona":
            return f"corona({self.base.to_string()},{self.attach.to_string()})"
        if self.kind == "split":
            return f"split({self.base.to_string()})"
        return f"fssd({self.base.to_string()},m={self.m})"


def parse_spec(text: str) -> FamilySpec:
    """Parse the CLI mini-language; case-insensitive, whitespace ignored."""
    s = "".join(text.split()).lower()
    if not s:
        raise FamilyError("empty family spec")
    spec, pos = _parse_spec(s, 0)
    if pos != len(s):
        raise FamilyError(f"trailing text after spec: {s[pos:]!r}")
    return spec


def _parse_spec(s: str, pos: int) -> tuple[FamilySpec, int]:
    start = pos
    while pos < len(s) and (s[pos].isalpha() or s[pos] == "_"):
        pos += 1
    head = s[start:pos]
    if head == "petersen":
        return FamilySpec.petersen(), pos
    if head in ("path", "cycle", "complete", "star"):
        if pos >= len(s) or s[pos] != ":":
            raise FamilyError(f"{head} needs a size, e.g. {head}:5")
        num, pos = _parse_int(s, pos + 1)
        return FamilySpec(head, a=num), pos
    if head == "corona":
        pos = _expect(s, pos, "(")
        base, pos = _parse_spec(s, pos)
        pos = _expect(s, pos, ",")
        attach, pos = _parse_spec(s, pos)
        pos = _expect(s, pos, ")")
        return FamilySpec.corona(base, attach), pos
    if head == "split":
        pos = _expect(s, pos, "(")
        base, pos = _parse_spec(s, pos)
        pos = _expect(s, pos, ")")
        return FamilySpec.split(base), pos
    if head == "fssd":
        pos = _expect(s, pos, "(")
        base, pos = _parse_spec(s, pos)
        pos = _expect(s, pos, ",")
        if not s.startswith("m=", pos):
            raise FamilyError("fssd multiplicity must be written m=<int>")
        num, pos = _parse_int(s, pos + 2)
        pos = _expect(s, pos, ")")
        return FamilySpec.fssd(base, num), pos
    raise FamilyError(f"unknown family {head!r} at position {start}")


def _parse_int(s: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if start == pos:
        raise FamilyError(f"expected an integer at position {start} of {s!r}")
    return int(s[start:pos]), pos


def _expect(s: str, pos: int, ch: str) -> int:
    if pos >= len(s) or s[pos] != ch:
        raise FamilyError(f"expected {ch!r} at position {pos} of {s!r}")
    return pos + 1


# ---------------------------------------------------------------------------
# Base constructions
# ---------------------------------------------------------------------------

def _path(n: int, name: str) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], name=name)

def _cycle(n: int, name: str) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], name=name)

def _complete(n: int, name: str) -> Graph:
    return build_graph(n, list(combinations(range(n), 2)), name=name)

def _star(n: int, name: str) -> Graph:
    # center first: u_1 adjacent to all leaves
    return build_graph(n, [(0, i) for i in range(1, n)], name=name)

def _petersen(name: str) -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner, name=name)

def _complete_bipartite(a: int, b: int, name: str) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)], name=name)


def neighborhood_corona(g: Graph, h: Graph, name: str = "") -> Graph:
    """One copy of ``g`` plus ``|V(g)|`` copies of ``h``.

    Every vertex of copy i is joined to all neighbors of the i-th vertex of
    ``g``, so |V| = n1(1+n2) and |E| = m1(2 n2 + 1) + n1 m2.  Copy vertices
    are labeled v_{i,g} (v_i when ``h`` is a single vertex); the base keeps
    its labels when they are all plain u_i, otherwise it is relabeled
    u_1..u_n in id order.
    """
    if g.n < 1:
        raise FamilyError("corona base needs at least one vertex")
    n1, n2 = g.n, h.n
    labels: list[VertexLabel] = []
    if all(lab.kind == ORIGINAL for lab in g.labels):
        labels.extend(g.labels)
    else:
        labels.extend(VertexLabel.original(i + 1) for i in range(n1))
    for i in range(1, n1 + 1):
        if n2 == 1:
            labels.append(VertexLabel.split_copy(i))
        else:
            labels.extend(VertexLabel.copy_vertex(i, pos) for pos in range(1, n2 + 1))

    edges: list[tuple[int, int]] = list(g.edges)
    for i in range(n1):
        off = n1 + i * n2
        edges.extend((off + x, off + y) for x, y in h.edges)
        for x in range(n2):
            edges.extend((off + x, w) for w in g.adj[i])
    out = build_graph(n1 + n1 * n2, edges, labels, name=name or f"corona({g.name},{h.name})")
    return out


def splitting(g: Graph, name: str = "") -> Graph:
    """Splitting graph: the neighborhood corona of ``g`` with a single vertex."""
    k1 = build_graph(1, [], name="complete:1")
    return neighborhood_corona(g, k1, name=name or f"split({g.name})")


def _subdivided_label(g: Graph, u: int, v: int, k: int) -> VertexLabel:
    """Label for the k-th new vertex on edge (u, v), specialized by endpoint kinds."""
    lu, lv = g.labels[u], g.labels[v]
    if lu.kind == ORIGINAL and lv.kind == ORIGINAL:
        return VertexLabel.subdivided_edge(lu.indices[0], lv.indices[0], k)
    if lu.kind == ORIGINAL and lv.kind == COPY_VERTEX:
        return VertexLabel.connector(lu.indices[0], lv.indices[0], lv.indices[1], k)
    if lv.kind == ORIGINAL and lu.kind == COPY_VERTEX:
        return VertexLabel.connector(lv.indices[0], lu.indices[0], lu.indices[1], k)
    if (
        lu.kind == COPY_VERTEX
        and lv.kind == COPY_VERTEX
        and lu.indices[0] == lv.indices[0]
    ):
        return VertexLabel.copy_edge_subdivided(
            lu.indices[0], lu.indices[1], lv.indices[1], k
        )
    if lu.kind == ORIGINAL and lv.kind == SPLIT_COPY:
        return VertexLabel.split_connector(lu.indices[0], lv.indices[0], k)
    if lv.kind == ORIGINAL and lu.kind == SPLIT_COPY:
        return VertexLabel.split_connector(lv.indices[0], lu.indices[0], k)
    # generic fallback keyed by endpoint ids (1-based); construction fails
    # loudly if this ever collides with an existing label
    return VertexLabel.subdivided_edge(u + 1, v + 1, k)


def fssd(g: Graph, m: int, name: str = "") -> Graph:
    """Replace every edge of ``g`` by m parallel degree-2 vertices (a K_{2,m}).

    |V| grows by m|E(g)| and |E| becomes 2m|E(g)|.  Original vertices keep
    their ids and labels; the new vertices are appended in (edge, k) order and
    labeled u_{i,j}^k / v_{i,g,h}^k / s_{j,i,g}^k / s_{i,j}^k according to
    what the edge joined.
    """
    if m < 1:
        raise FamilyError(f"subdivision multiplicity must be >= 1, got {m}")
    labels = list(g.labels)
    edges: list[tuple[int, int]] = []
    nxt = g.n
    for u, v in g.edges:
        for k in range(1, m + 1):
            labels.append(_subdivided_label(g, u, v, k))
            edges.append((u, nxt))
            edges.append((v, nxt))
            nxt += 1
    return build_graph(nxt, edges, labels, name=name or f"fssd({g.name},m={m})")


def locate(g: Graph, label: VertexLabel) -> int:
    """Vertex id carrying ``label``; labels are injective per graph."""
    try:
        return g.label_index[label]
    except KeyError:
        raise GraphError(f"label {label.render()} not present in {g.name!r}") from None


# ---------------------------------------------------------------------------
# Generation with count metadata
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyMeta:
    """Closed-form size of a family instance, checked against the built graph."""

    vertices: int
    edges: int
    note: str


def expected_counts(spec: FamilySpec) -> tuple[int, int, str]:
    k = spec.kind
    if k == "path":
        return spec.a, spec.a - 1, "path"
    if k == "cycle":
        return spec.a, spec.a, "cycle"
    if k == "complete":
        return spec.a, spec.a * (spec.a - 1) // 2, "complete graph"
    if k == "star":
        return spec.a, spec.a - 1, "star (center u_1)"
    if k == "petersen":
        return 10, 15, "Petersen graph"
    if k == "complete_bipartite":
        return spec.a + spec.b, spec.a * spec.b, "complete bipartite"
    if k in ("corona", "split"):
        n1, m1, _ = expected_counts(spec.base)
        n2, m2 = (1, 0) if k == "split" else expected_counts(spec.attach)[:2]
        return (
            n1 + n1 * n2,
            m1 * (2 * n2 + 1) + n1 * m2,
            "corona: n1(1+n2) vertices, m1(2n2+1)+n1*m2 edges",
        )
    nv, ne, _ = expected_counts(spec.base)
    return nv + spec.m * ne, 2 * spec.m * ne, "fssd: |V|+m|E| vertices, 2m|E| edges"


def generate(spec: FamilySpec) -> tuple[Graph, FamilyMeta]:
    """Build the graph for ``spec``; the returned meta counts are verified."""
    name = spec.to_string()
    k = spec.kind
    if k == "path":
        g = _path(spec.a, name)
    elif k == "cycle":
        g = _cycle(spec.a, name)
    elif k == "complete":
        g = _complete(spec.a, name)
    elif k == "star":
        g = _star(spec.a, name)
    elif k == "petersen":
        g = _petersen(name)
    elif k == "complete_bipartite":
        g = _complete_bipartite(spec.a, spec.b, name)
    elif k == "corona":
        g = neighborhood_corona(generate(spec.base)[0], generate(spec.attach)[0], name)
    elif k == "split":
        g = splitting(generate(spec.base)[0], name)
    else:
        g = fssd(generate(spec.base)[0], spec.m, name)

    nv, ne, note = expected_counts(spec)
    meta = FamilyMeta(vertices=nv, edges=ne, note=note)
    if g.n != nv or g.edge_count != ne:
        raise FamilyError(
            f"count mismatch for {name}: built {g.n}/{g.edge_count}, "
            f"expected {nv}/{ne}"
        )
    return g, meta


# ---------------------------------------------------------------------------
# Seeded random graphs (used by property checks only)
# ---------------------------------------------------------------------------

def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a fixed seed; edge order and ids are deterministic."""
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges, name=f"gnp:{n}:{p}:{seed}")


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """First connected draw from the seed's own retry sequence (deterministic).

    Retries use seed*10000+attempt so distinct seeds never share draws.
    """
    for attempt in range(10000):
        g = erdos_renyi(n, p, seed * 10000 + attempt)
        if is_connected(g):
            return g
    raise FamilyError(f"no connected G({n},{p}) found from seed {seed}")
