"""Packing colorings: the verifier, constructive patterns, and a greedy seeder.

A coloring ``c`` is a valid packing coloring when ``c(u) = c(v) = i`` implies
``d(u, v) > i`` for every pair of distinct vertices, i.e. the preimage of
color i is an i-packing.  :func:`verify` is the single source of truth for
that condition; every pattern below is checked against it rather than
trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .families import FamilySpec, fssd, generate
from .graphs import (
    COPY_VERTEX,
    ORIGINAL,
    SPLIT_COPY,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bfs_distances,
    stats,
)


class ColoringError(ValueError):
    """Raised for partial colorings or inapplicable pattern parameters."""


@dataclass(frozen=True)
class PackingColoring:
    """Total assignment vertex id -> positive color."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not isinstance(c, int) or c < 1 for c in self.colors):
            raise ColoringError("colors must be positive integers")

    @property
    def k(self) -> int:
        """Largest color in use."""
        return max(self.colors) if self.colors else 0

    def color_classes(self) -> dict[int, list[int]]:
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            classes.setdefault(c, []).append(v)
        return classes


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[tuple[int, int, int, int], ...]  # (u, v, color, distance)
    colors_used: frozenset[int]


def verify(
    g: Graph, coloring: PackingColoring, dist: DistanceMatrix | None = None
) -> VerificationReport:
    """Check the packing condition; every violating pair is reported.

    With no precomputed matrix, distances are found by per-class BFS truncated
    at the class color, which is much cheaper than an all-pairs matrix on
    instances with hundreds of vertices.
    """
    if len(coloring.colors) != g.n:
        raise ColoringError(
            f"partial coloring: {len(coloring.colors)} colors for {g.n} vertices"
        )
    violations: list[tuple[int, int, int, int]] = []
    for color, members in sorted(coloring.color_classes().items()):
        if len(members) < 2:
            continue
        mset = set(members)
        if dist is not None:
            for a in range(len(members)):
                u = members[a]
                for b in range(a + 1, len(members)):
                    v = members[b]
                    d = dist.dist(u, v)
                    if d <= color:
                        violations.append((u, v, color, int(d)))
        else:
            for u in members:
                for v, d in bfs_distances(g, u, cutoff=color).items():
                    if v > u and v in mset and d <= color:
                        violations.append((u, v, color, d))
    violations.sort()
    return VerificationReport(
        valid=not violations,
        violations=tuple(violations),
        colors_used=frozenset(coloring.colors),
    )


# ---------------------------------------------------------------------------
# Constructive colorings
# ---------------------------------------------------------------------------

def lift_to_fssd(base: Graph, c: PackingColoring, m: int) -> PackingColoring:
    """Push a valid coloring of ``base`` onto ``fssd(base, m)``.

    New degree-2 vertices take color 1 and every original vertex u takes
    ``c(u) + 1``.  Distances between originals double under the subdivision,
    so the shifted classes stay packings; the result uses k(base)+1 colors.
    """
    rep = verify(base, c)
    if not rep.valid:
        raise ColoringError(f"input coloring is invalid ({len(rep.violations)} violations)")
    lifted = fssd(base, m)
    colors = [cv + 1 for cv in c.colors] + [1] * (lifted.n - base.n)
    return PackingColoring(tuple(colors))


def pattern_fssd_complete(n: int, m: int) -> PackingColoring:
    """(n+1)-coloring of fssd(K_n, m): originals 2..n+1, the rest color 1."""
    if n < 1 or m < 1:
        raise ColoringError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    base = generate(FamilySpec.complete(n))[0]
    return lift_to_fssd(base, PackingColoring(tuple(range(1, n + 1))), m)


def pattern_fssd_bipartite(g: Graph, m: int) -> PackingColoring:
    """Coloring of fssd(g, m) for bipartite g with at most 3 colors.

    Subdivided vertices get 1, one side gets 2, the other 3.  Same-side
    originals sit at distance >= 4 after subdivision, so both classes are
    fine on any bipartite input; 3 is the exact optimum once g is connected
    with at least 3 vertices.
    """
    st = stats(g)
    if not st.is_bipartite:
        raise ColoringError("graph is not bipartite")
    lifted = fssd(g, m)
    colors = [1] * lifted.n
    side_a, side_b = st.bipartition
    for v in side_a:
        colors[v] = 2
    for v in side_b:
        colors[v] = 3
    return PackingColoring(tuple(colors))


def pattern_fssd_cycle(n: int, m: int) -> PackingColoring:
    """Coloring of fssd(C_n, m): 3 colors for even n, 4 for odd n.

    Even cycles use the bipartite sides; odd cycles color the rim
    2,3,2,3,...,2,3,4 with all subdivided vertices on color 1.
    """
    if n < 3 or m < 1:
        raise ColoringError(f"need n >= 3 and m >= 1, got n={n}, m={m}")
    lifted = generate(FamilySpec.fssd(FamilySpec.cycle(n), m))[0]
    colors = [1] * lifted.n
    if n % 2 == 0:
        for i in range(n):
            colors[i] = 2 if i % 2 == 0 else 3
    else:
        for i in range(n - 1):
            colors[i] = 2 if i % 2 == 0 else 3
        colors[n - 1] = 4
    return PackingColoring(tuple(colors))


def _corona_path_colors(graph: Graph, colors: list[int]) -> None:
    # attached-path vertices alternate 2,3 starting at 2 on position 1
    for v, lab in enumerate(graph.labels):
        if lab.kind == COPY_VERTEX:
            colors[v] = 2 if lab.indices[1] % 2 == 1 else 3


def pattern_fssd_kn_corona(n: int, p: int, m: int) -> PackingColoring:
    """(n+3)-coloring of fssd(K_n * P_p, m).

    All subdivided and connector vertices get 1, each attached path
    alternates 2,3, and hub u_i gets the dedicated color 3+i.
    """
    if n < 3 or p < 2 or m < 1:
        raise ColoringError(f"need n >= 3, p >= 2, m >= 1, got n={n}, p={p}, m={m}")
    spec = FamilySpec.fssd(
        FamilySpec.corona(FamilySpec.complete(n), FamilySpec.path(p)), m
    )
    lifted = generate(spec)[0]
    colors = [1] * lifted.n
    _corona_path_colors(lifted, colors)
    for v, lab in enumerate(lifted.labels):
        if lab.kind == ORIGINAL:
            colors[v] = 3 + lab.indices[0]
    return PackingColoring(tuple(colors))


# Rim color digits for fssd(C_n * P_p, m), transcribed segment by segment:
# explicit strings for the named small n, and (prefix, repeated block, suffix)
# per residue of n mod 6 otherwise.  Each digit is the color of the next u_i.
_CN_SPECIAL = {
    4: "4567",
    5: "45678",
    7: "4564578",
    8: "75467456",
    11: "75465745648",
}
_CN_RESIDUE = {
    0: ("", "456457", ""),
    1: ("7546574567456", "457456", ""),
    2: ("75465745674564", "754654", ""),
    3: ("4657", "456457", "45675"),
    4: ("", "456457", "4567"),
    5: ("754657456", "457456", "75467546"),
}


def cn_corona_digits(n: int) -> list[int]:
    """Rim color sequence for the n >= 4 cases, length-checked against n."""
    if n in _CN_SPECIAL:
        digits = _CN_SPECIAL[n]
    else:
        prefix, block, suffix = _CN_RESIDUE[n % 6]
        fill = n - len(prefix) - len(suffix)
        if fill < 0 or fill % len(block) != 0:
            raise ColoringError(f"no rim pattern assembles to length {n}")
        digits = prefix + block * (fill // len(block)) + suffix
    if len(digits) != n:
        raise ColoringError(f"rim pattern for n={n} has length {len(digits)}")
    return [int(ch) for ch in digits]


def pattern_fssd_cn_corona(
    n: int, p: int, m: int
) -> tuple[PackingColoring, VerificationReport]:
    """Coloring of fssd(C_n * P_p, m) from the tabulated rim patterns.

    Returns the coloring together with its verification report: a failing
    pattern is surfaced to the caller instead of being repaired or hidden.
    Uses at most 6 colors for n = 3 (C_3 is K_3), 8 for n in {5, 7, 11},
    and 7 otherwise.
    """
    if n < 3 or p < 2 or m < 1:
        raise ColoringError(f"need n >= 3, p >= 2, m >= 1, got n={n}, p={p}, m={m}")
    spec = FamilySpec.fssd(FamilySpec.corona(FamilySpec.cycle(n), FamilySpec.path(p)), m)
    lifted = generate(spec)[0]
    if n == 3:
        coloring = pattern_fssd_kn_corona(3, p, m)  # identical graph, hub colors 4..6
    else:
        digits = cn_corona_digits(n)
        colors = [1] * lifted.n
        _corona_path_colors(lifted, colors)
        for v, lab in enumerate(lifted.labels):
            if lab.kind == ORIGINAL:
                colors[v] = digits[lab.indices[0] - 1]
        coloring = PackingColoring(tuple(colors))
    return coloring, verify(lifted, coloring)


def pattern_fssd_splitting_cycle(n: int, m: int) -> PackingColoring:
    """Coloring of fssd(S'(C_n), m): 3 colors for even n, 5 for odd n.

    Rim vertices alternate 2,3 and each shadow vertex v_i repeats the color
    of u_i; for odd n the last pair breaks the alternation and takes the
    fresh colors 4 and 5.
    """
    if n < 3 or m < 1:
        raise ColoringError(f"need n >= 3 and m >= 1, got n={n}, m={m}")
    spec = FamilySpec.fssd(FamilySpec.split(FamilySpec.cycle(n)), m)
    lifted = generate(spec)[0]
    colors = [1] * lifted.n

    def rim_color(i: int) -> int:  # 1-based position on the cycle
        return 2 if i % 2 == 1 else 3

    for v, lab in enumerate(lifted.labels):
        i = lab.indices[0]
        if lab.kind == ORIGINAL:
            colors[v] = 4 if (n % 2 == 1 and i == n) else rim_color(i)
        elif lab.kind == SPLIT_COPY:
            colors[v] = 5 if (n % 2 == 1 and i == n) else rim_color(i)
    return PackingColoring(tuple(colors))


def pattern_fssd_splitting_complete(n: int, m: int) -> PackingColoring:
    """(n+2)-coloring of fssd(S'(K_n), m): shadows all 2, hubs 3..n+2, rest 1."""
    if n < 3 or m < 1:
        raise ColoringError(f"need n >= 3 and m >= 1, got n={n}, m={m}")
    spec = FamilySpec.fssd(FamilySpec.split(FamilySpec.complete(n)), m)
    lifted = generate(spec)[0]
    colors = [1] * lifted.n
    for v, lab in enumerate(lifted.labels):
        if lab.kind == ORIGINAL:
            colors[v] = 2 + lab.indices[0]
        elif lab.kind == SPLIT_COPY:
            colors[v] = 2
    return PackingColoring(tuple(colors))


def greedy_coloring(g: Graph, order: Sequence[int]) -> PackingColoring:
    """Assign each vertex the smallest feasible color along ``order``.

    Always produces a valid coloring; the color count depends on the order
    and is only an upper bound on the optimum.
    """
    if sorted(order) != list(range(g.n)):
        raise ColoringError("order must be a permutation of all vertex ids")
    dm = all_pairs_distances(g)
    colors = [0] * g.n
    by_color: dict[int, list[int]] = {}
    for v in order:
        c = 1
        while any(dm.dist(v, w) <= c for w in by_color.get(c, ())):
            c += 1
        colors[v] = c
        by_color.setdefault(c, []).append(v)
    return PackingColoring(tuple(colors))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def coloring_to_dict(c: PackingColoring, graph_name: str) -> dict:
    return {
        "graph_name": graph_name,
        "n": len(c.colors),
        "k": c.k,
        "colors": list(c.colors),
    }


def coloring_from_dict(obj: Mapping) -> tuple[PackingColoring, str]:
    try:
        colors = tuple(int(c) for c in obj["colors"])
        name = str(obj.get("graph_name", ""))
        n = int(obj["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ColoringError(f"malformed coloring object: {exc}") from exc
    if len(colors) != n:
        raise ColoringError(f"coloring lists {len(colors)} colors but n={n}")
    return PackingColoring(colors), name
