"""Total domination analysis built on the transversal machinery.

A set S totally dominates g when every vertex (including members of S) has a
neighbor in S; equivalently S hits every open neighborhood.  Everything here
routes through that correspondence: minimal total dominating sets are the
minimal transversals of the open-neighborhood hypergraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DominationUndefinedError, ValidationError
from .graphs import (
    Edge,
    Graph,
    diameter,
    iter_bits,
    mask_members,
    vertex_mask,
)
from .hypergraph import (
    SpernerFamily,
    all_minimal_transversals_have_size_k,
    enumerate_minimal_transversals,
    neighborhood_hypergraph,
)

CORE_COMPLETE = "complete"
CORE_MINIMAL_VALID = "minimal-valid"


def _require_total_domination(g: Graph) -> None:
    if g.n == 0:
        raise DominationUndefinedError("total domination undefined: graph has no vertices")
    for v in range(g.n):
        if g.adj[v] == 0:
            raise DominationUndefinedError(
                f"total domination undefined: vertex {g.label(v)} is isolated"
            )


def is_tds(g: Graph, s: int) -> bool:
    """True when every vertex of g has a neighbor in the bitmask s."""
    _require_total_domination(g)
    if s & ~g.full_mask:
        raise ValueError("vertex set mentions out-of-range vertices")
    return all(g.adj[v] & s for v in range(g.n))


def is_minimal_tds(g: Graph, s: int) -> bool:
    """True when s totally dominates but no single-vertex removal does."""
    if not is_tds(g, s):
        return False
    return not any(is_tds(g, s ^ (1 << v)) for v in iter_bits(s))


def mtds(g: Graph) -> SpernerFamily:
    """The family of all minimal total dominating sets of g."""
    return enumerate_minimal_transversals(neighborhood_hypergraph(g))


@dataclass(frozen=True)
class TotalDominationReport:
    gamma_t: int
    Gamma_t: int
    is_wtd: bool
    witness_min: int  # least-bitmask minimum-size minimal TDS
    witness_max: int  # least-bitmask maximum-size minimal TDS
    mtds_count: int


def report(g: Graph, family: SpernerFamily | None = None) -> TotalDominationReport:
    """Summarize minimal-TDS sizes; ``family`` may carry a precomputed mtds(g)."""
    fam = family if family is not None else mtds(g)
    sizes = [e.bit_count() for e in fam.edges]
    gamma = min(sizes)
    big_gamma = max(sizes)
    witness_min = min(e for e in fam.edges if e.bit_count() == gamma)
    witness_max = min(e for e in fam.edges if e.bit_count() == big_gamma)
    return TotalDominationReport(
        gamma_t=gamma,
        Gamma_t=big_gamma,
        is_wtd=gamma == big_gamma,
        witness_min=witness_min,
        witness_max=witness_max,
        mtds_count=len(fam.edges),
    )


@dataclass(frozen=True)
class RecognitionResult:
    """Uniform-size decision plus a certificate.

    ``witness`` is a minimal TDS: of size k when accepted, of a deviating
    size otherwise.
    """

    accepted: bool
    witness: int
    reason: str


def recognize_wtd_k(g: Graph, k: int) -> RecognitionResult:
    """Decide whether every minimal TDS of g has size exactly k (k >= 2)."""
    if k < 2:
        raise ValueError(f"uniform minimal-TDS size k must be at least 2, got {k}")
    h = neighborhood_hypergraph(g)
    decision = all_minimal_transversals_have_size_k(h, k)
    return RecognitionResult(decision.uniform, decision.witness, decision.reason)


@dataclass(frozen=True)
class DominatingEdgeSubgraph:
    """The dominating edges of g together with their endpoints.

    A dominating edge is an edge whose two endpoints form a TDS; the
    subgraph they span is not necessarily induced.  Only meaningful when
    gamma_t(g) = 2; otherwise ``defined`` is False and both tuples are
    empty.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    defined: bool

    @property
    def vertex_mask(self) -> int:
        return vertex_mask(self.vertices)


def dominating_edge_subgraph(g: Graph, family: SpernerFamily | None = None) -> DominatingEdgeSubgraph:
    _require_total_domination(g)
    fam = family if family is not None else mtds(g)
    if min(e.bit_count() for e in fam.edges) != 2:
        return DominatingEdgeSubgraph((), (), False)
    spanned = 0
    dom_edges = []
    for u, v in g.edges():
        pair = (1 << u) | (1 << v)
        if all(g.adj[w] & pair for w in range(g.n)):
            dom_edges.append((u, v))
            spanned |= pair
    return DominatingEdgeSubgraph(mask_members(spanned), tuple(dom_edges), True)


def _dominating_edge_exists(g: Graph) -> bool:
    if g.n == 0 or g.has_isolated_vertex():
        return False
    for u, v in g.edges():
        pair = (1 << u) | (1 << v)
        if all(g.adj[w] & pair for w in range(g.n)):
            return True
    return False


def packing_number(g: Graph, method: str = "auto") -> int:
    """Maximum number of vertices with pairwise disjoint closed neighborhoods.

    ``method="auto"`` uses the diameter shortcut whenever gamma_t(g) = 2 (a
    dominating edge exists): the packing number is then 2 iff the diameter is
    3, else 1.  ``method="exact"`` always takes the general route: a maximum
    independent set of the closed-neighborhood-intersection graph.
    """
    if method not in ("auto", "exact"):
        raise ValueError(f"unknown method {method!r}")
    if g.n == 0:
        return 0
    if method == "auto" and _dominating_edge_exists(g):
        return 2 if diameter(g) == 3 else 1
    closed = [g.closed_neighborhood(v) for v in range(g.n)]
    conflict = []
    for v in range(g.n):
        mask = 0
        for u in range(g.n):
            if u != v and closed[v] & closed[u]:
                mask |= 1 << u
        conflict.append(mask)
    memo: dict[int, int] = {}

    def best_packing(avail: int) -> int:
        if avail == 0:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        result = max(
            best_packing(rest),  # skip v
            1 + best_packing(rest & ~conflict[v]),  # take v
        )
        memo[avail] = result
        return result

    return best_packing(g.full_mask)


def minimal_vertex_covers(g: Graph | Iterable[Edge], n: int | None = None) -> SpernerFamily:
    """All inclusion-minimal vertex covers, as transversals of the edge family.

    Accepts a Graph or a bare edge collection (then ``n`` defaults to one
    past the largest endpoint).  An empty edge set is rejected: every set
    would be a cover and the minimal one is degenerate.
    """
    if isinstance(g, Graph):
        edges = g.edges()
        ground = g.n if n is None else n
    else:
        edges = tuple(g)
        ground = n if n is not None else (max((max(e) for e in edges), default=-1) + 1)
    if not edges:
        raise ValueError("minimal vertex covers of an empty edge set are not defined")
    masks = [(1 << u) | (1 << v) for u, v in edges]
    family = SpernerFamily(ground, tuple(sorted(set(masks))))
    return enumerate_minimal_transversals(family)


@dataclass(frozen=True)
class RealizedGraph:
    """Output of realize_mtds.

    Graph vertices come in three blocks: the family's support (ids given by
    ``ground_vertices``, a graph-id -> ground-id map), then one fresh vertex
    per minimal transversal of the family (``transversal_sets[i]`` is the
    ground bitmask realized by graph vertex ``len(ground_vertices) + i``),
    then any extension vertices.
    """

    graph: Graph
    ground_vertices: tuple[int, ...]
    transversal_sets: tuple[int, ...]


def realize_mtds(
    family: SpernerFamily,
    extension: Graph | None = None,
    core_edges: str | Iterable[Edge] = CORE_COMPLETE,
    labels: Sequence[str] | None = None,
) -> RealizedGraph:
    """Build a graph whose minimal total dominating sets are exactly ``family``.

    The family's support A becomes a core where every vertex is adjacent to
    at least one member of every family set (policy: "complete" joins all of
    A, "minimal-valid" greedily adds only edges needed for the condition, or
    pass explicit ground-id edges to be validated).  Each minimal transversal
    T of the family gets a fresh vertex whose neighborhood is exactly T; an
    optional extension graph is attached with every extension vertex made
    adjacent to at least one member of every family set.

    Families with a singleton member are rejected: its element would have to
    be its own neighbor, and no minimal TDS family contains singletons.
    """
    for e in family.edges:
        if e.bit_count() < 2:
            raise ValidationError(
                f"family not realizable: member {set(mask_members(e))} has fewer than two vertices"
            )
    support = 0
    for e in family.edges:
        support |= e
    ground_vertices = mask_members(support)
    pos = {g_id: i for i, g_id in enumerate(ground_vertices)}
    a_size = len(ground_vertices)

    transversals = enumerate_minimal_transversals(family)
    t_sets = transversals.edges
    ext_n = extension.n if extension is not None else 0
    n = a_size + len(t_sets) + ext_n
    adj = [0] * n

    def connect(i: int, j: int) -> None:
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    local_sets = [
        vertex_mask(pos[v] for v in mask_members(e)) for e in family.edges
    ]
    if core_edges == CORE_COMPLETE:
        for i in range(a_size):
            for j in range(i + 1, a_size):
                connect(i, j)
    elif core_edges == CORE_MINIMAL_VALID:
        for i in range(a_size):
            for s in local_sets:
                others = s & ~(1 << i)
                if adj[i] & s == 0:
                    connect(i, (others & -others).bit_length() - 1)
    else:
        if isinstance(core_edges, str):
            raise ValidationError(
                f"unknown core-edges policy {core_edges!r}; "
                f"expected {CORE_COMPLETE!r}, {CORE_MINIMAL_VALID!r}, or explicit edges"
            )
        for u, v in core_edges:
            if u == v or (support >> u & 1) == 0 or (support >> v & 1) == 0:
                raise ValidationError(
                    f"explicit core edge ({u}, {v}) is not a pair of distinct support vertices"
                )
            connect(pos[u], pos[v])
        for i in range(a_size):
            for s, e in zip(local_sets, family.edges):
                if adj[i] & s == 0:
                    raise ValidationError(
                        f"explicit core edges leave vertex {ground_vertices[i]} with no neighbor in {set(mask_members(e))}"
                    )

    for t_index, t in enumerate(t_sets):
        fresh = a_size + t_index
        for v in mask_members(t):
            connect(fresh, pos[v])

    if extension is not None:
        base = a_size + len(t_sets)
        for u, v in extension.edges():
            connect(base + u, base + v)
        for w in range(ext_n):
            for s in local_sets:
                if adj[base + w] & s == 0:
                    connect(base + w, (s & -s).bit_length() - 1)

    graph_labels: tuple[str, ...] | None = None
    if labels is not None:
        if len(labels) != family.ground:
            raise ValidationError("ground labels must cover the whole ground set")
        named = [labels[v] for v in ground_vertices]
        for t in t_sets:
            named.append("v{" + ",".join(labels[v] for v in mask_members(t)) + "}")
        for w in range(ext_n):
            if extension is not None and extension.labels is not None:
                named.append(extension.labels[w])
            else:
                named.append(f"u{w}")
        graph_labels = tuple(named)

    return RealizedGraph(
        graph=Graph(n, tuple(adj), graph_labels),
        ground_vertices=ground_vertices,
        transversal_sets=t_sets,
    )
