"""Bitmask graph core: the Graph value type and structural primitives.

Vertices are the integers 0..n-1 and every vertex set is a plain Python int
used as a bitmask, so neighborhood algebra (union, intersection, containment)
is single-word arithmetic for the n <= 64 graphs this library targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import CapabilityError

MAX_VERTICES = 64

# Ceiling for canonical_form (and therefore for atlas-style enumeration).
# Refinement plus pruned backtracking stays fast well past 12 on typical
# graphs; the bound exists so pathological symmetric inputs fail loudly
# instead of burning CPU.
CANONICAL_BOUND = 12

VertexSet = int  # bitmask over vertex ids
Edge = tuple[int, int]


def vertex_mask(vertices: Iterable[int]) -> int:
    """Bitmask of a collection of vertex ids."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_members(mask: int) -> tuple[int, ...]:
    """Ascending vertex ids of a bitmask."""
    return tuple(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the open neighborhood N(v) as a bitmask.  ``labels`` are
    optional display names; they never affect structure or identity of the
    algorithms, only presentation.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"neighborhood of {v} mentions out-of-range vertices")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in iter_bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric between {u} and {v}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("label count does not match vertex count")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels must be distinct")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Edge],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    def __repr__(self) -> str:  # keep huge bitmask tuples out of tracebacks
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> tuple[Edge, ...]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(rest):
                out.append((u, v))
        return tuple(out)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(nb.bit_count() for nb in self.adj)

    def has_isolated_vertex(self) -> bool:
        return any(nb == 0 for nb in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int):
        """Display name of v: its label when labeled, else the id itself."""
        return self.labels[v] if self.labels is not None else v

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on the bitmask ``keep``; also returns new->old ids."""
    old_ids = mask_members(keep)
    pos = {old: new for new, old in enumerate(old_ids)}
    adj = []
    for old in old_ids:
        nb = 0
        for u in iter_bits(g.adj[old] & keep):
            nb |= 1 << pos[u]
        adj.append(nb)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[old] for old in old_ids)
    return Graph(len(old_ids), tuple(adj), labels), old_ids


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adj[u] & g.adj[v]:
            return False
    return True


def _bfs_dist(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = [source]
    for v in queue:
        d = dist[v] + 1
        for u in iter_bits(g.adj[v]):
            if dist[u] < 0:
                dist[u] = d
                queue.append(u)
    return dist


def diameter(g: Graph) -> int | None:
    """Largest pairwise distance; None when g is disconnected (or empty)."""
    if g.n == 0:
        return None
    best = 0
    for s in range(g.n):
        dist = _bfs_dist(g, s)
        worst = max(dist)
        if -1 in dist:
            return None
        best = max(best, worst)
    return best


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle; None when g is acyclic.

    BFS from every vertex; a non-tree edge seen from source s witnesses a
    closed walk of length dist[u] + dist[w] + 1 through s, and for any s on a
    shortest cycle the bound is attained, so the minimum over sources is
    exact.
    """
    best: int | None = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = [s]
        for v in queue:
            d = dist[v] + 1
            for u in iter_bits(g.adj[v]):
                if dist[u] < 0:
                    dist[u] = d
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v] and dist[u] >= dist[v]:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-coloring (X, Y) as bitmasks, or None when an odd cycle exists.

    Deterministic: components are scanned in ascending root order and each
    root lands on the X side.
    """
    color = [-1] * g.n
    x_mask = 0
    y_mask = 0
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = [root]
        for v in queue:
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    for v in range(g.n):
        if color[v] == 0:
            x_mask |= 1 << v
        else:
            y_mask |= 1 << v
    return x_mask, y_mask


def is_planar(g: Graph) -> bool:
    """Exact planarity (left-right test via networkx)."""
    if g.n <= 4:
        return True
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(nxg, counterexample=False)
    return ok


def delete_closed_neighborhood(g: Graph, a: int) -> tuple[Graph, tuple[int, ...]]:
    """Remove N[a] for a nonempty vertex-set bitmask ``a``.

    Returns the remaining induced subgraph plus the new->old relabeling map.
    """
    if a == 0:
        raise ValueError("vertex set a must be nonempty")
    if a & ~g.full_mask:
        raise ValueError("vertex set a mentions out-of-range vertices")
    closed = a
    for v in iter_bits(a):
        closed |= g.adj[v]
    return induced_subgraph(g, g.full_mask & ~closed)


def matching_number(g: Graph) -> int:
    """Size of a maximum matching (memoized bitmask recursion, exact)."""
    return max_matching_of_edges(g.edges())


def max_matching_of_edges(edges: Iterable[Edge]) -> int:
    edges = tuple(edges)
    if not edges:
        return 0
    verts = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for u, v in edges:
        adj[pos[u]] |= 1 << pos[v]
        adj[pos[v]] |= 1 << pos[u]
    memo: dict[int, int] = {}

    def rec(avail: int) -> int:
        if avail == 0:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        best = rec(rest)  # v left unmatched
        for u in iter_bits(adj[v] & rest):
            best = max(best, 1 + rec(rest ^ (1 << u)))
        memo[avail] = best
        return best

    return rec((1 << len(verts)) - 1)


# ---------------------------------------------------------------------------
# Canonical forms


def _refined_colors(n: int, adj: Sequence[int]) -> tuple[int, ...]:
    """Equitable-style color refinement; colors are isomorphism-invariant."""
    colors = [adj[v].bit_count() for v in range(n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v]))))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return tuple(colors)
        colors = new


def _min_code(n: int, adj: Sequence[int], colors: Sequence[int]) -> list[int]:
    """Lexicographically least adjacency code over color-respecting orders.

    Positions are filled class by class (ascending refined color, an
    isomorphism invariant, so the restriction preserves canonicity).  Twin
    vertices -- interchangeable by a transposition automorphism -- are
    branched only once per node.
    """
    class_seq = sorted(colors)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)

    placed: list[int] = []
    placed_mask = 0
    rows = [0] * n
    best: list[int] | None = None

    def dfs(i: int, tight: bool) -> None:
        nonlocal best, placed_mask
        if i == n:
            if best is None or rows < best:
                best = rows.copy()
            return
        tried: list[int] = []
        for v in by_color[class_seq[i]]:
            if placed_mask >> v & 1:
                continue
            vb = 1 << v
            if any(
                (adj[u] ^ adj[v]) & ~((1 << u) | vb) == 0 for u in tried
            ):
                continue  # twin of an already-tried sibling
            tried.append(v)
            row = 0
            av = adj[v]
            for u in placed:
                row = (row << 1) | (av >> u & 1)
            if tight and best is not None:
                if row > best[i]:
                    continue
                child_tight = row == best[i]
            else:
                child_tight = False
            rows[i] = row
            placed.append(v)
            placed_mask |= vb
            dfs(i + 1, child_tight if best is not None else tight)
            placed.pop()
            placed_mask ^= vb
        rows[i] = 0

    dfs(0, True)
    assert best is not None
    return best


def canonical_key(n: int, adj: Sequence[int], bound: int = CANONICAL_BOUND) -> bytes:
    if n > bound:
        raise CapabilityError(
            f"canonical form limited to {bound} vertices, got {n}"
        )
    if n <= 1:
        return bytes([n])
    colors = _refined_colors(n, adj)
    rows = _min_code(n, adj, colors)
    acc = 0
    for i in range(1, n):
        acc = (acc << i) | rows[i]
    total = n * (n - 1) // 2
    pad = (-total) % 8
    acc <<= pad
    return bytes([n]) + acc.to_bytes((total + pad) // 8, "big")


def canonical_form(g: Graph, bound: int = CANONICAL_BOUND) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (n <= bound)."""
    return canonical_key(g.n, g.adj, bound)


def graph_from_canonical(key: bytes) -> Graph:
    """Rebuild the canonical representative encoded by ``canonical_form``."""
    n = key[0]
    if n <= 1:
        return Graph(n, (0,) * n)
    total = n * (n - 1) // 2
    acc = int.from_bytes(key[1:], "big") >> ((-total) % 8)
    adj = [0] * n
    for i in range(n - 1, 0, -1):
        row = acc & ((1 << i) - 1)
        acc >>= i
        # bit for placed position j sits at significance i-1-j
        for j in range(i):
            if row >> (i - 1 - j) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))
