"""Slow, definition-level reference implementations used to check the package.

Everything here is written straight from the definitions (subset sweeps,
permutation backtracking, Kuratowski case analysis) with no shared code or
shared ideas with the library's algorithms, so agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations, permutations

from totaldom import Graph


# ---------------------------------------------------------------------------
# builders


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# subset-sweep oracles


def brute_total_dominating_sets(g: Graph) -> list[int]:
    """Every TDS of g as a bitmask, by scanning all 2^n subsets."""
    out = []
    for s in range(1 << g.n):
        if all(g.adj[v] & s for v in range(g.n)):
            out.append(s)
    return out


def brute_minimal_tds(g: Graph) -> list[int]:
    """Minimal TDSs via pairwise proper-subset filtering (no shortcuts)."""
    tds = brute_total_dominating_sets(g)
    minimal = []
    for s in tds:
        if not any(t != s and t & s == t for t in tds):
            minimal.append(s)
    return sorted(minimal)


def brute_minimal_tds_monotone(g: Graph) -> list[int]:
    """Minimal TDSs via single-vertex removal tests.

    Domination survives adding vertices, so a TDS is minimal exactly when no
    one-vertex removal is still a TDS.  Quadratic in the subset count instead
    of the pairwise filter's square, which keeps n around 12 affordable.
    """
    tds = set(brute_total_dominating_sets(g))
    out = []
    for s in sorted(tds):
        rest = s
        minimal = True
        while rest:
            bit = rest & -rest
            if s ^ bit in tds:
                minimal = False
                break
            rest ^= bit
        if minimal:
            out.append(s)
    return out


def brute_minimal_transversals(ground: int, edges) -> list[int]:
    """Minimal hitting sets of a set family by full subset sweep."""
    edges = list(edges)
    hitting = [
        s for s in range(1 << ground) if all(e & s for e in edges)
    ]
    minimal = []
    for s in hitting:
        if not any(t != s and t & s == t for t in hitting):
            minimal.append(s)
    return sorted(minimal)


def brute_packing_number(g: Graph) -> int:
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    best = 0
    for s in range(1 << g.n):
        members = [v for v in range(g.n) if s >> v & 1]
        ok = all(
            closed[u] & closed[v] == 0
            for i, u in enumerate(members)
            for v in members[i + 1 :]
        )
        if ok:
            best = max(best, len(members))
    return best


def brute_diameter(g: Graph) -> int | None:
    """Floyd-Warshall all-pairs longest shortest path."""
    if g.n == 0:
        return None
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                alt = dist[i][k] + dist[k][j]
                if alt < dist[i][j]:
                    dist[i][j] = alt
    worst = max(dist[i][j] for i in range(g.n) for j in range(g.n))
    return None if worst == inf else int(worst)


def brute_girth(g: Graph) -> int | None:
    """Shortest cycle: for each edge, its removal distance plus one."""
    best = None
    for u, v in g.edges():
        dist = {u: 0}
        frontier = [u]
        while frontier:
            nxt = []
            for a in frontier:
                for b in range(g.n):
                    if a == u and b == v:
                        continue  # the deleted edge, both directions
                    if a == v and b == u:
                        continue
                    if g.adj[a] >> b & 1 and b not in dist:
                        dist[b] = dist[a] + 1
                        nxt.append(b)
            frontier = nxt
        if v in dist:
            cand = dist[v] + 1
            if best is None or cand < best:
                best = cand
    return best


# ---------------------------------------------------------------------------
# isomorphism


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking vertex mapping with degree pruning."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    n = g1.n
    deg1 = [g1.adj[v].bit_count() for v in range(n)]
    deg2 = [g2.adj[v].bit_count() for v in range(n)]
    if sorted(deg1) != sorted(deg2):
        return False
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if used[c] or deg1[i] != deg2[c]:
                continue
            ok = True
            for j in range(i):
                if (g1.adj[i] >> j & 1) != (g2.adj[c] >> mapping[j] & 1):
                    ok = False
                    break
            if ok:
                mapping[i] = c
                used[c] = True
                if extend(i + 1):
                    return True
                used[c] = False
                mapping[i] = -1
        return False

    return extend(0)


def all_graphs_up_to_iso(n: int, connected_only: bool = False) -> list[Graph]:
    """Every isomorphism class on n vertices by 2^(n choose 2) sweep.

    Quadratic-with-iso-checks dedup; fine for n <= 6.
    """
    pairs = list(combinations(range(n), 2))
    found: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.from_edges(n, edges)
        if connected_only and not _connected(g):
            continue
        key = (g.m, tuple(sorted(g.adj[v].bit_count() for v in range(n))))
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic(g, h) for h in bucket):
            bucket.append(g)
            found.append(g)
    return found


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in range(g.n):
            if g.adj[v] >> u & 1 and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def relabel(g: Graph, perm) -> Graph:
    """Apply the permutation new_id = perm[old_id]."""
    edges = [(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges()]
    return Graph.from_edges(g.n, edges)


def random_relabel(g: Graph, rng) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm)


# ---------------------------------------------------------------------------
# planarity by Kuratowski case analysis (n <= 7 only)


def brute_planar(g: Graph) -> bool:
    """Planarity for n <= 7: no K5 or K3,3 subdivision can hide there.

    With at most 7 vertices a K5 subdivision has at most 2 subdividing
    vertices and a K3,3 subdivision at most 1, so a direct case split over
    branch-vertex choices is exhaustive.
    """
    if g.n > 7:
        raise ValueError("this oracle only covers n <= 7")
    if g.n < 5:
        return True
    if _has_k5_subdivision(g) or _has_k33_subdivision(g):
        return False
    return True


def _has_k5_subdivision(g: Graph) -> bool:
    verts = range(g.n)
    for branch in combinations(verts, 5):
        bset = set(branch)
        extras = [v for v in verts if v not in bset]
        missing = [
            (u, v)
            for u, v in combinations(branch, 2)
            if not (g.adj[u] >> v & 1)
        ]
        if not missing:
            return True
        if len(missing) > len(extras):
            continue
        if len(missing) == 1:
            (u, v) = missing[0]
            for x in extras:
                if (g.adj[x] >> u & 1) and (g.adj[x] >> v & 1):
                    return True
            for x, y in permutations(extras, 2):
                if (
                    (g.adj[u] >> x & 1)
                    and (g.adj[x] >> y & 1)
                    and (g.adj[y] >> v & 1)
                ):
                    return True
        elif len(missing) == 2:
            (u1, v1), (u2, v2) = missing
            for x, y in permutations(extras, 2):
                if (
                    (g.adj[x] >> u1 & 1)
                    and (g.adj[x] >> v1 & 1)
                    and (g.adj[y] >> u2 & 1)
                    and (g.adj[y] >> v2 & 1)
                ):
                    return True
    return False


def _has_k33_subdivision(g: Graph) -> bool:
    verts = range(g.n)
    for six in combinations(verts, 6):
        extras = [v for v in verts if v not in six]
        rest = list(six)
        first = rest[0]
        for mates in combinations(rest[1:], 2):
            side_a = {first, *mates}
            side_b = [v for v in six if v not in side_a]
            missing = [
                (a, b)
                for a in side_a
                for b in side_b
                if not (g.adj[a] >> b & 1)
            ]
            if not missing:
                return True
            if len(missing) == 1 and extras:
                a, b = missing[0]
                for x in extras:
                    if (g.adj[x] >> a & 1) and (g.adj[x] >> b & 1):
                        return True
    return False
