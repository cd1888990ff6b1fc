"""Exhaustive small-graph searches with a persistent catalog.

Graphs are enumerated up to isomorphism by vertex augmentation, classified
by their total-domination profile, and checked against a registry of
boundary assertions (size, girth, and matching bounds that are conjectured
or proven for various planar and minimum-degree classes).  Results stream to
an append-only JSON-lines catalog keyed by canonical form, so an
interrupted run can resume without redoing finished work.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .errors import CapabilityError, DominationUndefinedError
from .graphs import (
    CANONICAL_BOUND,
    Graph,
    canonical_form,
    canonical_key,
    diameter,
    girth,
    graph_from_canonical,
    is_connected,
    is_planar,
    is_triangle_free,
    max_matching_of_edges,
    iter_bits,
)
from .graphio import GRAPH6, serialize_graph
from .domination import dominating_edge_subgraph, mtds, packing_number, report


@dataclass(frozen=True)
class SearchFilter:
    """What to enumerate: order range plus optional structural restrictions."""

    n_max: int
    n_min: int = 2
    require_connected: bool = True
    min_degree: int | None = None
    planar_only: bool = False
    triangle_free_only: bool = False

    def __post_init__(self) -> None:
        if self.n_max > CANONICAL_BOUND:
            raise CapabilityError(
                f"searches are capped at {CANONICAL_BOUND} vertices, got n_max={self.n_max}"
            )
        if self.n_min < 2:
            raise ValueError("n_min must be at least 2")
        if self.n_min > self.n_max:
            raise ValueError("n_min must not exceed n_max")
        if self.min_degree is not None and self.min_degree < 0:
            raise ValueError("min_degree must be nonnegative")


@dataclass(frozen=True)
class CatalogEntry:
    """Classification record for one isomorphism class.

    gamma_t, Gamma_t, is_wtd, and nu_gde are None when total domination is
    undefined (the graph has an isolated vertex); nu_gde is also None unless
    gamma_t is 2.  diameter is None for disconnected graphs, girth for
    forests.
    """

    canonical_key: str
    n: int
    m: int
    min_degree: int
    gamma_t: int | None
    Gamma_t: int | None
    is_wtd: bool | None
    rho: int
    diameter: int | None
    girth: int | None
    nu_gde: int | None
    planar: bool
    triangle_free: bool


def classify(g: Graph, key: bytes | None = None) -> CatalogEntry:
    """Compute the full catalog record for one graph."""
    if key is None:
        key = canonical_form(g)
    gamma_t = big_gamma = None
    is_wtd = None
    nu = None
    try:
        fam = mtds(g)
    except DominationUndefinedError:
        fam = None
    if fam is not None:
        rep = report(g, fam)
        gamma_t, big_gamma, is_wtd = rep.gamma_t, rep.Gamma_t, rep.is_wtd
        if gamma_t == 2:
            gde = dominating_edge_subgraph(g, fam)
            nu = max_matching_of_edges(gde.edges)
    return CatalogEntry(
        canonical_key=key.hex(),
        n=g.n,
        m=g.m,
        min_degree=g.min_degree(),
        gamma_t=gamma_t,
        Gamma_t=big_gamma,
        is_wtd=is_wtd,
        rho=packing_number(g),
        diameter=diameter(g),
        girth=girth(g),
        nu_gde=nu,
        planar=is_planar(g),
        triangle_free=is_triangle_free(g),
    )


def enumerate_graphs(filt: SearchFilter):
    """Yield (canonical key, graph) per isomorphism class, by level then key.

    Augmentation: each level-k class spawns level-(k+1) children by attaching
    a new vertex with every possible neighborhood.  With
    ``require_connected`` the new vertex always gets at least one neighbor
    and only connected classes are kept, which still reaches every connected
    graph (every connected graph has a non-cut vertex).  The planar and
    triangle-free restrictions prune whole subtrees: both properties are
    inherited by induced subgraphs, so a child can qualify only if its
    parent does.
    """
    level: dict[bytes, tuple[int, ...]] = {canonical_key(1, (0,)): (0,)}
    n = 1
    while True:
        if n >= filt.n_min:
            for key in sorted(level):
                adj = level[key]
                g = Graph(n, adj)
                if filt.require_connected and not is_connected(g):
                    continue
                if filt.min_degree is not None and g.min_degree() < filt.min_degree:
                    continue
                yield key, g
        if n == filt.n_max:
            return
        nxt: dict[bytes, tuple[int, ...]] = {}
        rejected: set[bytes] = set()
        lo = 1 if filt.require_connected else 0
        for adj in level.values():
            for nb in range(lo, 1 << n):
                if filt.triangle_free_only and any(
                    adj[u] & nb for u in iter_bits(nb)
                ):
                    continue
                child = tuple(
                    row | ((nb >> i & 1) << n) for i, row in enumerate(adj)
                ) + (nb,)
                key = canonical_key(n + 1, child)
                if key in nxt or key in rejected:
                    continue
                if filt.planar_only and not is_planar(Graph(n + 1, child)):
                    rejected.add(key)
                    continue
                nxt[key] = child
        level = nxt
        n += 1


def _wtd2(entry: CatalogEntry) -> bool:
    return bool(entry.is_wtd) and entry.gamma_t == 2


def _girth_at_most(entry: CatalogEntry, bound: int) -> bool:
    return entry.girth is None or entry.girth <= bound


# id -> (description, applies, holds); an assertion is violated by an entry
# where applies(entry) and not holds(entry)
ASSERTIONS: dict[str, tuple] = {
    "T12": (
        "planar, uniform size 2, min degree >= 3 forces at most 16 vertices",
        lambda e: bool(e.planar) and _wtd2(e) and e.min_degree >= 3,
        lambda e: e.n <= 16,
    ),
    "L12A": (
        "planar, uniform size 2, dominating-edge matching >= 3 forces at most 8 vertices",
        lambda e: bool(e.planar) and _wtd2(e) and (e.nu_gde or 0) >= 3,
        lambda e: e.n <= 8,
    ),
    "L12B": (
        "uniform size 2 with min degree >= 3 forces dominating-edge matching >= 2",
        lambda e: _wtd2(e) and e.min_degree >= 3,
        lambda e: (e.nu_gde or 0) >= 2,
    ),
    "P7A": (
        "planar, uniform size 2, min degree >= 3 forces matching exactly 2 or at most 8 vertices",
        lambda e: bool(e.planar) and _wtd2(e) and e.min_degree >= 3,
        lambda e: e.nu_gde == 2 or e.n <= 8,
    ),
    "T14": (
        "uniform minimal-TDS size with min degree >= 3 forces girth at most 12",
        lambda e: bool(e.is_wtd) and e.min_degree >= 3,
        lambda e: _girth_at_most(e, 12),
    ),
    "HR97": (
        "uniform minimal-TDS size with min degree >= 2 forces girth at most 14",
        lambda e: bool(e.is_wtd) and e.min_degree >= 2,
        lambda e: _girth_at_most(e, 14),
    ),
    "DIAM3": (
        "with gamma_t 2, packing number 2 is the same as diameter 3",
        lambda e: e.gamma_t == 2,
        lambda e: (e.diameter == 3) == (e.rho == 2),
    ),
    "T11EQ": (
        "triangle-free: the linear recognizer agrees with the enumeration route",
        lambda e: bool(e.triangle_free),
        lambda e: _t11_agrees(e),
    ),
}


def _t11_agrees(entry: CatalogEntry) -> bool:
    from .wtd2 import recognize_triangle_free_wtd2

    g = graph_from_canonical(bytes.fromhex(entry.canonical_key))
    return recognize_triangle_free_wtd2(g) == _wtd2(entry)


def resolve_assertion_ids(ids) -> tuple[str, ...]:
    """Normalize user-supplied assertion names; 'all' selects everything."""
    chosen: list[str] = []
    for raw in ids:
        name = raw.strip().upper()
        if not name:
            continue
        if name == "ALL":
            for known in ASSERTIONS:
                if known not in chosen:
                    chosen.append(known)
            continue
        if name not in ASSERTIONS:
            raise ValueError(
                f"unknown assertion id {raw!r}; known ids: {', '.join(ASSERTIONS)} (or 'all')"
            )
        if name not in chosen:
            chosen.append(name)
    if not chosen:
        raise ValueError("no assertion ids given")
    return tuple(chosen)


def _classify_payload(payload: tuple[bytes, int, tuple[int, ...]]) -> CatalogEntry:
    key, n, adj = payload
    return classify(Graph(n, adj), key=key)


def _load_existing(path: str) -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    fields = {f for f in CatalogEntry.__dataclass_fields__}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                entry = CatalogEntry(**{k: record[k] for k in fields})
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise ValueError(f"{path}:{lineno}: unreadable catalog line ({exc})") from exc
            entries[entry.canonical_key] = entry
    return entries


def run_search(
    filt: SearchFilter,
    assertion_ids,
    out_path: str | None = None,
    jobs: int = 1,
):
    """Enumerate, classify, persist, and check assertions.

    Returns (entries, report).  ``report`` maps each requested assertion id
    to how many entries it applied to and which canonical keys violate it,
    and carries a frontier note: the largest classified instance that is
    planar with uniform size 2 and minimum degree 3 (the open range for the
    size bounds), if any showed up.
    """
    ids = resolve_assertion_ids(assertion_ids)
    existing: dict[str, CatalogEntry] = {}
    if out_path is not None and os.path.exists(out_path):
        existing = _load_existing(out_path)

    entries: list[CatalogEntry] = []
    fresh: list[tuple[bytes, int, tuple[int, ...]]] = []
    order: list[str] = []
    for key, g in enumerate_graphs(filt):
        hexkey = key.hex()
        order.append(hexkey)
        if hexkey in existing:
            entries.append(existing[hexkey])
        else:
            fresh.append((key, g.n, g.adj))

    # classification results stream to the catalog as they finish, so an
    # interrupted run leaves a usable prefix behind (fresh payloads arrive in
    # ascending canonical-key order, keeping the file sorted per run)
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 and len(fresh) > 1 else None
    computed_iter = (
        pool.map(_classify_payload, fresh, chunksize=32)
        if pool is not None
        else map(_classify_payload, fresh)
    )
    computed: list[CatalogEntry] = []
    sink = open(out_path, "a", encoding="utf-8") if out_path is not None else None
    try:
        for entry in computed_iter:
            computed.append(entry)
            if sink is not None:
                record = asdict(entry)
                rep_graph = graph_from_canonical(bytes.fromhex(entry.canonical_key))
                record["graph6"] = serialize_graph(rep_graph, GRAPH6).strip()
                sink.write(json.dumps(record, sort_keys=True) + "\n")
                sink.flush()
    finally:
        if sink is not None:
            sink.close()
        if pool is not None:
            pool.shutdown()
    by_key = {e.canonical_key: e for e in entries}
    for entry in computed:
        by_key[entry.canonical_key] = entry
    entries = [by_key[h] for h in order]

    assertion_report: dict[str, dict] = {}
    for name in ids:
        _, applies, holds = ASSERTIONS[name]
        checked = 0
        violations: list[str] = []
        for entry in entries:
            if applies(entry):
                checked += 1
                if not holds(entry):
                    violations.append(entry.canonical_key)
        assertion_report[name] = {"checked": checked, "violations": violations}

    frontier_entry = None
    for entry in entries:
        if entry.planar and _wtd2(entry) and entry.min_degree >= 3:
            if frontier_entry is None or entry.n > frontier_entry.n:
                frontier_entry = entry
    search_report = {
        "classified": len(entries),
        "assertions": assertion_report,
        "frontier": {
            "n_max": filt.n_max,
            "largest_planar_wtd2_min_degree3": (
                None
                if frontier_entry is None
                else {"canonical_key": frontier_entry.canonical_key, "n": frontier_entry.n}
            ),
        },
    }
    return entries, search_report
