"""Shrinking a graph by deleting the closed neighborhood of a matching.

The selected edges must form an induced matching: pairwise disjoint, with no
edge of the host running between two selected pairs.  Deleting N[A] for such
a selection drops the total domination number by exactly 2|A| whenever every
minimal total dominating set of the host has one size, and that property is
preserved by the deletion (when the remainder still has it defined).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .graphs import Edge, Graph, delete_closed_neighborhood


@dataclass(frozen=True)
class MatchingSelection:
    """Edges chosen for deletion, as (u, v) pairs with u < v."""

    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class ReductionResult:
    graph: Graph
    vertex_map: tuple[int, ...]  # new id -> old id
    is_empty: bool
    has_isolated: bool


def reduce_by_matching(g: Graph, selection: MatchingSelection) -> ReductionResult:
    """Delete the closed neighborhood of an induced matching.

    Raises ValidationError unless the selection is nonempty, each pair is an
    edge of g, the pairs are vertex-disjoint, and no g-edge joins two
    different pairs.
    """
    if g.has_isolated_vertex() or g.n == 0:
        raise ValidationError("host graph must have no isolated vertices")
    if not selection.edges:
        raise ValidationError("selection must contain at least one edge")

    seen = 0
    for u, v in selection.edges:
        if not (0 <= u < g.n and 0 <= v < g.n and u != v and g.has_edge(u, v)):
            raise ValidationError(f"({u}, {v}) is not an edge of the graph")
        pair = (1 << u) | (1 << v)
        if seen & pair:
            raise ValidationError(f"selected edges are not vertex-disjoint at ({u}, {v})")
        seen |= pair

    for u, v in selection.edges:
        for a, b in selection.edges:
            if (u, v) >= (a, b):
                continue
            cross = (g.adj[u] | g.adj[v]) & ((1 << a) | (1 << b))
            if cross:
                raise ValidationError(
                    f"selection is not induced: an edge joins pair ({u}, {v}) "
                    f"to pair ({a}, {b})"
                )

    remaining, vertex_map = delete_closed_neighborhood(g, seen)
    return ReductionResult(
        graph=remaining,
        vertex_map=vertex_map,
        is_empty=remaining.n == 0,
        has_isolated=remaining.has_isolated_vertex(),
    )
