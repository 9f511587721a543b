"""k-subdivision of a graph: every edge becomes a path with k edges.

The derived graph keeps the original vertex ids 0..n-1; the k-1 new interior
vertices of each replaced edge are appended after them, edges processed in
sorted (u, v) order and interior vertices in increasing distance from the
smaller endpoint. This makes id assignment (and everything downstream:
certificates, witnesses, reports) byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Union

from .graphs import Graph, GraphError


@dataclass(frozen=True)
class Original:
    """A vertex of the derived graph that was already a vertex of the base."""

    u: int

    def __str__(self) -> str:
        return f"Original({self.u})"


@dataclass(frozen=True)
class Internal:
    """Interior vertex of the path replacing base edge (u, v), u < v, at
    distance l from u (1 <= l <= k-1)."""

    u: int
    v: int
    l: int

    def __str__(self) -> str:
        return f"Internal({self.u},{self.v},{self.l})"


SubdividedVertex = Union[Original, Internal]


@dataclass(frozen=True, eq=False)
class SubdivisionMap:
    """The derived graph of a k-subdivision plus the bidirectional labeling
    between derived ids and base vertices/edge interiors."""

    base: Graph
    k: int
    derived: Graph
    labels: tuple[SubdividedVertex, ...]

    def label(self, derived_id: int) -> SubdividedVertex:
        return self.labels[derived_id]

    def internal_ids(self) -> tuple[int, ...]:
        return tuple(range(self.base.n, self.derived.n))

    @cached_property
    def _edge_ranks(self) -> dict[tuple[int, int], int]:
        return {edge: rank for rank, edge in enumerate(self.base.edges())}

    def _edge_rank(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        rank = self._edge_ranks.get((u, v))
        if rank is None:
            raise GraphError(f"({u},{v}) is not an edge of the base graph")
        return rank

    def superedge(self, u: int, v: int) -> tuple[int, ...]:
        """Derived-id sequence [u, x_1, ..., x_{k-1}, v] walking from u to v
        along the path that replaced base edge uv."""
        rank = self._edge_rank(u, v)
        base = self.base.n + rank * (self.k - 1)
        interior = list(range(base, base + self.k - 1))
        if u > v:
            interior.reverse()
        return (u, *interior, v)

    def superedge_vertex(self, u: int, v: int, l: int) -> int:
        """Derived id of the interior vertex at distance l from u along the
        superedge for base edge uv. Passing the endpoints in either order
        works; (v, u, l) names the same vertex as (u, v, k-l)."""
        if not 1 <= l <= self.k - 1:
            raise GraphError(f"interior distance l={l} outside 1..{self.k - 1}")
        return self.superedge(u, v)[l]


def subdivide(g: Graph, k: int) -> SubdivisionMap:
    """Replace each edge of g with a path of length k.

    The derived graph has n + (k-1)m vertices and km edges. k=1 returns g
    itself as the derived graph (same ids, no copy).
    """
    if k < 1:
        raise GraphError("subdivision parameter k must be >= 1")
    labels: list[SubdividedVertex] = [Original(u) for u in range(g.n)]
    if k == 1:
        return SubdivisionMap(base=g, k=1, derived=g, labels=tuple(labels))
    edges = g.edges()
    total = g.n + (k - 1) * len(edges)
    masks = [0] * total
    nxt = g.n
    for u, v in edges:
        chain = [u] + list(range(nxt, nxt + k - 1)) + [v]
        nxt += k - 1
        for a, b in zip(chain, chain[1:]):
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        labels.extend(Internal(u, v, l) for l in range(1, k))
    derived = Graph(total, tuple(masks))
    return SubdivisionMap(base=g, k=k, derived=derived, labels=tuple(labels))


def superedge_vertex(sm: SubdivisionMap, u: int, v: int, l: int) -> int:
    return sm.superedge_vertex(u, v, l)
