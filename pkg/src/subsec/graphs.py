"""Immutable simple graphs: construction, named generators, canonical-form
enumeration of small connected graphs, and graph6 / edge-list I/O.

Vertices are the integers ``0..n-1``. Adjacency is stored as one bitmask per
vertex, which keeps set operations (coverage, neighborhood unions) cheap for
the exact solvers built on top.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction (bad vertex id, self-loop, bad family size)."""


class ParseError(ValueError):
    """Malformed graph6 or edge-list input.

    ``line_number`` is 1-based when the error came from a multi-line stream,
    else None.
    """

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj_masks[v]`` is the neighbor set of v as a bitmask. Instances are
    immutable and safe to share across workers.
    """

    n: int
    adj_masks: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj_masks) != self.n:
            raise GraphError(f"adjacency length {len(self.adj_masks)} != n={self.n}")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj_masks):
            if mask & ~full:
                raise GraphError(f"neighbor id out of range at vertex {v}")
            if mask >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                if not self.adj_masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @cached_property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self.adj_masks) // 2

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighborhoods N[v] = {v} | adj(v), as bitmasks."""
        return tuple(mask | (1 << v) for v, mask in enumerate(self.adj_masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self.adj_masks[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            rest = self.adj_masks[u] >> (u + 1) << (u + 1)
            while rest:
                low = rest & -rest
                out.append((u, low.bit_length() - 1))
                rest ^= low
        return out


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a graph with ``universe`` vertices."""

    universe: int
    members: frozenset[int]

    def __post_init__(self):
        for v in self.members:
            if not 0 <= v < self.universe:
                raise GraphError(f"vertex {v} outside universe 0..{self.universe - 1}")

    @classmethod
    def of(cls, universe: int, members: Iterable[int]) -> "VertexSet":
        return cls(universe, frozenset(members))

    @classmethod
    def from_mask(cls, universe: int, mask: int) -> "VertexSet":
        return cls(universe, frozenset(_iter_bits(mask)))

    @cached_property
    def mask(self) -> int:
        out = 0
        for v in self.members:
            out |= 1 << v
        return out

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted())


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    masks = [0] * n
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Raises GraphError on out-of-range ids or self-loops.
    """
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


FAMILIES = ("path", "cycle", "star", "complete", "wheel", "random")


def generate(family: str, n: int, p: float | None = None, seed: int | None = None) -> Graph:
    """Named graph generators.

    path/cycle/complete are the usual graphs on n vertices. star(n) is
    K_{1,n-1} with center 0. wheel(n) is a cycle on rim vertices 0..n-1 plus
    a hub vertex n adjacent to the whole rim (n+1 vertices total). random(n)
    is an Erdos-Renyi draw: each pair (u,v) with u<v is kept iff the next
    value of a generator seeded with ``seed`` is below p, so corpora are
    reproducible; p and seed are required.
    """
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}")
    if n < 1:
        raise GraphError("n must be >= 1")
    if family == "path":
        return _graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return _graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "star":
        if n < 2:
            raise GraphError("star needs n >= 2")
        return _graph_from_edges(n, [(0, i) for i in range(1, n)])
    if family == "complete":
        return _graph_from_edges(n, combinations(range(n), 2))
    if family == "wheel":
        if n < 3:
            raise GraphError("wheel needs rim size n >= 3")
        rim = [(i, (i + 1) % n) for i in range(n)]
        spokes = [(i, n) for i in range(n)]
        return _graph_from_edges(n + 1, rim + spokes)
    # random
    if p is None or not 0.0 <= p <= 1.0:
        raise GraphError("random family needs p in [0,1]")
    if seed is None:
        raise GraphError("random family needs an explicit seed")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return _graph_from_edges(n, edges)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(mask.bit_count() for mask in g.adj_masks)


def is_star(g: Graph) -> bool:
    """True iff g is K_{1,m} for some m >= 1 (a center adjacent to all
    other vertices and no further edges; K_2 counts)."""
    return g.n >= 2 and g.m == g.n - 1 and max_degree(g) == g.n - 1


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        rest = frontier
        while rest:
            low = rest & -rest
            grow |= g.adj_masks[low.bit_length() - 1]
            rest ^= low
        frontier = grow & ~seen
        seen |= frontier
    return seen == g.full_mask


# ---------------------------------------------------------------------------
# graph6 codec
#
# Standard encoding: a size header N(n) followed by the upper triangle of the
# adjacency matrix in column order ((0,1), (0,2), (1,2), (0,3), ...), packed
# big-endian into 6-bit groups, each printed as chr(group + 63). The header is
# one byte for n <= 62, four bytes (0x7e prefix) up to 258047, and eight bytes
# (0x7e 0x7e prefix) beyond that. Padding bits are zero.
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size_groups(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [n >> shift & 63 for shift in (30, 24, 18, 12, 6, 0)]
    raise GraphError("graph too large for graph6")


def emit_graph6(g: Graph) -> str:
    groups = _g6_size_groups(g.n)
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.adj_masks[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                groups.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        groups.append(acc << (6 - nbits))
    return "".join(chr(x + 63) for x in groups)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line; tolerates and strips the optional
    '>>graph6<<' header."""
    text = line.rstrip("\n")
    if text.startswith(">>"):
        if not text.startswith(_G6_HEADER):
            raise ParseError("malformed graph6 header")
        text = text[len(_G6_HEADER):]
    if not text:
        raise ParseError("empty graph6 line")
    values = []
    for ch in text:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise ParseError(f"byte {ord(ch)} outside graph6 alphabet")
        values.append(code)
    pos = 0
    if values[0] != 63:
        n = values[0]
        pos = 1
    elif len(values) >= 2 and values[1] != 63:
        if len(values) < 4:
            raise ParseError("truncated graph6 size header")
        n = values[1] << 12 | values[2] << 6 | values[3]
        pos = 4
    else:
        if len(values) < 8:
            raise ParseError("truncated graph6 size header")
        n = 0
        for code in values[2:8]:
            n = n << 6 | code
        pos = 8
    nbits = n * (n - 1) // 2
    body = values[pos:]
    need = (nbits + 5) // 6
    if len(body) < need:
        raise ParseError(f"truncated graph6 body: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise ParseError(f"graph6 body longer than n={n} allows")
    masks = [0] * n
    idx = 0
    u, v = 0, 1
    for code in body:
        for shift in range(5, -1, -1):
            bit = code >> shift & 1
            if idx < nbits:
                if bit:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
                u += 1
                if u == v:
                    u, v = 0, v + 1
            elif bit:
                raise ParseError("nonzero padding in graph6 body")
            idx += 1
    return Graph(n, tuple(masks))


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blank lines. ParseErrors are
    re-raised with the 1-based line number attached."""
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except ParseError as exc:
            raise ParseError(str(exc), line_number=lineno) from None


# ---------------------------------------------------------------------------
# Edge-list text format: '#' comments, a "p <n>" size line, then "e <u> <v>"
# lines with 0-based ids.
# ---------------------------------------------------------------------------


def emit_edgelist(g: Graph) -> str:
    lines = [f"p {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if fields[0] != "p" or len(fields) != 2:
                raise ParseError("expected 'p <n>' size line", line_number=lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise ParseError(f"bad vertex count {fields[1]!r}", line_number=lineno) from None
            if n < 0:
                raise ParseError("vertex count must be nonnegative", line_number=lineno)
            continue
        if fields[0] != "e" or len(fields) != 3:
            raise ParseError(f"expected 'e <u> <v>' line, got {line!r}", line_number=lineno)
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"bad edge endpoints in {line!r}", line_number=lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"invalid edge ({u},{v}) for n={n}", line_number=lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("no 'p <n>' line found")
    return make_graph(n, edges)


# ---------------------------------------------------------------------------
# Canonical forms and exhaustive enumeration of small connected graphs.
#
# The canonical key of a graph is the lexicographically smallest upper
# triangle bit sequence (graph6 bit order) over all n! relabelings. Keys are
# kept as one integer segment per matrix column so prefixes can be compared
# level by level during the backtracking search.
# ---------------------------------------------------------------------------


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (key, perm) where perm[i] is the original vertex placed at
    position i in the minimizing relabeling."""
    n = g.n
    if n <= 1:
        return (), tuple(range(n))
    adj = g.adj_masks

    def segment(placed: list[int], count: int, v: int) -> int:
        seg = 0
        av = adj[v]
        for i in range(count):
            seg = seg << 1 | (av >> placed[i] & 1)
        return seg

    # Greedy seed: pick the smallest segment (then smallest id) at each level.
    best_perm = []
    best = []
    remaining = set(range(n))
    for level in range(n):
        pick = None
        pick_seg = None
        for v in sorted(remaining):
            seg = segment(best_perm, level, v)
            if pick_seg is None or seg < pick_seg:
                pick, pick_seg = v, seg
        best_perm.append(pick)
        remaining.discard(pick)
        if level >= 1:
            best.append(pick_seg)

    cur = [0] * (n - 1)
    perm = [0] * n
    best_perm = list(best_perm)

    def search(level: int, placed_mask: int, tight: bool):
        nonlocal best, best_perm
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            if level >= 1:
                seg = segment(perm, level, v)
                if tight and seg > best[level - 1]:
                    continue
                cur[level - 1] = seg
                sub_tight = tight and seg == best[level - 1]
            else:
                sub_tight = tight
            perm[level] = v
            if level + 1 == n:
                if cur < best:
                    best = cur.copy()
                    best_perm = perm.copy()
            else:
                search(level + 1, placed_mask | 1 << v, sub_tight)

    search(0, 0, True)
    return tuple(best), tuple(best_perm)


def canonical_key(g: Graph) -> tuple[int, ...]:
    return canonical_labeling(g)[0]


def canonical_form(g: Graph) -> Graph:
    """The canonically relabeled copy of g (identical for isomorphic inputs)."""
    _, perm = canonical_labeling(g)
    masks = [0] * g.n
    position = {orig: pos for pos, orig in enumerate(perm)}
    for pos, orig in enumerate(perm):
        rest = g.adj_masks[orig]
        while rest:
            low = rest & -rest
            masks[pos] |= 1 << position[low.bit_length() - 1]
            rest ^= low
    return Graph(g.n, tuple(masks))


ENUMERATION_LIMIT = 7


def enumerate_connected(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected simple
    graphs on n vertices, sorted by canonical key.

    Built by repeatedly attaching a new vertex to every nonempty subset of
    each (n-1)-vertex class representative; every connected graph arises this
    way because some vertex is always removable without disconnecting.
    """
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise GraphError(f"enumeration supports 1 <= n <= {ENUMERATION_LIMIT}")
    classes: dict[tuple[int, ...], Graph] = {(): Graph(1, (0,))}
    for size in range(2, n + 1):
        grown: dict[tuple[int, ...], Graph] = {}
        new = size - 1
        for parent in classes.values():
            for attach in range(1, 1 << new):
                masks = list(parent.adj_masks) + [attach]
                rest = attach
                while rest:
                    low = rest & -rest
                    masks[low.bit_length() - 1] |= 1 << new
                    rest ^= low
                child = Graph(size, tuple(masks))
                key = canonical_key(child)
                if key not in grown:
                    grown[key] = canonical_form(child)
        classes = grown
    return [classes[key] for key in sorted(classes)]


# ---------------------------------------------------------------------------
# Bundled corpus: every connected graph on at most 6 vertices, one canonical
# graph6 line each.
# ---------------------------------------------------------------------------

_CORPUS_RESOURCE = "connected_upto6.g6"


def bundled_corpus_lines() -> list[str]:
    data = resources.files(__package__).joinpath("data", _CORPUS_RESOURCE).read_text()
    return [line for line in data.splitlines() if line.strip()]


def bundled_corpus() -> list[Graph]:
    return [parse_graph6(line) for line in bundled_corpus_lines()]
