"""Core graph type, graph6 and edge-list codecs, and structural predicates.

Vertices are the integers 0..n-1.  Graphs are simple (no loops, no parallel
edges), undirected, and immutable once constructed.  Adjacency is stored both
as neighbor tuples and as one bitmask per vertex; the bitmasks keep the
breadth-first traversals used throughout the package cheap at the small
orders this library targets.

graph6 bit layout, which round-trips bit-exactly here: a record is
``<header><payload>``.  The header is ``chr(n + 63)`` for n <= 62,
``"~"`` plus three characters (18-bit big-endian value, 6 bits per
character) for 63 <= n <= 258047, and ``"~~"`` plus six characters beyond
that.  The payload packs the upper triangle of the adjacency matrix column
by column (x01, x02, x12, x03, x13, x23, ...) into 6-bit groups, most
significant bit first, zero padded to a multiple of six, each group stored
as ``chr(value + 63)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Raised for malformed graph6 records or edge-list documents."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph but got none.

    ``pair`` holds one unreachable vertex pair (u, v) as evidence.
    """

    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(
            "graph is disconnected: no path between %d and %d" % pair
        )


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "bits", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("graph order must be at least 1, got %r" % (n,))
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%r, %r) out of range for n=%d" % (u, v, n))
            if u == v:
                raise ValueError("self-loop at vertex %d" % u)
            norm.append((u, v) if u < v else (v, u))
        ordered = tuple(sorted(norm))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError("duplicate edge (%d, %d)" % a)
        self.n = n
        self.edges = ordered
        bits = [0] * n
        for u, v in ordered:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.bits = tuple(bits)
        self.adj = tuple(
            tuple(_iter_bits(mask)) for mask in self.bits
        )
        self._hash = hash((n, ordered))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path distances of a connected graph.

    ``d[u][v]`` is the hop distance, ``ecc[v]`` the eccentricity of v.
    """

    n: int
    d: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return max(self.ecc)


def _bfs_distances(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    bits = g.bits
    frontier = 1 << src
    seen = frontier
    level = 0
    while frontier:
        spread = 0
        m = frontier
        while m:
            low = m & -m
            spread |= bits[low.bit_length() - 1]
            m ^= low
        frontier = spread & ~seen
        seen |= frontier
        level += 1
        m = frontier
        while m:
            low = m & -m
            dist[low.bit_length() - 1] = level
            m ^= low
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; raises DisconnectedGraphError with a witness pair."""
    rows = []
    for src in range(g.n):
        row = _bfs_distances(g, src)
        if src == 0:
            for v, dv in enumerate(row):
                if dv < 0:
                    raise DisconnectedGraphError((0, v))
        rows.append(tuple(row))
    return DistanceMatrix(
        n=g.n,
        d=tuple(rows),
        ecc=tuple(max(row) for row in rows),
    )


def _reach_mask(bits: tuple[int, ...], start: int, allowed: int) -> int:
    # Closure of `start` inside the vertex set `allowed` (bitmask).
    seen = 1 << start
    frontier = seen
    while frontier:
        spread = 0
        m = frontier
        while m:
            low = m & -m
            spread |= bits[low.bit_length() - 1]
            m ^= low
        frontier = spread & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    full = (1 << g.n) - 1
    return _reach_mask(g.bits, 0, full) == full


def _connected_without(g: Graph, removed: int) -> bool:
    allowed = ((1 << g.n) - 1) & ~removed
    if allowed == 0:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return _reach_mask(g.bits, start, allowed) == allowed


def is_cut_vertex(g: Graph, v: int) -> bool:
    if not (0 <= v < g.n):
        raise ValueError("vertex %r out of range" % (v,))
    if g.n == 1:
        return False
    return not _connected_without(g, 1 << v)


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertex deletions that disconnect g.

    Exhaustive search over deletion sets in increasing size; complete
    graphs get the usual convention n - 1.  Requires a connected input.
    """
    if g.n < 2:
        raise ValueError("vertex connectivity needs order at least 2")
    if not is_connected(g):
        raise DisconnectedGraphError(_find_unreachable_pair(g))
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    for size in range(1, g.n - 1):
        for cut in itertools.combinations(range(g.n), size):
            removed = 0
            for v in cut:
                removed |= 1 << v
            if not _connected_without(g, removed):
                return size
    # Unreachable: a non-complete graph always has a cutset of size <= n - 2.
    raise AssertionError("no cutset found in non-complete graph")


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff g has more than k vertices and no cutset smaller than k."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.n <= k:
        return False
    if not is_connected(g):
        return False
    for size in range(1, k):
        for cut in itertools.combinations(range(g.n), size):
            removed = 0
            for v in cut:
                removed |= 1 << v
            if not _connected_without(g, removed):
                return False
    return True


def _find_unreachable_pair(g: Graph) -> tuple[int, int]:
    full = (1 << g.n) - 1
    seen = _reach_mask(g.bits, 0, full)
    missing = full & ~seen
    return (0, (missing & -missing).bit_length() - 1)


def degeneracy_check(g: Graph, k: int) -> tuple[bool, bool]:
    """Return (is k-degenerate, is maximal k-degenerate).

    Peels a minimum-degree vertex repeatedly, breaking ties toward the
    lowest label; k-degenerate iff the minimum degree never exceeds k.
    Maximal means adding any missing edge breaks k-degeneracy.
    """
    if k < 1:
        raise ValueError("k must be positive")
    degenerate = _peels_to_empty(g.n, list(g.bits), k)
    if not degenerate:
        return (False, False)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.bits[u] >> v & 1:
                continue
            bits = list(g.bits)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
            if _peels_to_empty(g.n, bits, k):
                return (True, False)
    return (True, True)


def _peels_to_empty(n: int, bits: list[int], k: int) -> bool:
    alive = (1 << n) - 1
    for _ in range(n):
        best = -1
        best_deg = n
        m = alive
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            deg = (bits[v] & alive).bit_count()
            if deg < best_deg:
                best_deg = deg
                best = v
        if best_deg > k:
            return False
        alive &= ~(1 << best)
    return True


def is_odd_tree(g: Graph) -> bool:
    """True iff g is a tree in which every vertex degree is odd."""
    if g.m != g.n - 1 or not is_connected(g):
        return False
    return all(len(nbrs) % 2 == 1 for nbrs in g.adj)


def graph_power(g: Graph, k: int) -> Graph:
    """k-th power: join vertices at distance at most k.  Needs connected input."""
    if k < 1:
        raise ValueError("power exponent must be positive")
    dm = distance_matrix(g)
    if k == 1:
        return g
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if dm.d[u][v] <= k
    ]
    return Graph(g.n, edges)


def relabel(g: Graph, order: tuple[int, ...]) -> Graph:
    """Graph with new label i standing for old vertex order[i]."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by `vertices`, relabeled in their sorted order."""
    keep = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    edges = [
        (pos[u], pos[v])
        for u, v in g.edges
        if u in pos and v in pos
    ]
    return Graph(len(keep), edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not (0 <= v < g.n):
        raise ValueError("vertex %r out of range" % (v,))
    if g.n == 1:
        raise ValueError("cannot delete the only vertex")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


# ---------------------------------------------------------------------------
# graph6

_G6_MAX_SHORT = 62
_G6_MAX_LONG = 258047


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (optional ">>graph6<<" prefix tolerated)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 record")
    data = []
    for ch in s:
        val = ord(ch)
        if not (63 <= val <= 126):
            raise GraphFormatError(
                "character %r outside graph6 range 63..126" % ch
            )
        data.append(val - 63)
    n, idx = _read_g6_order(data)
    if n < 1:
        raise GraphFormatError("graph6 record with order %d" % n)
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(data) - idx != need:
        raise GraphFormatError(
            "payload length %d, expected %d characters for n=%d"
            % (len(data) - idx, need, n)
        )
    bitstream = 0
    for val in data[idx:]:
        bitstream = bitstream << 6 | val
    total_bits = need * 6
    pad = total_bits - npairs
    if pad and bitstream & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 payload")
    edges = []
    bit = total_bits
    for col in range(1, n):
        for row in range(col):
            bit -= 1
            if bitstream >> bit & 1:
                edges.append((row, col))
    return Graph(n, edges)


def _read_g6_order(data: list[int]) -> tuple[int, int]:
    if data[0] != 63:
        return data[0], 1
    if len(data) < 2:
        raise GraphFormatError("truncated graph6 length header")
    if data[1] != 63:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 length header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        if n <= _G6_MAX_SHORT:
            raise GraphFormatError("non-minimal graph6 length header")
        return n, 4
    if len(data) < 8:
        raise GraphFormatError("truncated graph6 length header")
    n = 0
    for val in data[2:8]:
        n = n << 6 | val
    if n <= _G6_MAX_LONG:
        raise GraphFormatError("non-minimal graph6 length header")
    return n, 8


def write_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 record (no trailing newline)."""
    n = g.n
    if n <= _G6_MAX_SHORT:
        head = chr(n + 63)
    elif n <= _G6_MAX_LONG:
        head = "~" + "".join(
            chr((n >> shift & 63) + 63) for shift in (12, 6, 0)
        )
    else:
        head = "~~" + "".join(
            chr((n >> shift & 63) + 63) for shift in (30, 24, 18, 12, 6, 0)
        )
    bitstream = 0
    npairs = 0
    for col in range(1, n):
        bits_u = g.bits[col]
        for row in range(col):
            bitstream = bitstream << 1 | (bits_u >> row & 1)
            npairs += 1
    pad = (-npairs) % 6
    bitstream <<= pad
    chars = []
    total = npairs + pad
    for shift in range(total - 6, -6, -6):
        chars.append(chr((bitstream >> shift & 63) + 63))
    return head + "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list form: first line n, then one "u v" per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not rows:
        raise GraphFormatError("empty edge list document")
    first_no, first = rows[0]
    try:
        n = int(first)
    except ValueError:
        raise GraphFormatError(
            "line %d: expected vertex count, got %r" % (first_no, first)
        ) from None
    if n < 1:
        raise GraphFormatError("line %d: vertex count must be positive" % first_no)
    seen: set[tuple[int, int]] = set()
    edges = []
    for line_no, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(
                "line %d: expected 'u v', got %r" % (line_no, line)
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(
                "line %d: non-integer endpoint in %r" % (line_no, line)
            ) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                "line %d: endpoint out of range 0..%d" % (line_no, n - 1)
            )
        if u == v:
            raise GraphFormatError("line %d: self-loop at %d" % (line_no, u))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(
                "line %d: duplicate edge (%d, %d)" % (line_no, key[0], key[1])
            )
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)
