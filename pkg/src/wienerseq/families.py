"""Constructors for the extremal families and the standard small graphs.

Each family maximizes the distance sequence inside a graph class: the
path-complete graphs among all connected graphs of fixed order and size,
cycle powers among graphs of fixed even connectivity, path powers among
maximal k-degenerate graphs, and the odd caterpillars among trees with all
degrees odd.  Labelings are fixed so construction is reproducible:
clique or spine vertices come first, in order.
"""

from __future__ import annotations

from wienerseq.graphs import Graph, graph_power
from wienerseq.sequences import DistanceSequence


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star with center 0."""
    return Graph(n, [(0, i) for i in range(1, n)])


def path_complete(n: int, m: int) -> Graph:
    """Path-complete graph: clique K_q, a path on n-q vertices, and t edges
    joining the path's first vertex into the clique.

    Vertices 0..q-1 form the clique, q..n-1 the path in order; vertex q is
    joined to clique vertices 0..t-1.  The parameters are canonical:
    m = q(q-1)/2 + (n-q-1) + t with 1 <= t <= q-1, and m = n(n-1)/2 gives
    the complete graph.  Size ranges cover n-1 <= m <= n(n-1)/2.
    """
    pairs = n * (n - 1) // 2
    if not (n - 1 <= m <= pairs):
        raise ValueError("need n-1 <= m <= n(n-1)/2, got n=%d m=%d" % (n, m))
    if m == pairs:
        return complete(n)
    q, t = _path_complete_parameters(n, m)
    edges = [(u, v) for u in range(q) for v in range(u + 1, q)]
    edges.extend((i, i + 1) for i in range(q, n - 1))
    edges.extend((c, q) for c in range(t))
    g = Graph(n, edges)
    assert g.m == m, (n, m, q, t, g.m)
    return g


def _path_complete_parameters(n: int, m: int) -> tuple[int, int]:
    # For each clique order q the reachable sizes form the contiguous range
    # q(q-1)/2 + (n-q-1) + [1, q-1]; consecutive q ranges abut, so the
    # parameters are unique.
    for q in range(2, n):
        base = q * (q - 1) // 2 + (n - q - 1)
        if base + 1 <= m <= base + q - 1:
            return q, m - base
    raise AssertionError("no parameters for n=%d m=%d" % (n, m))


def cycle_power(n: int, h: int) -> Graph:
    """h-th power of the n-cycle."""
    return graph_power(cycle(n), h)


def path_power(n: int, k: int) -> Graph:
    """k-th power of the n-path."""
    if n == 1:
        return Graph(1)
    return graph_power(path(n), k)


def end_vertex_sequence_path_power(n: int, k: int) -> DistanceSequence:
    """Distances from vertex 0 in the k-th power of the n-path, closed form.

    With s = (n - 1) // k the sorted distances are 1..s each k times,
    then s + 1 repeated n - 1 - s*k times.
    """
    if not (1 <= k < n):
        raise ValueError("need 1 <= k < n, got n=%d k=%d" % (n, k))
    s = (n - 1) // k
    runs = [(d, k) for d in range(1, s + 1)]
    rest = n - 1 - s * k
    if rest:
        runs.append((s + 1, rest))
    return DistanceSequence(runs)


def odd_caterpillar(n: int) -> Graph:
    """The caterpillar on an even number of vertices with all degrees odd.

    For n >= 6: a spine path on n/2 + 1 vertices (labels 0..n/2) with one
    leaf hung on each internal spine vertex; leaf labels follow spine
    position.  For n = 4 this degenerates to the star on 4 vertices.
    """
    if n < 4 or n % 2:
        raise ValueError("defined for even n >= 4, got %r" % (n,))
    if n == 4:
        return star(4)
    half = n // 2
    edges = [(i, i + 1) for i in range(half)]
    edges.extend((i, half + i) for i in range(1, half))
    return Graph(n, edges)


def odd_caterpillar_increment(n: int) -> DistanceSequence:
    """Distance entries gained when growing the odd caterpillar from n-2 to n.

    The run-length form is (1^2, 2^3, 3^4, 4^4, ..., (n/2)^4); its length
    is 2n - 3.
    """
    if n < 6 or n % 2:
        raise ValueError("defined for even n >= 6, got %r" % (n,))
    runs = [(1, 2), (2, 3)]
    runs.extend((d, 4) for d in range(3, n // 2 + 1))
    return DistanceSequence(runs)


FAMILY_ARITY = {
    "pk": 2,
    "cyclepow": 2,
    "pathpow": 2,
    "oddcat": 1,
    "star": 1,
    "path": 1,
    "cycle": 1,
    "complete": 1,
}


def parse_family_spec(spec: str) -> Graph:
    """Build a graph from a family spec like "pk:6,8" or "cycle:8"."""
    name, sep, arg_text = spec.partition(":")
    name = name.strip()
    if name not in FAMILY_ARITY:
        raise ValueError("unknown family %r" % name)
    if not sep:
        raise ValueError("family %r needs arguments, e.g. %s:6" % (name, name))
    try:
        args = [int(a) for a in arg_text.split(",")]
    except ValueError:
        raise ValueError("bad family arguments %r" % arg_text) from None
    if len(args) != FAMILY_ARITY[name]:
        raise ValueError(
            "family %r takes %d argument(s), got %d"
            % (name, FAMILY_ARITY[name], len(args))
        )
    builders = {
        "pk": path_complete,
        "cyclepow": cycle_power,
        "pathpow": path_power,
        "oddcat": odd_caterpillar,
        "star": star,
        "path": path,
        "cycle": cycle,
        "complete": complete,
    }
    return builders[name](*args)
