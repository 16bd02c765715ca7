"""Shared helpers: networkx conversion and hypothesis graph strategies."""

import networkx as nx
from hypothesis import strategies as st

from wienerseq import Graph


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def from_nx(G: nx.Graph) -> Graph:
    nodes = sorted(G.nodes())
    pos = {u: i for i, u in enumerate(nodes)}
    return Graph(len(nodes), [tuple(sorted((pos[u], pos[v]))) for u, v in G.edges()])


@st.composite
def connected_graphs(draw, min_n=1, max_n=10):
    # spanning edges first so every draw is connected
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    if n >= 2:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges.update(draw(st.lists(st.sampled_from(pairs), max_size=2 * n)))
    return Graph(n, sorted(edges))


@st.composite
def arbitrary_graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    edges = []
    if n >= 2:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return Graph(n, sorted(edges))
