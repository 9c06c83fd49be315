"""Simple undirected graph with the edge-toggle primitive.

Graphs are loopless and without parallel edges. Nodes are dense integer
ids 0..n-1; the original tokens from an edge-list file are kept around in
``labels`` for reporting. Two access patterns are served by one class:
neighbour sets for counting traversals on large inputs, and a lazily
materialised dense adjacency matrix for the column-vector algebra the
small-graph generator does on every step.
"""

from __future__ import annotations

import math
from typing import Iterator, Optional, Sequence

import numpy as np
import scipy.sparse as sp


class EdgeListError(ValueError):
    """Malformed edge-list input."""


class Graph:
    """Undirected simple graph on nodes 0..n-1.

    Mutation is limited to :meth:`toggle_edge`; the degree vector and the
    dense adjacency cache (if materialised) are maintained incrementally.
    """

    def __init__(self, n: int, labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("node count must be >= 0")
        if labels is not None and len(labels) != n:
            raise ValueError("labels length must equal node count")
        self.n = n
        self.labels = list(labels) if labels is not None else None
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._degrees = np.zeros(n, dtype=np.int64)
        self._m = 0
        self._dense: Optional[np.ndarray] = None

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    @property
    def degrees(self) -> np.ndarray:
        """Maintained degree vector (do not mutate)."""
        return self._degrees

    def degree(self, u: int) -> int:
        return int(self._degrees[u])

    def has_edge(self, u: int, w: int) -> bool:
        self._check_node(u)
        self._check_node(w)
        return w in self._adj[u]

    def neighbors(self, u: int) -> set[int]:
        self._check_node(u)
        return self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, w) with u < w, in sorted order."""
        for u in range(self.n):
            for w in sorted(self._adj[u]):
                if u < w:
                    yield (u, w)

    def label_of(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)

    def _check_node(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise ValueError(f"node {u} out of range for graph with n={self.n}")

    # -- mutation --------------------------------------------------------

    def add_edge(self, u: int, w: int) -> bool:
        """Insert edge {u, w} if absent; returns whether anything changed."""
        self._check_node(u)
        self._check_node(w)
        if u == w or w in self._adj[u]:
            return False
        self._set_edge(u, w, True)
        return True

    def toggle_edge(self, u: int, w: int) -> None:
        """Flip edge {u, w}: add it if absent, remove it if present."""
        if u == w:
            raise ValueError("self-loops are not allowed")
        self._check_node(u)
        self._check_node(w)
        self._set_edge(u, w, w not in self._adj[u])

    def _set_edge(self, u: int, w: int, present: bool) -> None:
        if present:
            self._adj[u].add(w)
            self._adj[w].add(u)
            delta = 1
        else:
            self._adj[u].discard(w)
            self._adj[w].discard(u)
            delta = -1
        self._degrees[u] += delta
        self._degrees[w] += delta
        self._m += delta
        if self._dense is not None:
            val = 1.0 if present else 0.0
            self._dense[u, w] = val
            self._dense[w, u] = val

    # -- array views -----------------------------------------------------

    def adjacency_column(self, u: int) -> np.ndarray:
        """0/1 indicator vector of u's neighbourhood (entry u is 0)."""
        self._check_node(u)
        if self._dense is not None:
            return self._dense[:, u].astype(np.int64)
        col = np.zeros(self.n, dtype=np.int64)
        for w in self._adj[u]:
            col[w] = 1
        return col

    def dense_adjacency(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix (float64 for fast matvecs).

        Materialised once and kept in sync by toggle_edge. Intended for
        small graphs; large parsed inputs should stick to to_csr().
        """
        if self._dense is None:
            a = np.zeros((self.n, self.n), dtype=np.float64)
            for u in range(self.n):
                for w in self._adj[u]:
                    a[u, w] = 1.0
            self._dense = a
        return self._dense

    def to_csr(self) -> sp.csr_matrix:
        """Symmetric CSR adjacency with int64 entries."""
        rows = []
        cols = []
        for u in range(self.n):
            for w in self._adj[u]:
                rows.append(u)
                cols.append(w)
        data = np.ones(len(rows), dtype=np.int64)
        return sp.csr_matrix(
            (data, (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
            shape=(self.n, self.n),
        )

    def copy(self) -> "Graph":
        g = Graph(self.n, self.labels)
        g._adj = [set(s) for s in self._adj]
        g._degrees = self._degrees.copy()
        g._m = self._m
        return g

    def recomputed_degrees(self) -> np.ndarray:
        """Degrees from scratch; used to check the maintained vector."""
        return np.array([len(s) for s in self._adj], dtype=np.int64)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self._m})"


COMMENT_PREFIXES = ("%", "#")


def from_edge_list(text: str) -> Graph:
    """Parse a whitespace-separated edge list into a Graph.

    One edge per line, '%'/'#' comment lines skipped, columns beyond the
    first two ignored (weight columns in common TSV exports). Duplicate
    edges are collapsed and self-loops dropped; tokens are mapped to dense
    ids in first-appearance order.
    """
    ids: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []
    saw_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise EdgeListError(f"line {lineno}: expected two node tokens, got {len(tokens)}")
        saw_data = True
        u = ids.setdefault(tokens[0], len(ids))
        w = ids.setdefault(tokens[1], len(ids))
        if u != w:
            pairs.append((u, w))
    if not saw_data:
        raise EdgeListError("empty edge list: no data lines found")
    g = Graph(len(ids), labels=list(ids))
    for u, w in pairs:
        g.add_edge(u, w)
    return g


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_edge_list(fh.read())


def to_edge_list(g: Graph) -> str:
    """Edge-list text for g (sorted, labelled); isolated nodes noted in a comment."""
    lines = [f"% nodes: {g.n}"]
    for u, w in g.edges():
        lines.append(f"{g.label_of(u)}\t{g.label_of(w)}")
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_edge_list(g))


def erdos_renyi(n: int, p: float, seed) -> Graph:
    """G(n, p): every one of the C(n,2) node pairs is an edge with probability p.

    Uses geometric skipping over the pair enumeration, so the cost is
    O(n + m) rather than O(n^2). `seed` may be an int or a numpy Generator.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    g = Graph(n)
    if p == 0.0 or n == 1:
        return g
    if p == 1.0:
        for u in range(n):
            for w in range(u + 1, n):
                g.add_edge(u, w)
        return g
    # Batagelj-Brandes skip sampling over pairs (v, w), w < v.
    log_1p = math.log1p(-p)
    v, w = 1, -1
    while v < n:
        r = rng.random()
        w = w + 1 + int(math.log1p(-r) / log_1p)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            g.add_edge(v, w)
    return g


def connected_component_labels(g: Graph) -> np.ndarray:
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    _, labels = sp.csgraph.connected_components(g.to_csr(), directed=False)
    return labels.astype(np.int64)


def induced_subgraph(g: Graph, nodes: Sequence[int]) -> Graph:
    """Subgraph on `nodes` (given in the order that becomes 0..k-1)."""
    index = {int(u): i for i, u in enumerate(nodes)}
    sub = Graph(len(nodes), labels=[g.label_of(int(u)) for u in nodes])
    for u in nodes:
        for w in g.neighbors(int(u)):
            j = index.get(w)
            if j is not None:
                sub.add_edge(index[int(u)], j)
    return sub


def largest_component(g: Graph) -> Graph:
    """Induced subgraph on the largest connected component.

    Ties are broken towards the component containing the smallest node id.
    Node ids are relabelled to 0..k-1 in ascending original order; original
    identities survive via labels.
    """
    if g.n == 0:
        raise ValueError("largest_component of an empty graph is undefined")
    labels = connected_component_labels(g)
    sizes = np.bincount(labels)
    best_size = sizes.max()
    # first occurrence index per component label == its smallest node id
    candidates = np.flatnonzero(sizes == best_size)
    first_node = {c: int(np.flatnonzero(labels == c)[0]) for c in candidates}
    chosen = min(candidates, key=lambda c: first_node[c])
    nodes = np.flatnonzero(labels == chosen)
    return induced_subgraph(g, [int(u) for u in nodes])
