"""Named fixture graphs and independent oracles shared across tests.

The oracles here deliberately re-derive results along different routes
than the library (pure-Python BFS, two-pass Pearson, dense
eigendecomposition, 2-colouring) so the tests stay meaningful.
"""

import itertools

import numpy as np

from graphsketch import Graph, erdos_renyi


# -- fixture graphs ----------------------------------------------------------


def complete(n):
    g = Graph(n)
    for u in range(n):
        for w in range(u + 1, n):
            g.add_edge(u, w)
    return g


def cycle(n):
    g = Graph(n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
    return g


def path(n):
    g = Graph(n)
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def star(leaves):
    g = Graph(leaves + 1)
    for i in range(1, leaves + 1):
        g.add_edge(0, i)
    return g


def complete_bipartite(a, b):
    g = Graph(a + b)
    for u in range(a):
        for w in range(a, a + b):
            g.add_edge(u, w)
    return g


def triangle():
    return complete(3)


def random_graph(rng, n_max=7, n_min=2):
    n = int(rng.integers(n_min, n_max + 1))
    return erdos_renyi(n, float(rng.random()), rng)


# -- oracles ------------------------------------------------------------------


def bfs_distances(g, src):
    """Plain queue BFS; -1 for unreachable nodes."""
    dist = [-1] * g.n
    dist[src] = 0
    queue = [src]
    while queue:
        nxt = []
        for u in queue:
            for w in g.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        queue = nxt
    return dist

def diameter_oracle(g):
    """Max BFS distance over the largest component, all pairs."""
    comps = components_oracle(g)
    comp = max(comps, key=lambda c: (len(c), -min(c)))
    best = 0
    for u in comp:
        dist = bfs_distances(g, u)
        best = max(best, max(dist[w] for w in comp))
    return best


def components_oracle(g):
    seen = set()
    comps = []
    for u in range(g.n):
        if u in seen:
            continue
        dist = bfs_distances(g, u)
        comp = {w for w, d in enumerate(dist) if d >= 0}
        seen |= comp
        comps.append(comp)
    return comps


def is_bipartite_oracle(g):
    """BFS 2-colouring."""
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in g.neighbors(u):
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def pearson_oracle(xs, ys):
    """Straightforward two-pass Pearson correlation; None on zero variance."""
    xs = [float(v) for v in xs]
    ys = [float(v) for v in ys]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    vx = sum((v - mx) ** 2 for v in xs)
    vy = sum((v - my) ** 2 for v in ys)
    if vx == 0 or vy == 0:
        return None
    cov = sum((a - mx) * (b - my) for a, b in zip(xs, ys))
    return cov / (vx**0.5 * vy**0.5)


def assortativity_oracle(g):
    xs, ys = [], []
    for u, w in g.edges():
        xs.extend([g.degree(u), g.degree(w)])
        ys.extend([g.degree(w), g.degree(u)])
    if not xs:
        return None
    return pearson_oracle(xs, ys)


def dense_eigenvalues(g):
    return np.linalg.eigvalsh(g.dense_adjacency())


def bipartivity_oracle(g):
    vals = dense_eigenvalues(g)
    return abs(vals[0] / vals[-1])


def count_via_subsets(g, pattern):
    """Second exhaustive counter, organised by edge subsets rather than
    node roles, as a cross-check for brute_force_count itself."""
    edges = list(g.edges())
    if pattern == "triangle":
        return sum(
            1
            for trio in itertools.combinations(range(g.n), 3)
            if all(g.has_edge(a, b) for a, b in itertools.combinations(trio, 2))
        )
    raise ValueError(pattern)
