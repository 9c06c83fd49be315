"""Node placement in the unit square: force-directed and spectral.

Both layouts are deterministic given (graph, seed) and always finish with
an affine normalisation of each axis into [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import eigsh

from .graph import Graph, connected_component_labels

FR_DEFAULT_ITERATIONS = 500
FR_INITIAL_TEMPERATURE = 0.1
EIG_TOL = 1e-8
EIG_MAXITER = 10000


@dataclass(frozen=True)
class Layout:
    coordinates: np.ndarray  # (n, 2), inside [0, 1]^2
    method: str
    seed: object = None


def _normalise_unit_square(pos: np.ndarray) -> np.ndarray:
    if len(pos) == 0:
        return pos
    out = np.empty_like(pos)
    for axis in range(2):
        lo = pos[:, axis].min()
        span = pos[:, axis].max() - lo
        if span > 0:
            out[:, axis] = (pos[:, axis] - lo) / span
        else:
            out[:, axis] = 0.5
    return out


def fruchterman_reingold(
    g: Graph,
    iterations: int = FR_DEFAULT_ITERATIONS,
    seed=None,
) -> Layout:
    """Classic spring layout: kappa^2/dist repulsion between all pairs,
    dist^2/kappa attraction along edges, displacement capped by a
    temperature that cools linearly to zero."""
    n = g.n
    rng = np.random.default_rng(seed)
    if n == 0:
        return Layout(np.zeros((0, 2)), "fr", seed)
    if n == 1:
        return Layout(np.array([[0.5, 0.5]]), "fr", seed)
    pos = rng.random((n, 2))
    kappa = np.sqrt(1.0 / n)
    edges = list(g.edges())
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([w for _, w in edges], dtype=np.int64)
    for step in range(iterations):
        temp = FR_INITIAL_TEMPERATURE * (1.0 - step / iterations)
        # repulsion weight w_ij = kappa^2/dist^2 scales (pos_i - pos_j);
        # sum_j w_ij (pos_i - pos_j) = pos_i * rowsum(w) - w @ pos, which
        # avoids materialising the (n, n, 2) difference tensor
        gram = pos @ pos.T
        sq = np.diag(gram)
        dist2 = np.maximum(sq[:, None] + sq[None, :] - 2.0 * gram, 1e-18)
        weight = kappa**2 / dist2
        np.fill_diagonal(weight, 0.0)
        disp = pos * weight.sum(axis=1)[:, None] - weight @ pos
        if len(eu) > 0:
            evec = pos[eu] - pos[ev]
            edist = np.maximum(np.sqrt((evec**2).sum(axis=1)), 1e-9)
            pull = (evec / edist[:, None]) * (edist**2 / kappa)[:, None]
            np.add.at(disp, eu, -pull)
            np.add.at(disp, ev, pull)
        length = np.maximum(np.sqrt((disp**2).sum(axis=1)), 1e-9)
        pos += disp / length[:, None] * np.minimum(length, temp)[:, None]
    return Layout(_normalise_unit_square(pos), "fr", seed)


def laplacian_embedding(g: Graph, seed=None) -> Layout:
    """Coordinates from the Laplacian eigenvectors of the 2nd and 3rd
    smallest eigenvalues (combinatorial Laplacian D - A).

    Requires a connected graph with at least 3 nodes; extract the largest
    component first for disconnected inputs. The eigenvector sign is fixed
    by making the largest-magnitude entry positive, so the output is
    deterministic.
    """
    if g.n < 3:
        raise ValueError("laplacian embedding needs at least 3 nodes")
    labels = connected_component_labels(g)
    if labels.max(initial=0) != 0:
        raise ValueError(
            "graph is disconnected; extract the largest component before embedding"
        )
    a = g.to_csr().astype(np.float64)
    lap = sp.diags(g.degrees.astype(np.float64)) - a
    rng = np.random.default_rng(seed)
    if g.n == 3:
        # Lanczos needs k < n; 3 nodes are solved densely
        vals, vecs = np.linalg.eigh(lap.toarray())
    else:
        vals, vecs = eigsh(
            lap, k=3, which="SA", tol=EIG_TOL, maxiter=EIG_MAXITER,
            v0=rng.standard_normal(g.n),
        )
    order = np.argsort(vals)
    coords = np.stack([vecs[:, order[1]], vecs[:, order[2]]], axis=1)
    for axis in range(2):
        column = coords[:, axis]
        peak = int(np.argmax(np.abs(column)))
        if column[peak] < 0:
            coords[:, axis] = -column
    return Layout(_normalise_unit_square(coords), "la", seed)


def layout_to_tsv(layout: Layout) -> str:
    """Coordinate dump, one `node<TAB>x<TAB>y` line per node."""
    lines = [
        f"{i}\t{float(x)!r}\t{float(y)!r}"
        for i, (x, y) in enumerate(layout.coordinates)
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def layout_from_tsv(text: str, method: str = "file") -> Layout:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "%")):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected node<TAB>x<TAB>y")
        rows.append((int(parts[0]), float(parts[1]), float(parts[2])))
    rows.sort()
    if [node for node, _, _ in rows] != list(range(len(rows))):
        raise ValueError("coordinate file must cover node ids 0..n-1 exactly once")
    coords = np.array([[x, y] for _, x, y in rows], dtype=np.float64)
    return Layout(coords, method, None)
