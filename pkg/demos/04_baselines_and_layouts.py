#!/usr/bin/env python3
"""Sampling baselines and the two layout engines, side by side.

Run from anywhere: python demos/04_baselines_and_layouts.py
"""

from pathlib import Path

from graphsketch import (
    erdos_renyi,
    fruchterman_reingold,
    laplacian_embedding,
    largest_component,
    node_sample,
    render_svg,
    uniform_vertex_sample,
)
from graphsketch.baselines import expected_reach, size_for_target
from graphsketch.stats import subgraph_counts

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

g = erdos_renyi(1500, 9 / 1499, seed=21)
print(f"input: n={g.n} m={g.m}")

# Uniform vertex sampling keeps k random nodes plus every edge touching
# them; the drawn picture therefore contains the sampled nodes and their
# neighbours. Node sampling keeps only the induced subgraph. Pick k so
# both end up near 80 drawn nodes.
target = 80
k_su = size_for_target(g, target, "su")
k_sn = size_for_target(g, target, "sn")
print(f"k for ~{target} drawn nodes: su -> {k_su} "
      f"(expected reach {expected_reach(g, k_su):.1f}), sn -> {k_sn}")

su = uniform_vertex_sample(g, k_su, seed=2)
sn = node_sample(g, k_sn, seed=2)
for name, sample in (("su", su), ("sn", sn)):
    counts = subgraph_counts(sample)
    print(f"{name}: n={sample.n} m={sample.m} wedges={counts['wedges']} "
          f"triangles={counts['triangles']}")
    layout = fruchterman_reingold(sample, seed=2)
    (OUT / f"baseline_{name}.svg").write_text(render_svg(sample, layout))

# Layouts: the spring embedder works on anything; the spectral embedding
# uses the two lowest non-trivial Laplacian eigenvectors and wants a
# connected graph, so extract the largest component first.
lc = largest_component(sn)
if lc.n >= 3:
    spectral = laplacian_embedding(lc, seed=2)
    (OUT / "baseline_sn_spectral.svg").write_text(render_svg(lc, spectral))
    print(f"spectral drawing of the sn sample's big component ({lc.n} nodes)")

print(f"wrote drawings under {OUT}/")
