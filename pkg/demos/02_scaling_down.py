#!/usr/bin/env python3
"""Scaling statistics down to a small target size, two ways.

The size-independent route multiplies every count by n'/n. The empirical
route fits a Gaussian to log10 statistics over a corpus of networks and
slides each count along its regression slope on size, so statistics that
empirically rise or fall with n get compensated.

Run from anywhere: python demos/02_scaling_down.py
"""

import numpy as np

from graphsketch import erdos_renyi, fit_model, scale_no, scale_si
from graphsketch.stats import COUNT_KEYS, subgraph_counts

rng = np.random.default_rng(7)

# A synthetic corpus standing in for a library of real networks: counts
# follow clean power laws of n (edges ~ n, wedges ~ n^1.2, triangles ~
# n^1.4, ...) with lognormal scatter.
exponents = {
    "edges": 1.0,
    "wedges": 1.2,
    "claws": 1.3,
    "crosses": 1.4,
    "triangles": 1.4,
    "squares": 1.5,
}
corpus = []
for _ in range(300):
    log_n = rng.uniform(3.0, 6.5)
    net = {"n": 10.0**log_n}
    for key, beta in exponents.items():
        net[key] = 10.0 ** (beta * log_n + rng.normal(0, 0.15))
    corpus.append(net)

model = fit_model(corpus)
print(f"model over {model.corpus_size} networks, labels {model.labels}")

# The input graph to summarise.
g = erdos_renyi(5000, 12 / 4999, seed=3)
stats = {"n": g.n, **subgraph_counts(g)}
print(f"\ninput: n={g.n}, m={stats['edges']}")

n_prime = 80
linear = scale_si(stats, n_prime)
empirical = scale_no(stats, model, n_prime)

print(f"\ntargets at n'={n_prime}:")
print(f"{'statistic':>10} {'input':>12} {'linear':>12} {'empirical':>12}")
for key in COUNT_KEYS:
    print(
        f"{key:>10} {stats[key]:>12.0f} {linear.targets[key]:>12.1f} "
        f"{empirical.targets[key]:>12.1f}"
    )

# Linear scaling shrinks every count by the same factor. The empirical
# route shrinks counts with a steep size trend (squares, triangles) by
# more, because the corpus says small networks have disproportionately
# fewer of them -- or the reverse, depending on the fitted slopes.
ratio = n_prime / g.n
print(f"\nlinear factor n'/n = {ratio:.4f}")
for key in ("edges", "squares"):
    slope = model.sigma[model.index(key), model.index("n")] / model.sigma[
        model.index("n"), model.index("n")
    ]
    print(f"fitted slope for {key}: {slope:.2f} (target shrinks by (n'/n)^slope)")
