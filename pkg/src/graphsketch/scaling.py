"""Scaling the input graph's statistics down to the target size.

Two routes produce the six target counts for the generated small graph:

* empirical (``scale_no``): fit a multivariate Gaussian to log10-counts
  over a corpus of networks, then take the conditional mean given the new
  node count. Captures empirical size trends such as clustering falling
  with network size.
* size-independent (``scale_si``): treat per-node densities of the counts
  as constants, which collapses to multiplying every count by n'/n.

All Gaussian work happens in log10 space: the counts follow power laws
across orders of magnitude, and a raw-space fit would be dominated by the
largest network in the corpus.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

import numpy as np

from .stats import COUNT_KEYS, StatVector

Stats = Union[StatVector, Mapping[str, float]]

MODEL_LABELS = ("n",) + tuple(COUNT_KEYS)

_LABEL_TO_ATTR = {
    "n": "nodes",
    "edges": "edges",
    "wedges": "wedges",
    "claws": "claws",
    "crosses": "crosses",
    "triangles": "triangles",
    "squares": "squares",
}

MODEL_FORMAT_VERSION = "v1"
_MODEL_MAGIC = "graphsketch-model"


class FitError(ValueError):
    """Corpus unusable for fitting (fewer than two usable networks)."""


class DegenerateModelError(ValueError):
    """Model cannot be conditioned on size (zero size variance)."""


@dataclass(frozen=True)
class GaussianModel:
    """Mean and covariance of log10 statistics over a corpus of networks."""

    labels: tuple[str, ...]
    mu: np.ndarray
    sigma: np.ndarray
    corpus_size: int

    def __post_init__(self):
        k = len(self.labels)
        if "n" not in self.labels:
            raise ValueError("model labels must include the node count 'n'")
        if self.mu.shape != (k,) or self.sigma.shape != (k, k):
            raise ValueError("mu/sigma dimensions must match the label list")
        if not np.allclose(self.sigma, self.sigma.T, atol=1e-10):
            raise ValueError("covariance must be symmetric")
        if np.linalg.eigvalsh(self.sigma).min() < -1e-10:
            raise ValueError("covariance must be positive semi-definite")

    @property
    def degenerate(self) -> bool:
        """True when the corpus is too small to pin down the covariance."""
        return self.corpus_size < len(self.labels) + 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"model has no statistic {label!r}") from None


@dataclass(frozen=True)
class TargetStats:
    """Scaled-down target counts for the generator. Values stay real-valued;
    rounding is left to the generator's relative-error objective."""

    n_prime: int
    targets: dict[str, float] = field(default_factory=dict)
    method: str = "si"

    def __post_init__(self):
        if self.n_prime < 2:
            raise ValueError("target node count must be >= 2")
        for key, value in self.targets.items():
            if value < 0:
                raise ValueError(f"target {key} must be >= 0, got {value}")

    def as_array(self, keys: Sequence[str] = COUNT_KEYS) -> np.ndarray:
        return np.array([self.targets[k] for k in keys], dtype=np.float64)


def _stat_value(sv: Stats, label: str) -> float:
    """Read one statistic from a StatVector or a plain {label: value} mapping."""
    if isinstance(sv, StatVector):
        return float(getattr(sv, _LABEL_TO_ATTR[label]))
    return float(sv[label])


def unusable_labels(sv: Stats, labels: Sequence[str] = MODEL_LABELS) -> list[str]:
    """Labels whose value has no finite log (<= 0 or non-finite)."""
    bad = []
    for label in labels:
        v = _stat_value(sv, label)
        if not (v > 0 and math.isfinite(v)):
            bad.append(label)
    return bad


def fit_model(
    stat_vectors: Sequence[Stats],
    labels: Sequence[str] = MODEL_LABELS,
) -> GaussianModel:
    """Fit mean and covariance of log10 statistics over a corpus.

    Networks with a nonpositive value for any modelled label have no
    finite log and are excluded from the fit, with a warning naming them.
    Covariance uses the unbiased N-1 divisor.
    """
    labels = tuple(labels)
    rows = []
    for i, sv in enumerate(stat_vectors):
        bad = unusable_labels(sv, labels)
        if not bad:
            rows.append(np.log10([_stat_value(sv, label) for label in labels]))
        else:
            warnings.warn(
                f"excluding network {i} from fit: nonpositive {', '.join(bad)}",
                stacklevel=2,
            )
    if len(rows) < 2:
        raise FitError(f"need >= 2 usable networks to fit, got {len(rows)}")
    data = np.array(rows)
    mu = data.mean(axis=0)
    sigma = np.cov(data, rowvar=False, ddof=1)
    sigma = np.atleast_2d(sigma)
    sigma = (sigma + sigma.T) / 2.0
    model = GaussianModel(labels=labels, mu=mu, sigma=sigma, corpus_size=len(rows))
    if model.degenerate:
        warnings.warn(
            f"fit over {len(rows)} networks is degenerate for {len(labels)} labels",
            stacklevel=2,
        )
    return model


def scale_no(stats: Stats, model: GaussianModel, n_prime: int) -> TargetStats:
    """Slide each statistic along the corpus trend from the input size to n'.

    In log10 space, each statistic moves with its regression slope on the
    node count: log a' = log a - (log n - log n') * Sigma[a,n] / Sigma[n,n].
    The input graph's deviation from the corpus trend is preserved at the
    new size; a statistic with no covariance with n is carried over as is.
    """
    i_n = model.index("n")
    var_n = float(model.sigma[i_n, i_n])
    if var_n <= 0.0:
        raise DegenerateModelError("model has zero variance in the node count")
    n_input = _stat_value(stats, "n")
    if n_input <= 0:
        raise ValueError(f"statistic n must be positive for empirical scaling, got {n_input}")
    shift = math.log10(n_input) - math.log10(n_prime)
    targets: dict[str, float] = {}
    for key in COUNT_KEYS:
        i = model.index(key)
        value = _stat_value(stats, key)
        if value <= 0:
            raise ValueError(f"statistic {key} must be positive for empirical scaling, got {value}")
        slope = float(model.sigma[i, i_n]) / var_n
        if slope == 0.0:  # inert conditioning: carry the value over exactly
            targets[key] = value
        else:
            targets[key] = 10.0 ** (math.log10(value) - shift * slope)
    return TargetStats(n_prime=n_prime, targets=targets, method="no")


def scale_si(stats: Stats, n_prime: int) -> TargetStats:
    """Size-independent scaling: every count shrinks by the factor n'/n."""
    n = _stat_value(stats, "n")
    if n <= 0:
        raise ValueError("input graph must have nodes")
    ratio = n_prime / n
    targets = {key: ratio * _stat_value(stats, key) for key in COUNT_KEYS}
    return TargetStats(n_prime=n_prime, targets=targets, method="si")


def _gen_binom(d: float, k: int) -> float:
    """Generalised binomial C(d, k) for real d; negative values clamp to 0."""
    value = 1.0
    for i in range(k):
        value *= d - i
    value /= math.factorial(k)
    if value < 0:
        warnings.warn(f"C({d}, {k}) is negative for d < {k - 1}; clamping to 0", stacklevel=3)
        return 0.0
    return value


def expected_counts(d: float, c: float, y: float, n: int) -> dict[str, float]:
    """Expected subgraph counts of an n-node graph with average degree d,
    clustering c and 4-clustering y, under equal degrees.

    Stars come from per-node binomials, triangles from closing the
    expected wedges with probability c, squares from closing the
    m(d-1)^2 three-edge paths with probability y.
    """
    return {
        "edges": d * n / 2.0,
        "wedges": n * _gen_binom(d, 2),
        "claws": n * _gen_binom(d, 3),
        "crosses": n * _gen_binom(d, 4),
        "triangles": (c / 3.0) * _gen_binom(d, 2) * n,
        "squares": (y / 4.0) * (d / 2.0) * (d - 1.0) ** 2 * n,
    }


# -- model file round trip ----------------------------------------------------


def model_to_text(model: GaussianModel) -> str:
    lines = [f"{_MODEL_MAGIC} {MODEL_FORMAT_VERSION} corpus_size={model.corpus_size}"]
    lines.append("\t".join(model.labels))
    lines.append("\t".join(f"{v:.17g}" for v in model.mu))
    for row in model.sigma:
        lines.append("\t".join(f"{v:.17g}" for v in row))
    return "\n".join(lines) + "\n"


def model_from_text(text: str) -> GaussianModel:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty model file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != _MODEL_MAGIC:
        raise ValueError("not a model file (bad header)")
    if header[1] != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format version {header[1]!r}")
    corpus_size = int(header[2].split("=", 1)[1])
    labels = tuple(lines[1].split("\t"))
    k = len(labels)
    if len(lines) != 2 + 1 + k:
        raise ValueError(f"model file should have {3 + k} lines, found {len(lines)}")
    mu = np.array([float(v) for v in lines[2].split("\t")])
    sigma = np.array([[float(v) for v in lines[3 + i].split("\t")] for i in range(k)])
    return GaussianModel(labels=labels, mu=mu, sigma=sigma, corpus_size=corpus_size)


def save_model(model: GaussianModel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(model_to_text(model))


def load_model(path) -> GaussianModel:
    with open(path, "r", encoding="utf-8") as fh:
        return model_from_text(fh.read())
