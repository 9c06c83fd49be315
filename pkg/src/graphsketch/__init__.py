"""graphsketch: summarise a large network as a small synthetic graph.

The pipeline measures subgraph counts of the input, scales them to a
chosen small size (empirically via a fitted Gaussian over a corpus, or by
linear size-independent scaling), synthesises a graph matching the scaled
counts by iterated edge toggling, and draws the result.
"""

from .graph import (
    EdgeListError,
    Graph,
    erdos_renyi,
    from_edge_list,
    largest_component,
    read_edge_list,
    to_edge_list,
    write_edge_list,
)
from .stats import (
    StatVector,
    brute_force_count,
    full_stat_vector,
    stat_vector_to_json,
    stat_vector_to_tsv,
    subgraph_counts,
)
from .scaling import (
    DegenerateModelError,
    FitError,
    GaussianModel,
    TargetStats,
    expected_counts,
    fit_model,
    load_model,
    save_model,
    scale_no,
    scale_si,
)
from .generator import GenerationResult, GeneratorConfig, generate, relative_error
from .baselines import node_sample, size_for_target, uniform_vertex_sample
from .layout import Layout, fruchterman_reingold, laplacian_embedding
from .render import RenderStyle, render_svg

__version__ = "0.1.0"

__all__ = [
    "EdgeListError",
    "Graph",
    "erdos_renyi",
    "from_edge_list",
    "largest_component",
    "read_edge_list",
    "to_edge_list",
    "write_edge_list",
    "StatVector",
    "brute_force_count",
    "full_stat_vector",
    "stat_vector_to_json",
    "stat_vector_to_tsv",
    "subgraph_counts",
    "DegenerateModelError",
    "FitError",
    "GaussianModel",
    "TargetStats",
    "expected_counts",
    "fit_model",
    "load_model",
    "save_model",
    "scale_no",
    "scale_si",
    "GenerationResult",
    "GeneratorConfig",
    "generate",
    "relative_error",
    "node_sample",
    "size_for_target",
    "uniform_vertex_sample",
    "Layout",
    "fruchterman_reingold",
    "laplacian_embedding",
    "RenderStyle",
    "render_svg",
]
