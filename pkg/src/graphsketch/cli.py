"""Command-line entry point wiring the whole pipeline.

Subcommands: stats, fit, summarize, baseline, layout, render, sweep.
Every command is deterministic given its flags plus --seed; when --seed is
omitted a fresh one is drawn from entropy and printed on stderr so the run
can be reproduced. Exit codes: 0 success, 1 usage, 2 IO/parse failure,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import os
import sys
from pathlib import Path

import numpy as np
from scipy.sparse.linalg import ArpackError

from . import __version__
from .baselines import node_sample, size_for_target, uniform_vertex_sample
from .generator import DEFAULT_MAX_ITERATIONS, GeneratorConfig, generate, trace_to_text
from .graph import EdgeListError, Graph, largest_component, read_edge_list, to_edge_list
from .layout import (
    FR_DEFAULT_ITERATIONS,
    fruchterman_reingold,
    laplacian_embedding,
    layout_from_tsv,
    layout_to_tsv,
)
from .render import render_svg
from .scaling import (
    DegenerateModelError,
    FitError,
    fit_model,
    load_model,
    save_model,
    scale_no,
    scale_si,
    unusable_labels,
)
from .stats import (
    full_stat_vector,
    stat_vector_to_json,
    stat_vector_to_tsv,
    subgraph_counts,
)

THREADS_ENV_VAR = "GRAPHSKETCH_THREADS"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_NUMERIC = 3

SWEEP_DEFAULT = (10, 15, 20, 30, 50, 70, 100, 150, 200, 300, 500, 700, 1000)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise UsageError(message)


def _add_common(p, seed=True, out_dir=True):
    if seed:
        p.add_argument("--seed", type=int, default=None,
                       help="RNG seed; drawn from entropy and printed if omitted")
    if out_dir:
        p.add_argument("--out-dir", default=".", help="directory for output files")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphsketch",
                     description="Summarise a large network as a small synthetic graph.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="print all statistics of a graph")
    p.add_argument("input", help="edge-list file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("fit", help="fit a statistics model over a corpus directory")
    p.add_argument("corpus_dir", help="directory of edge-list files")
    p.add_argument("model_out", help="path of the model file to write")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("summarize", help="generate and draw a small synthetic twin")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--method", choices=("no", "si"), default="si",
                   help="scaling method: fitted-model conditional (no) or linear (si)")
    p.add_argument("--model", default=None, help="model file (required for --method no)")
    p.add_argument("--n-prime", type=int, default=80, help="size of the generated graph")
    p.add_argument("--epsilon", type=float, default=0.01, help="convergence parameter")
    p.add_argument("--max-iterations", type=int, default=DEFAULT_MAX_ITERATIONS)
    p.add_argument("--layout", choices=("fr", "la"), default="fr")
    p.add_argument("--fr-iterations", type=int, default=FR_DEFAULT_ITERATIONS)
    _add_common(p)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("baseline", help="sampling baselines (drawn with the spring layout)")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--method", choices=("su", "sn"), required=True,
                   help="su: nodes plus touched edges; sn: induced subgraph")
    p.add_argument("--k", type=int, default=None, help="number of nodes to sample")
    p.add_argument("--n-prime", type=int, default=80,
                   help="target drawn size used to pick k when --k is absent")
    p.add_argument("--fr-iterations", type=int, default=FR_DEFAULT_ITERATIONS)
    _add_common(p)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("layout", help="compute node coordinates for a graph")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--layout", choices=("fr", "la"), default="fr")
    p.add_argument("--fr-iterations", type=int, default=FR_DEFAULT_ITERATIONS)
    _add_common(p)
    p.set_defaults(func=cmd_layout)

    p = sub.add_parser("render", help="draw a graph at precomputed coordinates")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--coords", required=True, help="node<TAB>x<TAB>y coordinate file")
    _add_common(p, seed=False)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("sweep", help="summarize at a series of target sizes")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--n-prime-list", default=",".join(str(v) for v in SWEEP_DEFAULT),
                   help="comma-separated target sizes")
    p.add_argument("--method", choices=("no", "si"), default="si")
    p.add_argument("--model", default=None)
    p.add_argument("--epsilon", type=float, default=0.01)
    p.add_argument("--max-iterations", type=int, default=DEFAULT_MAX_ITERATIONS)
    p.add_argument("--layout", choices=("fr", "la"), default="fr")
    p.add_argument("--fr-iterations", type=int, default=FR_DEFAULT_ITERATIONS)
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = int.from_bytes(os.urandom(4), "big")
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _out_path(args, name: str) -> Path:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    return out_dir / name


# -- commands -----------------------------------------------------------------


def cmd_stats(args) -> int:
    g = read_edge_list(args.input)
    sv = full_stat_vector(g)
    sys.stdout.write(stat_vector_to_tsv(sv))
    sys.stdout.write(stat_vector_to_json(sv) + "\n")
    return EXIT_OK


def cmd_fit(args) -> int:
    corpus_dir = Path(args.corpus_dir)
    if not corpus_dir.is_dir():
        raise UsageError(f"{corpus_dir} is not a directory")
    vectors = []
    for path in sorted(p for p in corpus_dir.iterdir() if p.is_file()):
        try:
            g = read_edge_list(path)
        except EdgeListError as exc:
            print(f"excluded {path.name}: {exc}", file=sys.stderr)
            continue
        counts = {"n": g.n, **subgraph_counts(g)}
        bad = unusable_labels(counts)
        if bad:
            print(f"excluded {path.name}: zero {', '.join(bad)}", file=sys.stderr)
            continue
        vectors.append(counts)
    model = fit_model(vectors)  # raises FitError if < 2 usable
    save_model(model, args.model_out)
    print(f"fitted {model.corpus_size} networks -> {args.model_out}", file=sys.stderr)
    return EXIT_OK


def _summarize_one(counts: dict, stem: str, n_prime: int, args, seed: int, model) -> Path:
    if args.method == "no":
        targets = scale_no(counts, model, n_prime)
    else:
        targets = scale_si(counts, n_prime)
    config = GeneratorConfig(epsilon=args.epsilon, n_prime=n_prime, seed=seed,
                             max_iterations=args.max_iterations)
    result = generate(targets, config)
    out = result.graph
    layout = _layout_graph(out, args.layout, seed, args.fr_iterations, context="summarize")
    base = f"{stem}.{args.method}.{n_prime}"
    edge_path = _out_path(args, base + ".tsv")
    edge_path.write_text(to_edge_list(out), encoding="utf-8")
    _out_path(args, base + ".trace").write_text(trace_to_text(result.trace), encoding="utf-8")
    _out_path(args, base + ".layout.tsv").write_text(layout_to_tsv(layout), encoding="utf-8")
    drawn = out if len(layout.coordinates) == out.n else largest_component(out)
    _out_path(args, base + ".svg").write_text(render_svg(drawn, layout), encoding="utf-8")
    print(
        f"{base}: n={out.n} m={out.m} best_error={result.error!r} "
        f"iterations={result.iterations}",
        file=sys.stderr,
    )
    return edge_path


def _layout_graph(g: Graph, kind: str, seed, fr_iterations: int, context: str):
    if kind == "la":
        lc = largest_component(g) if g.n else g
        if lc.n != g.n:
            print(
                f"{context}: graph is disconnected; spectral layout drawn on the "
                f"largest component ({lc.n} of {g.n} nodes)",
                file=sys.stderr,
            )
        return laplacian_embedding(lc, seed)
    return fruchterman_reingold(g, iterations=fr_iterations, seed=seed)


def cmd_summarize(args) -> int:
    model = _load_model_arg(args)
    seed = _resolve_seed(args)
    g = read_edge_list(args.input)
    counts = {"n": g.n, **subgraph_counts(g)}
    _summarize_one(counts, Path(args.input).stem, args.n_prime, args, seed, model)
    return EXIT_OK


def _load_model_arg(args):
    if args.method == "no":
        if not args.model:
            raise UsageError("--method no requires --model")
        return load_model(args.model)
    return None


def cmd_baseline(args) -> int:
    seed = _resolve_seed(args)
    g = read_edge_list(args.input)
    k = args.k if args.k is not None else size_for_target(g, args.n_prime, args.method)
    sampler = uniform_vertex_sample if args.method == "su" else node_sample
    sample = sampler(g, k, seed)
    stem = Path(args.input).stem
    base = f"{stem}.{args.method}.{k}"
    _out_path(args, base + ".tsv").write_text(to_edge_list(sample), encoding="utf-8")
    layout = fruchterman_reingold(sample, iterations=args.fr_iterations, seed=seed)
    _out_path(args, base + ".svg").write_text(render_svg(sample, layout), encoding="utf-8")
    print(f"{base}: sampled n={sample.n} m={sample.m} (k={k})", file=sys.stderr)
    return EXIT_OK


def cmd_layout(args) -> int:
    seed = _resolve_seed(args)
    g = read_edge_list(args.input)
    layout = _layout_graph(g, args.layout, seed, args.fr_iterations, context="layout")
    stem = Path(args.input).stem
    path = _out_path(args, f"{stem}.{args.layout}.layout.tsv")
    path.write_text(layout_to_tsv(layout), encoding="utf-8")
    return EXIT_OK


def cmd_render(args) -> int:
    g = read_edge_list(args.input)
    with open(args.coords, "r", encoding="utf-8") as fh:
        layout = layout_from_tsv(fh.read())
    svg = render_svg(g, layout)
    stem = Path(args.input).stem
    _out_path(args, f"{stem}.render.svg").write_text(svg, encoding="utf-8")
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        sizes = [int(v) for v in args.n_prime_list.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --n-prime-list: {exc}") from None
    if not sizes:
        raise UsageError("--n-prime-list must name at least one size")
    model = _load_model_arg(args)
    seed = _resolve_seed(args)
    g = read_edge_list(args.input)
    counts = {"n": g.n, **subgraph_counts(g)}
    stem = Path(args.input).stem
    threads = int(os.environ.get(THREADS_ENV_VAR, "1"))
    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(_summarize_one, counts, stem, n_prime, args, seed, model)
                for n_prime in sizes
            ]
            for fut in futures:
                fut.result()
    else:
        for n_prime in sizes:
            _summarize_one(counts, stem, n_prime, args, seed, model)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeListError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FitError, DegenerateModelError, ArpackError,
            np.linalg.LinAlgError, ValueError, KeyError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
