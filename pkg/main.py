"""
Egonet Paradox - Main Entry Point
Friendship-paradox statistics over egocentric datasets and contact-volume
spreading simulations on configuration-model graphs

Usage:
    python main.py synth --egos 5000 --alters 15 --zipf 1.2 --coupling 0.8 --seed 7 --out d.csv
    python main.py validate --in d.csv
    python main.py stats --in d.csv --out-dir output/
    python main.py zipf --in d.csv --out output/zipf.csv
    python main.py hub --in d.csv --min-available 5 --perms 1000 --seed 11 --out output/hub_prop.csv
    python main.py graph --preset desk-scale --seed 5 --out g.edges
    python main.py simulate --graph g.edges --beta 0.01 --p 1.0 --steps 20 --replicates 100 --seed 3 --out epi.csv
    python main.py report --in-dir output/ --out output/summary.csv
"""

import argparse
import logging
import os
import shlex
import sys
from typing import Dict, List, Optional, Sequence

import pandas as pd
from dotenv import load_dotenv

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

# Load environment variables before src.config reads them
load_dotenv()

from src import __version__
from src.config import (
    BETA,
    CONTACT_BINS,
    DECILE_OUTPUT,
    DEFAULT_WORKERS,
    DEGREE_HISTOGRAM_OUTPUT,
    DEGREE_MODE,
    DEGREE_SIGMA,
    DIR_MANIFEST,
    EPIDEMIC_OUTPUT,
    GRAPH_PRESETS,
    HUB_OUTPUT,
    LOG_LEVEL,
    MANIFEST_SUFFIX,
    MAX_RANK,
    MIN_AVAILABLE,
    MIN_DEGREE,
    N_PERMUTATIONS,
    NULL_COVERAGE,
    P_MIX_VALUES,
    PARADOX_OUTPUT,
    RANK_SUMMARY_OUTPUT,
    REPLICATES,
    SPEARMAN_PERMUTATIONS,
    STEPS,
    SUMMARY_OUTPUT,
    SYNTH_ALTERS,
    SYNTH_BASE_VOLUME,
    SYNTH_COUPLING,
    SYNTH_EGOS,
    SYNTH_UNAVAILABLE,
    SYNTH_ZIPF_EXPONENT,
    VALIDATION_OUTPUT,
    ZIPF_MIN_DYADS,
    ZIPF_OUTPUT,
)
from src.exceptions import ConfigError, EgonetError, EmptyResultError
from src.utils.helpers import format_number, format_percentage, print_header, print_section, sha256_file

logger = logging.getLogger("egonet")


# =============================================================================
# MANIFESTS
# =============================================================================

def build_manifest(args: argparse.Namespace, argv: Sequence[str], inputs: Sequence[str]) -> Dict[str, str]:
    """Everything needed to re-run a command bit-identically"""
    entries = {
        "command": args.command,
        "argv": shlex.join(argv),
        "master_seed": "" if getattr(args, "seed", None) is None else str(args.seed),
        "tool_version": __version__,
    }
    for name, value in sorted(vars(args).items()):
        if name in ("command", "handler"):
            continue
        entries[f"param.{name}"] = " ".join(map(str, value)) if isinstance(value, (list, tuple)) else str(value)
    for path in inputs:
        entries[f"input.{path}.sha256"] = sha256_file(path)
    return entries


def save_manifest(args: argparse.Namespace, argv: Sequence[str], inputs: Sequence[str],
                  out_file: Optional[str] = None, out_dir: Optional[str] = None) -> str:
    from src.utils.data_loader import write_manifest

    path = os.path.join(out_dir, DIR_MANIFEST) if out_dir else out_file + MANIFEST_SUFFIX
    write_manifest(build_manifest(args, argv, inputs), path)
    return path


def manifest_argv(manifest: Dict[str, str]) -> List[str]:
    """argv recorded in a manifest, ready to pass back to execute()"""
    return shlex.split(manifest["argv"])


# =============================================================================
# HELPERS
# =============================================================================

def load_filtered(args: argparse.Namespace):
    from src.egodata import filter_egos
    from src.utils.data_loader import load_dyad_csv

    dataset = load_dyad_csv(args.input)
    if args.min_outdegree is not None or args.max_outdegree is not None or args.max_alters is not None:
        dataset = filter_egos(dataset, args.min_outdegree, args.max_outdegree, args.max_alters)
    return dataset


def degree_spec_from_args(args: argparse.Namespace):
    from src.generators import lognormal_from_mode
    from src.utils.data_loader import load_degree_histogram

    if getattr(args, "histogram", None):
        return load_degree_histogram(args.histogram)
    return lognormal_from_mode(args.degree_mode, args.degree_sigma)


# =============================================================================
# COMMANDS
# =============================================================================

def run_validate(args: argparse.Namespace, argv: Sequence[str]) -> int:
    """Parse and validate a dyad CSV; violations make the run fail"""
    from src.utils.data_loader import load_dyad_csv, write_table

    dataset = load_dyad_csv(args.input)
    report = dataset.report

    print_header("DYAD CSV VALIDATION")
    print(f"📂 File: {args.input}")
    print(f"   Egos: {format_number(report.n_egos)}")
    print(f"   Dyads: {format_number(report.n_dyads)}")
    print(f"   Dyads with alter outdegree: {format_number(report.n_dyads_with_degree)}")
    print(f"   Violations: {len(report.violations)}")

    if args.out:
        write_table(pd.DataFrame(list(report.violations), columns=["ego_id", "description"]), args.out)
        save_manifest(args, argv, [args.input], out_file=args.out)

    for ego_id, description in report.violations:
        print(f"error: ego {ego_id}: {description}", file=sys.stderr)
    return 0 if report.ok else 1


def run_stats(args: argparse.Namespace, argv: Sequence[str]) -> int:
    """Paradox prevalence, rank summaries, decile curves, Zipf fit, degree histogram"""
    from src.aggregators import (
        ParadoxAggregator,
        decile_contact_curves,
        decile_frame,
        degree_histogram,
        rank_degree_summary,
        rank_summary_frame,
        zipf_fit,
        zipf_frame,
    )
    from src.utils.data_loader import write_table

    dataset = load_filtered(args)
    aggregator = ParadoxAggregator(dataset, max_rank=args.max_rank)
    insights = aggregator.generate_insights()
    summaries = rank_degree_summary(dataset, args.max_rank)
    curves = decile_contact_curves(dataset, log10_degree=args.log_degree, n_bins=args.bins)
    fit = zipf_fit(dataset, args.min_dyads)

    out = args.out_dir
    write_table(aggregator.insights_frame(), os.path.join(out, PARADOX_OUTPUT))
    write_table(rank_summary_frame(summaries), os.path.join(out, RANK_SUMMARY_OUTPUT))
    write_table(decile_frame(curves), os.path.join(out, DECILE_OUTPUT))
    write_table(zipf_frame(fit), os.path.join(out, ZIPF_OUTPUT))
    write_table(degree_histogram(dataset, "ego"), os.path.join(out, DEGREE_HISTOGRAM_OUTPUT))
    save_manifest(args, argv, [args.input], out_dir=out)

    print_header("FRIENDSHIP PARADOX STATISTICS")
    print(f"📊 Egos: {format_number(len(dataset))} | Dyads: {format_number(dataset.n_dyads)}")
    print_section("PARADOX PREVALENCE")
    print(f"   Mean of alters:   {format_percentage(insights['prevalence_mean'])}")
    print(f"   Median of alters: {format_percentage(insights['prevalence_median'])}")
    print_section("RANK-1 ALTER")
    print(f"   Egos below their rank-1 alter: {format_percentage(insights['rank1_fraction_lower'])}")
    print(f"   Median ego k: {insights['rank1_ego_median']:.1f} | median rank-1 alter k: {insights['rank1_alter_median']:.1f}")
    if "wilcoxon_p_value" in insights:
        print(f"   Wilcoxon: p = {insights['wilcoxon_p_value']:.3g} ({insights['wilcoxon_method']})")
    else:
        print(f"   Wilcoxon: {insights['wilcoxon_note']}")
    print_section("ZIPF SCALING")
    print(f"   Contact volume ~ rank^-{fit.exponent:.3f} (R² = {fit.r_squared:.3f}, {fit.ranks_used} ranks)")
    print(f"\n✅ Results saved to {out}")
    return 0


def run_zipf(args: argparse.Namespace, argv: Sequence[str]) -> int:
    """Zipf fit of contact volume against alter rank"""
    from src.aggregators import zipf_fit, zipf_frame
    from src.utils.data_loader import write_table

    dataset = load_filtered(args)
    fit = zipf_fit(dataset, args.min_dyads)
    write_table(zipf_frame(fit), args.out)
    save_manifest(args, argv, [args.input], out_file=args.out)

    print_header("ZIPF SCALING")
    print(f"   Exponent: {fit.exponent:.4f}")
    print(f"   log10 C:  {fit.log_prefactor:.4f}")
    print(f"   R²:       {fit.r_squared:.4f} over {fit.ranks_used} ranks")
    return 0


def run_hub(args: argparse.Namespace, argv: Sequence[str]) -> int:
    """Hub alter proportions against the availability-constrained null"""
    from src.aggregators import band_coverage, hub_proportion_by_rank, hub_table, hub_trend_test, permutation_null_band
    from src.utils.data_loader import write_table

    dataset = load_filtered(args)
    curve = hub_proportion_by_rank(dataset, args.min_available)
    band = permutation_null_band(dataset, n_perm=args.perms, seed=args.seed, coverage=args.coverage,
                                 min_available=args.min_available, workers=args.workers,
                                 progress=args.progress)
    trend = hub_trend_test(curve, n_perm=args.trend_perms, seed=args.seed)

    write_table(hub_table(curve, band), args.out)
    trend_path = os.path.splitext(args.out)[0] + "_trend.csv"
    write_table(pd.DataFrame([{"statistic": trend.statistic, "p_value": trend.p_value,
                               "n": trend.n, "method": trend.method.value}]), trend_path)
    save_manifest(args, argv, [args.input], out_file=args.out)

    print_header("HUB ALTERS")
    print(f"👥 Eligible egos: {format_number(curve.n_egos)} (>= {args.min_available} available alters)")
    print(f"   Ranks inside the {format_percentage(args.coverage, 0)} null band: "
          f"{format_percentage(band_coverage(curve, band))}")
    print(f"   Trend: Spearman rho = {trend.statistic:.4f}, p = {trend.p_value:.3g}")
    print(f"\n✅ Results saved to {args.out}")
    return 0


def run_synth(args: argparse.Namespace, argv: Sequence[str]) -> int:
    """Synthetic ego dataset"""
    from src.generators import SynthParams, synth_ego_dataset
    from src.utils.data_loader import save_dyad_csv

    params = SynthParams(
        n_egos=args.egos,
        alters_per_ego=args.alters,
        min_alters_per_ego=args.min_alters,
        zipf_exponent=args.zipf,
        base_volume=args.base_volume,
        coupling=args.coupling,
        degree_spec=degree_spec_from_args(args),
        min_degree=args.min_degree,
        fraction_unavailable=args.unavailable,
    )
    dataset = synth_ego_dataset(params, seed=args.seed)
    save_dyad_csv(dataset, args.out)
    inputs = [args.histogram] if args.histogram else []
    save_manifest(args, argv, inputs, out_file=args.out)

    print_header("SYNTHETIC EGO DATASET")
    print(f"   Egos: {format_number(len(dataset))} | Dyads: {format_number(dataset.n_dyads)}")
    print(f"   Dyads with alter outdegree: {format_number(dataset.report.n_dyads_with_degree)}")
    print(f"\n✅ Dataset saved to {args.out}")
    return 0


def run_graph(args: argparse.Namespace, argv: Sequence[str]) -> int:
    """Configuration-model graph from a sampled degree sequence"""
    from src.generators import configuration_graph, lognormal_from_mode, sample_degree_sequence, summarize_graph
    from src.utils.data_loader import load_degree_histogram, write_edge_list

    if args.preset:
        preset = GRAPH_PRESETS[args.preset]
        nodes = args.nodes or preset["nodes"]
        min_degree = preset["min_degree"] if args.min_degree is None else args.min_degree
        spec = (load_degree_histogram(args.histogram) if args.histogram
                else lognormal_from_mode(preset["degree_mode"], preset["degree_sigma"]))
        target_edges = preset["target_edges"]
    else:
        if not args.nodes:
            raise ConfigError("--nodes is required without --preset")
        nodes = args.nodes
        min_degree = MIN_DEGREE if args.min_degree is None else args.min_degree
        spec = degree_spec_from_args(args)
        target_edges = None

    degrees = sample_degree_sequence(spec, nodes, min_degree, seed=args.seed)
    graph = configuration_graph(degrees.degrees, seed=args.seed, simplify=not args.no_simplify)
    summary = summarize_graph(graph, degrees.degrees)
    write_edge_list(graph, args.out)
    inputs = [args.histogram] if args.histogram else []
    save_manifest(args, argv, inputs, out_file=args.out)

    print_header("CONFIGURATION-MODEL GRAPH")
    print(f"   Nodes: {format_number(summary.n_nodes)}")
    print(f"   Edges: {format_number(summary.n_edges)} (stub pairs: {format_number(summary.requested_edges)})")
    if target_edges:
        print(f"   Target edges: {format_number(target_edges)}")
    print(f"   Removed by simplification: {format_number(summary.removed_edges)}")
    print(f"   Mean degree: {summary.mean_degree:.1f} | max degree: {format_number(summary.max_degree)}")
    print(f"   Connected components: {format_number(summary.n_components)}")
    print(f"\n✅ Graph saved to {args.out}")
    return 0


def run_simulate(args: argparse.Namespace, argv: Sequence[str]) -> int:
    """SI ensembles for each p value"""
    from src.simulation import OutbreakConfig, sweep_p_mix
    from src.utils.data_loader import read_edge_list, write_table

    graph = read_edge_list(args.graph)
    config = OutbreakConfig(beta=args.beta, steps=args.steps, replicates=args.replicates,
                            seed_node=args.seed_node, master_seed=args.seed, clip=not args.no_clip)
    frame = sweep_p_mix(graph, config, args.p, workers=args.workers, progress=args.progress)
    write_table(frame, args.out)
    save_manifest(args, argv, [args.graph], out_file=args.out)

    print_header("SI OUTBREAKS")
    print(f"   Graph: {format_number(graph.n_nodes)} nodes, {format_number(graph.n_edges)} edges")
    print(f"   beta = {args.beta}, {args.steps} steps, {args.replicates} replicates")
    final = frame[frame["step"] == args.steps]
    for row in final.itertuples(index=False):
        print(f"   p = {row.p_mix:<5} total infected at step {args.steps}: {row.mean_total:,.1f} "
              f"[{row.total_ci_lo:,.1f}, {row.total_ci_hi:,.1f}]")
    clipped = int(frame["clipped_attempts"].sum())
    if clipped:
        print(f"⚠️  {format_number(clipped)} rank-regime attempts had C_i / r > 1 and were clipped")
    print(f"\n✅ Results saved to {args.out}")
    return 0


def run_report(args: argparse.Namespace, argv: Sequence[str]) -> int:
    """Collect headline numbers from existing output CSVs into one table"""
    from src.utils.data_loader import load_table, write_table

    rows = []

    def add(source: str, metric: str, value) -> None:
        rows.append({"source": source, "metric": metric, "value": value})

    def table(name: str) -> Optional[pd.DataFrame]:
        return load_table(os.path.join(args.in_dir, name))

    paradox = table(PARADOX_OUTPUT)
    if paradox is not None:
        for row in paradox.itertuples(index=False):
            add(PARADOX_OUTPUT, row.metric, row.value)

    ranks = table(RANK_SUMMARY_OUTPUT)
    if ranks is not None:
        for row in ranks.itertuples(index=False):
            add(RANK_SUMMARY_OUTPUT, f"median_k_rank{row.rank}", row.median_k)

    zipf = table(ZIPF_OUTPUT)
    if zipf is not None and len(zipf):
        for column in ("exponent", "r_squared", "ranks_used"):
            add(ZIPF_OUTPUT, column, zipf[column].iloc[0])

    hub = table(HUB_OUTPUT)
    if hub is not None and len(hub):
        populated = hub[hub["n_dyads"] > 0]
        inside = (populated["proportion"] >= populated["null_lo"]) & (populated["proportion"] <= populated["null_hi"])
        add(HUB_OUTPUT, "peak_rank", int(populated.loc[populated["proportion"].idxmax(), "rank"]))
        add(HUB_OUTPUT, "fraction_inside_null_band", float(inside.mean()))
    trend = table(os.path.splitext(HUB_OUTPUT)[0] + "_trend.csv")
    if trend is not None and len(trend):
        add(HUB_OUTPUT, "trend_rho", trend["statistic"].iloc[0])
        add(HUB_OUTPUT, "trend_p_value", trend["p_value"].iloc[0])

    epidemic = table(EPIDEMIC_OUTPUT)
    if epidemic is not None and len(epidemic):
        last = epidemic[epidemic["step"] == epidemic["step"].max()]
        for row in last.itertuples(index=False):
            add(EPIDEMIC_OUTPUT, f"final_mean_total_p{row.p_mix}", row.mean_total)
            add(EPIDEMIC_OUTPUT, f"final_total_ci_lo_p{row.p_mix}", row.total_ci_lo)
            add(EPIDEMIC_OUTPUT, f"final_total_ci_hi_p{row.p_mix}", row.total_ci_hi)

    validation = table(VALIDATION_OUTPUT)
    if validation is not None:
        add(VALIDATION_OUTPUT, "violations", len(validation))

    if not rows:
        raise EmptyResultError(f"no known output CSVs in {args.in_dir}")

    summary = pd.DataFrame(rows, columns=["source", "metric", "value"])
    write_table(summary, args.out)
    save_manifest(args, argv, [], out_file=args.out)

    print_header("RUN SUMMARY")
    for row in summary.itertuples(index=False):
        print(f"   {row.source:22} {row.metric:32} {row.value}")
    print(f"\n✅ Summary saved to {args.out}")
    return 0


# =============================================================================
# ARGUMENT PARSING
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")
    common.add_argument("--progress", action="store_true", help="Show progress bars")

    filters = argparse.ArgumentParser(add_help=False)
    filters.add_argument("--in", dest="input", required=True, help="Dyad CSV")
    filters.add_argument("--min-outdegree", type=int, help="Drop egos below this outdegree")
    filters.add_argument("--max-outdegree", type=int, help="Drop egos above this outdegree")
    filters.add_argument("--max-alters", type=int, help="Keep only the top-N ranked alters")

    degrees = argparse.ArgumentParser(add_help=False)
    degrees.add_argument("--degree-mode", type=float, default=DEGREE_MODE, help="Lognormal degree mode")
    degrees.add_argument("--degree-sigma", type=float, default=DEGREE_SIGMA, help="Lognormal sigma")
    degrees.add_argument("--histogram", help="degree,probability CSV (overrides the lognormal)")

    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Egonet Paradox - friendship paradox statistics and contact-volume spreading",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py synth --egos 5000 --alters 15 --zipf 1.2 --coupling 0.8 --seed 7 --out d.csv
  python main.py hub --in d.csv --min-available 5 --perms 1000 --seed 11 --out hub_prop.csv
  python main.py simulate --graph g.edges --beta 0.01 --p 1.0 --steps 20 --replicates 100 --seed 3 --out epi.csv
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("validate", parents=[common], help="Validate a dyad CSV")
    p.add_argument("--in", dest="input", required=True, help="Dyad CSV")
    p.add_argument("--out", help=f"Write violations here (e.g. {VALIDATION_OUTPUT})")
    p.set_defaults(handler=run_validate)

    p = sub.add_parser("stats", parents=[common, filters], help="Paradox and rank statistics")
    p.add_argument("--out-dir", required=True, help="Output directory")
    p.add_argument("--max-rank", type=int, default=MAX_RANK, help="Highest rank summarised")
    p.add_argument("--bins", type=int, default=CONTACT_BINS, help="Contact-volume bins per decile")
    p.add_argument("--log-degree", action="store_true", help="log10 alter outdegree in decile curves")
    p.add_argument("--min-dyads", type=int, default=ZIPF_MIN_DYADS, help="Min dyads per rank in the Zipf fit")
    p.set_defaults(handler=run_stats)

    p = sub.add_parser("zipf", parents=[common, filters], help="Zipf fit of volume against rank")
    p.add_argument("--min-dyads", type=int, default=ZIPF_MIN_DYADS, help="Min dyads per rank")
    p.add_argument("--out", required=True, help=f"Output CSV (e.g. {ZIPF_OUTPUT})")
    p.set_defaults(handler=run_zipf)

    p = sub.add_parser("hub", parents=[common, filters], help="Hub alters against the permutation null")
    p.add_argument("--min-available", type=int, default=MIN_AVAILABLE, help="Min available alters per ego")
    p.add_argument("--perms", type=int, default=N_PERMUTATIONS, help="Null permutations")
    p.add_argument("--coverage", type=float, default=NULL_COVERAGE, help="Null band coverage")
    p.add_argument("--trend-perms", type=int, default=SPEARMAN_PERMUTATIONS, help="Spearman shuffles")
    p.add_argument("--seed", type=int, required=True, help="Master seed")
    p.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="Process pool size")
    p.add_argument("--out", required=True, help=f"Output CSV (e.g. {HUB_OUTPUT})")
    p.set_defaults(handler=run_hub)

    p = sub.add_parser("synth", parents=[common, degrees], help="Synthetic ego dataset")
    p.add_argument("--egos", type=int, default=SYNTH_EGOS, help="Number of egos")
    p.add_argument("--alters", type=int, default=SYNTH_ALTERS, help="Max alters per ego")
    p.add_argument("--min-alters", type=int, help="Min alters per ego (default: --alters); set it lower for the hub trend test")
    p.add_argument("--zipf", type=float, default=SYNTH_ZIPF_EXPONENT, help="Contact volume exponent")
    p.add_argument("--base-volume", type=float, default=SYNTH_BASE_VOLUME, help="Rank-1 contact volume")
    p.add_argument("--coupling", type=float, default=SYNTH_COUPLING, help="Rank-degree coupling in [0, 1]")
    p.add_argument("--unavailable", type=float, default=SYNTH_UNAVAILABLE, help="Fraction of masked alters")
    p.add_argument("--min-degree", type=int, default=MIN_DEGREE, help="Degree floor")
    p.add_argument("--seed", type=int, required=True, help="Random seed")
    p.add_argument("--out", required=True, help="Dyad CSV to write")
    p.set_defaults(handler=run_synth)

    p = sub.add_parser("graph", parents=[common, degrees], help="Configuration-model graph")
    p.add_argument("--preset", choices=sorted(GRAPH_PRESETS), help="Named size/degree preset")
    p.add_argument("--nodes", type=int, help="Number of nodes")
    p.add_argument("--min-degree", type=int, help="Degree floor")
    p.add_argument("--no-simplify", action="store_true", help="Keep self-loops and parallel edges")
    p.add_argument("--seed", type=int, required=True, help="Random seed")
    p.add_argument("--out", required=True, help="Edge list to write")
    p.set_defaults(handler=run_graph)

    p = sub.add_parser("simulate", parents=[common], help="SI outbreak ensembles")
    p.add_argument("--graph", required=True, help="Edge list")
    p.add_argument("--beta", type=float, default=BETA, help="Transmission probability")
    p.add_argument("--p", type=float, nargs="+", default=list(P_MIX_VALUES), help="Rank-regime mixing values")
    p.add_argument("--steps", type=int, default=STEPS, help="Time steps")
    p.add_argument("--replicates", type=int, default=REPLICATES, help="Outbreaks per p value")
    p.add_argument("--seed-node", type=int, help="Initial infected node (default: random per replicate)")
    p.add_argument("--no-clip", action="store_true", help="Do not cap C_i / r at 1")
    p.add_argument("--seed", type=int, required=True, help="Master seed")
    p.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="Process pool size")
    p.add_argument("--out", required=True, help=f"Output CSV (e.g. {EPIDEMIC_OUTPUT})")
    p.set_defaults(handler=run_simulate)

    p = sub.add_parser("report", parents=[common], help="Summarise existing output CSVs")
    p.add_argument("--in-dir", required=True, help="Directory holding output CSVs")
    p.add_argument("--out", required=True, help=f"Summary CSV (e.g. {SUMMARY_OUTPUT})")
    p.set_defaults(handler=run_report)

    return parser


def configure_logging(verbose: bool) -> None:
    level = logging.INFO if verbose else getattr(logging, LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, force=True,
                        format="%(levelname)s %(name)s: %(message)s")


def execute(argv: Sequence[str]) -> int:
    """
    Run one command

    Returns:
        0 on success, 1 on domain or I/O errors, 2 on usage errors
    """
    argv = list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args.verbose)
    try:
        return args.handler(args, argv)
    except (EgonetError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    main()
