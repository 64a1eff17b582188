#!/usr/bin/env python3
################################################################################
#
# Script Name: dmr_tool.py
# ----------------
# Command-line front end: analyze a graph, check one characterization of
# distance mean-regularity, or list the graph catalog.
#
# Exit codes: 0 property holds, 2 property fails, 1 error, 130 interrupted.
#
# @author Nicholas Wilde, 0xb299a622
# @date 2025-09-14
# @version 0.1.0
#
################################################################################

import argparse
import json
import os
import sys
from typing import List, Optional

from tabulate import tabulate

# Add src to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from dmr_graphs import __version__
from dmr_graphs.analysis import (
    Verdict,
    hadamard_characterization,
    is_distance_mean_regular,
    is_distance_regular,
    omega_characterization,
    super_regular_check,
    triple_characterization,
)
from dmr_graphs.catalog import catalog_table
from dmr_graphs.config_model import Config
from dmr_graphs.errors import (
    CatalogError,
    ConfigurationError,
    DmrGraphsError,
    FileOperationError,
    GraphFormatError,
    GraphValidationError,
)
from dmr_graphs.graph import compute_distances
from dmr_graphs.report import VerdictModel, build_report, render_text, serialize_report
from dmr_graphs.spectra import real_eigenvalues
from dmr_graphs.utils.logging import get_logger, setup_logging
from scripts.utils import apply_overrides, load_config, load_graph, resolve_output, write_output

logger = get_logger(__name__)

EXIT_HOLDS = 0
EXIT_ERROR = 1
EXIT_FAILS = 2
EXIT_INTERRUPTED = 130

PROPERTIES = ("drg", "dmr", "super-regular", "omega", "triples", "hadamard")


def build_parser() -> argparse.ArgumentParser:
    inputs = argparse.ArgumentParser(add_help=False)
    source = inputs.add_mutually_exclusive_group(required=True)
    source.add_argument("--edges", metavar="FILE", help="Edge-list file (optional 'n=<count>' header)")
    source.add_argument("--graph6", metavar="STR|FILE", help="graph6 string or file")
    source.add_argument("--catalog", metavar="NAME", help="Catalog graph, e.g. petersen or cycle(6)")
    source.add_argument("--circulant", metavar="n:s1,s2,...", help="Circulant graph on Z_n")
    inputs.add_argument("--relabel", action="store_true", help="Edge-list tokens are labels, not indices")
    inputs.add_argument("--json", action="store_true", help="Emit JSON instead of text")
    inputs.add_argument("--tol", type=float, help="Eigensolver residual tolerance")
    inputs.add_argument("--cluster-tol", type=float, help="Eigenvalue clustering tolerance")
    inputs.add_argument("--config", metavar="FILE", help="Configuration file (default: config.yaml or $DMR_CONFIG)")
    inputs.add_argument("--output", metavar="FILE",
                        help="Write the report to FILE instead of stdout; a bare name goes under report.output_dir")

    parser = argparse.ArgumentParser(description="Distance mean-regular graph analysis.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING, ERROR (default from config)")
    commands = parser.add_subparsers(dest="command")
    commands.add_parser("analyze", parents=[inputs], help="Run the full pipeline and print a report")
    check = commands.add_parser("check", parents=[inputs], help="Run a single characterization")
    check.add_argument("property", choices=PROPERTIES, help="Property to check")
    listing = commands.add_parser("catalog", help="List the named graphs")
    listing.add_argument("--json", action="store_true", help="Emit JSON instead of a table")
    return parser


def run_check(dd, prop: str, config: Config) -> Verdict:
    """Dispatch one characterization."""
    spectral = config.spectral
    if prop == "drg":
        spectrum = real_eigenvalues(dd.adjacency, tol=spectral.tol, cluster_tol=spectral.cluster_tol)
        return is_distance_regular(dd, spectrum)
    if prop == "dmr":
        return is_distance_mean_regular(dd, spectral.tol, spectral.cluster_tol, interlacing=False).verdict
    if prop == "super-regular":
        return super_regular_check(dd)
    if prop == "omega":
        return omega_characterization(dd)[0]
    if prop == "triples":
        return triple_characterization(dd)
    if prop == "hadamard":
        return hadamard_characterization(dd)[0]
    raise ConfigurationError(f"unknown property {prop!r}", config_key="property")


def emit(text: str, output: Optional[str], config: Config) -> None:
    if output:
        write_output(resolve_output(output, config.report.output_dir), text)
    else:
        sys.stdout.write(text)


def cmd_catalog(args) -> int:
    table = catalog_table()
    if args.json:
        sys.stdout.write(json.dumps(table.to_dict(orient="records"), sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(tabulate(table, headers="keys", tablefmt="github", showindex=False) + "\n")
    return EXIT_HOLDS


def cmd_analyze(args, config: Config) -> int:
    graph, source, value = load_graph(args.edges, args.graph6, args.catalog, args.circulant, args.relabel)
    report = build_report(graph, config, source, value)
    emit(serialize_report(report) + "\n" if args.json else render_text(report), args.output, config)
    return EXIT_HOLDS if report.distance_mean_regular else EXIT_FAILS


def cmd_check(args, config: Config) -> int:
    graph, _, _ = load_graph(args.edges, args.graph6, args.catalog, args.circulant, args.relabel)
    dd = compute_distances(graph)
    verdict = run_check(dd, args.property, config)
    if args.json:
        payload = {"graph": graph.display_name(), "property": args.property,
                   "verdict": VerdictModel.from_verdict(verdict).model_dump(mode="json")}
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        lines = [f"{args.property}: {'holds' if verdict.holds else 'fails'}", f"reason: {verdict.reason}"]
        if verdict.witness is not None:
            lines.append(f"witness: {verdict.witness.description}")
        text = "\n".join(lines) + "\n"
    emit(text, args.output, config)
    return EXIT_HOLDS if verdict.holds else EXIT_FAILS


def troubleshoot(e: DmrGraphsError) -> None:
    print("\nTroubleshooting:", file=sys.stderr)
    if isinstance(e, GraphFormatError):
        print("- Edge lists hold one 'u v' pair per line; use --relabel for non-numeric labels", file=sys.stderr)
        print("- graph6 strings use bytes 63..126 only", file=sys.stderr)
    elif isinstance(e, GraphValidationError):
        print("- The analysis needs a connected graph given by exactly one input option", file=sys.stderr)
    elif isinstance(e, CatalogError):
        print("- Run 'task catalog' to list the available names", file=sys.stderr)
    elif isinstance(e, ConfigurationError):
        print("- Check config.yaml (or $DMR_CONFIG); every tolerance must be positive", file=sys.stderr)
    elif isinstance(e, FileOperationError):
        print("- Check that the file exists and the output directory is writable", file=sys.stderr)
    else:
        print("- Check logs/dmr_tool.log for details", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point with proper error handling."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        args = parser.parse_args(["catalog"])

    try:
        config = load_config(getattr(args, "config", None))
        setup_logging(level=args.log_level or config.logging.level, format_type=config.logging.format,
                      log_file=config.logging.file, config_file=config.logging.config_file)
        if args.command == "catalog":
            return cmd_catalog(args)
        config = apply_overrides(config, args.tol, args.cluster_tol)
        if args.command == "analyze":
            return cmd_analyze(args, config)
        return cmd_check(args, config)
    except KeyboardInterrupt:
        logger.info("Process interrupted by user")
        print("\nProcess interrupted by user.", file=sys.stderr)
        return EXIT_INTERRUPTED
    except DmrGraphsError as e:
        logger.error(f"{type(e).__name__}: {e.get_detailed_message()}")
        print(f"\n❌ Error: {e}", file=sys.stderr)
        troubleshoot(e)
        return EXIT_ERROR
    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        print(f"\n❌ Unexpected error occurred: {e}", file=sys.stderr)
        print("Check the log file for more details.", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
