#!/usr/bin/env python3
################################################################################
#
# Script Name: find_super_regular.py
# ----------------
# Seeded random search for a super-regular graph that is not distance
# mean-regular; the first hit is written as graph6.
#
# @author Nicholas Wilde, 0xb299a622
# @date 2025-09-14
# @version 0.1.0
#
################################################################################

import argparse
import os
import sys
from typing import List, Optional

# Add src to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from dmr_graphs.errors import DmrGraphsError
from dmr_graphs.formats import encode_graph6
from dmr_graphs.search import search_super_regular
from dmr_graphs.utils.logging import get_logger, setup_logging
from scripts.utils import load_config, write_output

logger = get_logger(__name__)

DEFAULT_OUTPUT = os.path.join("data", "super_regular_witness.g6")


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Find a super-regular graph that is not distance mean-regular.")
    parser.add_argument("--config", metavar="FILE", help="Configuration file")
    parser.add_argument("--budget", type=int, help="Number of samples (overrides search.budget)")
    parser.add_argument("--seed", type=int, help="Random seed (overrides search.seed)")
    parser.add_argument("--output", default=DEFAULT_OUTPUT, help=f"graph6 output (default: {DEFAULT_OUTPUT})")
    args = parser.parse_args(argv)

    try:
        config = load_config(args.config)
        setup_logging(level=config.logging.level, format_type=config.logging.format, log_file=config.logging.file,
                      config_file=config.logging.config_file)
        updates = {k: v for k, v in (("budget", args.budget), ("seed", args.seed)) if v is not None}
        settings = config.search.model_validate({**config.search.model_dump(), **updates})
        graph = search_super_regular(settings)
        if graph is None:
            print("No witness found within the search budget.")
            return 2
        text = encode_graph6(graph) + "\n"
        write_output(args.output, text)
        print(f"✓ {graph.display_name()} written to {args.output}: {text.strip()}")
        return 0
    except KeyboardInterrupt:
        logger.info("Search interrupted by user")
        print("\nProcess interrupted by user.")
        return 130
    except DmrGraphsError as e:
        logger.error(f"Search failed: {e.get_detailed_message()}")
        print(f"\n❌ Error: {e}")
        return 1
    except ValueError as e:
        logger.error(f"Invalid search settings: {e}")
        print(f"\n❌ Invalid search settings: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
