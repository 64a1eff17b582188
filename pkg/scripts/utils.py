#!/usr/bin/env python3
################################################################################
#
# Script Name: utils.py
# ----------------
# Configuration loading, input resolution and file output shared by the scripts.
#
# @author Nicholas Wilde, 0xb299a622
# @date 29 08 2025
# @version 0.1.0
#
################################################################################

import os
import sys
from typing import Optional

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

# Add src to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from dmr_graphs.catalog import catalog
from dmr_graphs.config_model import Config
from dmr_graphs.errors import (
    ConfigurationError,
    DmrGraphsError,
    FileOperationError,
    GraphFormatError,
    GraphValidationError,
    wrap_exception
)
from dmr_graphs.formats import parse_edge_list, parse_graph6
from dmr_graphs.graph import Graph, circulant
from dmr_graphs.utils.logging import get_logger

logger = get_logger(__name__)

# Configuration file path
CONFIG_FILE = os.path.join(
    os.path.dirname(os.path.abspath(__file__)), '..', 'config.yaml'
)


def config_path(path: Optional[str] = None) -> str:
    """Explicit path, then DMR_CONFIG (from the environment or .env), then config.yaml at the repo root."""
    load_dotenv()
    return path or os.environ.get("DMR_CONFIG") or CONFIG_FILE


def load_config(path: Optional[str] = None) -> Config:
    """
    Load configuration from config.yaml with proper error handling.

    A missing file yields the defaults.

    Returns:
        Validated configuration

    Raises:
        ConfigurationError: If the file cannot be parsed or holds invalid values
        FileOperationError: If the file cannot be accessed
    """
    config_file = config_path(path)
    try:
        logger.debug(f"Loading configuration from {config_file}")
        with open(config_file, 'r', encoding='utf-8') as f:
            raw = yaml.safe_load(f)
    except FileNotFoundError:
        logger.info(f"No configuration file at {config_file}; using defaults")
        return Config()
    except yaml.YAMLError as e:
        raise ConfigurationError(
            f"Invalid YAML in configuration file: {config_file}",
            config_file=config_file,
            original_error=e
        )
    except PermissionError as e:
        raise FileOperationError(
            f"Permission denied reading configuration file: {config_file}",
            file_path=config_file,
            operation="read",
            original_error=e
        )

    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigurationError(
            "Configuration file does not contain a valid dictionary",
            config_file=config_file
        )
    try:
        config = Config.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        raise ConfigurationError(
            f"Invalid configuration value: {first['msg']}",
            config_key=".".join(str(x) for x in first['loc']),
            config_file=config_file,
            original_error=e
        )
    logger.debug("Configuration loaded successfully")
    return config


def apply_overrides(config: Config, tol: Optional[float] = None, cluster_tol: Optional[float] = None) -> Config:
    """
    Command-line tolerances replace the spectral section.

    Raises:
        ConfigurationError: If an override is not positive
    """
    updates = {k: v for k, v in (("tol", tol), ("cluster_tol", cluster_tol)) if v is not None}
    if not updates:
        return config
    for key, value in updates.items():
        if value <= 0:
            raise ConfigurationError(f"--{key.replace('_', '-')} must be positive", config_key=f"spectral.{key}")
    spectral = config.spectral.model_copy(update=updates)
    return config.model_copy(update={"spectral": spectral})


def read_text_file(path: str) -> str:
    """
    Raises:
        FileOperationError: If the file cannot be read
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return f.read()
    except FileNotFoundError as e:
        raise FileOperationError(f"Input file not found: {path}", file_path=path, operation="read",
                                 original_error=e)
    except (PermissionError, IsADirectoryError, UnicodeDecodeError) as e:
        raise FileOperationError(f"Cannot read input file: {path}", file_path=path, operation="read",
                                 original_error=e)


def resolve_output(path: str, output_dir: Optional[str]) -> str:
    """A bare file name goes under output_dir; paths with a directory part are used as given."""
    if output_dir and not os.path.dirname(path):
        return os.path.join(output_dir, path)
    return path


def write_output(path: str, text: str) -> None:
    """
    Write a report, creating parent directories.

    Raises:
        FileOperationError: If the file cannot be written
    """
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info(f"Report written to {path}")
    except OSError as e:
        raise FileOperationError(f"Cannot write report: {path}", file_path=path, operation="write",
                                 original_error=e)


def parse_circulant(text: str) -> Graph:
    """
    "n:s1,s2,..." to a circulant graph.

    Raises:
        GraphFormatError: If the text is malformed
    """
    try:
        n_text, _, rest = text.partition(":")
        n = int(n_text)
        connections = [int(s) for s in rest.split(",") if s.strip()]
    except ValueError as e:
        raise GraphFormatError(f"circulant must look like n:s1,s2,... (got {text!r})", fmt="circulant",
                               token=text, original_error=e)
    return circulant(n, connections, name=f"circulant({text})")


def load_graph(edges: Optional[str] = None, graph6: Optional[str] = None, catalog_name: Optional[str] = None,
               circulant_arg: Optional[str] = None, relabel: bool = False) -> tuple:
    """
    Resolve exactly one input option to a graph. With relabel, edge-list tokens are arbitrary labels.

    Returns:
        (graph, source, value)

    Raises:
        GraphFormatError, GraphValidationError, CatalogError, FileOperationError
    """
    given = [(k, v) for k, v in (("edges", edges), ("graph6", graph6), ("catalog", catalog_name),
                                 ("circulant", circulant_arg)) if v is not None]
    if len(given) != 1:
        raise GraphValidationError("give exactly one of --edges, --graph6, --catalog, --circulant",
                                   field_name="input", expected="1", actual_value=len(given))
    source, value = given[0]
    try:
        if source == "edges":
            graph = parse_edge_list(read_text_file(value), name=os.path.basename(value), relabel=relabel)
        elif source == "graph6":
            text = read_text_file(value) if os.path.isfile(value) else value
            graph = parse_graph6(text, name=os.path.basename(value) if os.path.isfile(value) else None)
        elif source == "catalog":
            graph = catalog(value)
        else:
            graph = parse_circulant(value)
    except DmrGraphsError:
        raise
    except Exception as e:
        raise wrap_exception(e, GraphFormatError, f"Failed to load graph from {source} {value!r}")
    logger.debug(f"Loaded {graph.display_name()} from {source}")
    return graph, source, value
