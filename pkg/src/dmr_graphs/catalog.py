#!/usr/bin/env python3
"""
Named graphs used throughout the docs and the test suite.

Plain names ("petersen") build fixed graphs; parameterized names take integer
arguments in parentheses ("cycle(6)", "hypercube(3)").
"""

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import networkx as nx
import pandas as pd

from dmr_graphs.errors import CatalogError, GraphValidationError
from dmr_graphs.formats import parse_edge_list
from dmr_graphs.graph import Graph, cartesian_product, circulant

# Vertex labels follow the drawing of the prism with outer face 1..5, inner face 6..10.
PRISM_C5K2_EDGES = """\
1 2
1 6
1 5
2 3
2 7
6 7
10 6
4 5
10 5
8 3
9 4
7 8
9 10
9 8
4 3
"""

_NAME = re.compile(r"^\s*([a-z_][a-z0-9_]*)\s*(?:\(\s*([^)]*)\s*\))?\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: str
    note: str
    builder: Callable[..., Graph]
    parameterized: bool = False
    example: Optional[str] = None


def _cycle(n: int) -> Graph:
    if n < 3:
        raise CatalogError("cycle needs n >= 3", name="cycle")
    return Graph.from_networkx(nx.cycle_graph(n), name=f"cycle({n})")


def _complete(n: int) -> Graph:
    if n < 2:
        raise CatalogError("complete needs n >= 2", name="complete")
    return Graph.from_networkx(nx.complete_graph(n), name=f"complete({n})")


def _path(n: int) -> Graph:
    if n < 2:
        raise CatalogError("path needs n >= 2", name="path")
    return Graph.from_networkx(nx.path_graph(n), name=f"path({n})")


def _hypercube(d: int) -> Graph:
    if d < 1:
        raise CatalogError("hypercube needs d >= 1", name="hypercube")
    return Graph.from_networkx(nx.hypercube_graph(d), name=f"hypercube({d})")


def _cycle_prism(n: int) -> Graph:
    return cartesian_product(_cycle(n), _complete(2), name=f"cycle_prism({n})")


def _petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph(), name="petersen")


def _prism_c5k2() -> Graph:
    return parse_edge_list(PRISM_C5K2_EDGES, name="prism_c5k2", relabel=True)


def _truncated_tetrahedron() -> Graph:
    return Graph.from_networkx(nx.truncated_tetrahedron_graph(), name="truncated_tetrahedron")


def _cay_z8() -> Graph:
    return circulant(8, {1, 4}, name="cay_z8")


def _cay_z21() -> Graph:
    return circulant(21, {1, 2, 3, 4, 5}, name="cay_z21")


def _sr_c3c4_complement() -> Graph:
    union = nx.disjoint_union(nx.cycle_graph(3), nx.cycle_graph(4))
    return Graph.from_networkx(nx.complement(union), name="sr_c3c4_complement")


CATALOG: Dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in (
        CatalogEntry("complete", "n", "complete graph K_n (distance-regular, D=1)", _complete, True, "complete(5)"),
        CatalogEntry("cycle", "n", "cycle C_n (distance-regular)", _cycle, True, "cycle(6)"),
        CatalogEntry("path", "n", "path P_n (not distance mean-regular for n >= 3)", _path, True, "path(3)"),
        CatalogEntry("hypercube", "2^d", "hypercube Q_d (distance-regular)", _hypercube, True, "hypercube(3)"),
        CatalogEntry("cycle_prism", "2n", "prism C_n x K_2", _cycle_prism, True, "cycle_prism(5)"),
        CatalogEntry("petersen", "10", "Petersen graph (distance-regular, girth 5)", _petersen),
        CatalogEntry("prism_c5k2", "10",
                     "prism C5 x K2 with the worked-example labels 1..10; distance mean-regular, "
                     "not distance-regular", _prism_c5k2),
        CatalogEntry("truncated_tetrahedron", "12",
                     "truncated tetrahedron K4[triangle]; distance mean-regular with non-commuting "
                     "proper mean-matrices", _truncated_tetrahedron),
        CatalogEntry("cay_z8", "8",
                     "Cay(Z8; {+-1, 4}): 8-cycle plus 4 diagonals. Often quoted as Cay(Z8; +-4), "
                     "which is only a perfect matching; the generators {+-1, 4} give b0 = 3",
                     _cay_z8),
        CatalogEntry("cay_z21", "21",
                     "Cay(Z21; {+-1..+-5}): distance mean-regular with integer mean-matrix, "
                     "D=2 but 11 distinct eigenvalues", _cay_z21),
        CatalogEntry("sr_c3c4_complement", "7",
                     "complement of C3 + C4: super-regular (1,4,2) but not distance mean-regular",
                     _sr_c3c4_complement),
    )
}


def _parse_arguments(name: str, raw: Optional[str]) -> List[int]:
    if raw is None or not raw.strip():
        return []
    try:
        return [int(token) for token in raw.split(",")]
    except ValueError as e:
        raise CatalogError(f"catalog arguments must be integers: {raw!r}", name=name, original_error=e)


def catalog(name: str) -> Graph:
    """
    Build a catalog graph by name.

    Args:
        name: "petersen", "cycle(6)", "hypercube(3)", ...

    Raises:
        CatalogError: unknown name, missing or invalid arguments
    """
    match = _NAME.match(name)
    if not match:
        raise CatalogError(f"malformed catalog name: {name!r}", name=name)
    key, raw = match.group(1).lower(), match.group(2)
    entry = CATALOG.get(key)
    if entry is None:
        known = ", ".join(sorted(CATALOG))
        raise CatalogError(f"unknown catalog graph {key!r} (known: {known})", name=key)

    args = _parse_arguments(key, raw)
    if entry.parameterized and len(args) != 1:
        raise CatalogError(f"{key} takes exactly one integer argument, e.g. {entry.example}", name=key)
    if not entry.parameterized and args:
        raise CatalogError(f"{key} takes no arguments", name=key)
    try:
        return entry.builder(*args)
    except GraphValidationError as e:
        raise CatalogError(str(e), name=key, original_error=e)


def catalog_entries() -> List[CatalogEntry]:
    return sorted(CATALOG.values(), key=lambda e: e.name)


def catalog_table() -> pd.DataFrame:
    """One row per catalog entry: name, order (n), example invocation and notes."""
    rows = [
        {
            "name": e.name,
            "n": e.order,
            "usage": e.example if e.parameterized else e.name,
            "note": e.note,
        }
        for e in catalog_entries()
    ]
    return pd.DataFrame(rows, columns=["name", "n", "usage", "note"])


# Graphs used by the full-catalog suites, small enough for exhaustive checks.
SUITE_NAMES = (
    "complete(4)",
    "complete(5)",
    "cycle(4)",
    "cycle(5)",
    "cycle(6)",
    "cycle(9)",
    "path(3)",
    "path(5)",
    "hypercube(3)",
    "cycle_prism(3)",
    "cycle_prism(4)",
    "cycle_prism(6)",
    "petersen",
    "prism_c5k2",
    "truncated_tetrahedron",
    "cay_z8",
    "cay_z21",
    "sr_c3c4_complement",
)
