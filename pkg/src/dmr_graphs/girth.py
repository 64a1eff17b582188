#!/usr/bin/env python3
"""
Odd and even girth read off the intersection mean-array, checked against the graph.

Odd girth is 2m+1 with m the first index where a_m != 0. The even rule 2i with
i the first index where c_i > 1 always bounds the even girth from above and is
exact when the graph is bipartite or that bound is below the odd girth. The
girth itself, min(odd, even rule), is exact in every case.
"""

from dataclasses import dataclass
from typing import Optional

import networkx as nx
import numpy as np

from dmr_graphs.analysis import DmrProfile
from dmr_graphs.errors import ConsistencyError
from dmr_graphs.graph import DistanceData
from dmr_graphs.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class GirthReport:
    """None stands for an infinite girth."""

    odd_girth: Optional[int]
    even_girth: Optional[int]
    even_girth_exact: bool
    girth: Optional[int]
    direct_odd_girth: Optional[int]
    direct_even_girth: Optional[int]


def _min_or_none(*values: Optional[int]) -> Optional[int]:
    present = [v for v in values if v is not None]
    return min(present) if present else None


def direct_odd_girth(dd: DistanceData) -> Optional[int]:
    """Shortest odd cycle: 2d+1 over edges xy and vertices u with dist(u, x) = dist(u, y) = d."""
    if not dd.graph.edges:
        return None
    edges = np.array(sorted(dd.graph.edges), dtype=np.int64)
    dx, dy = dd.dist[:, edges[:, 0]], dd.dist[:, edges[:, 1]]
    level = dx[dx == dy]
    return int(2 * level.min() + 1) if level.size else None


def direct_even_girth(dd: DistanceData) -> Optional[int]:
    """Shortest even cycle, by bounded cycle enumeration."""
    g = dd.graph.to_networkx()
    for bound in range(4, dd.n + 1, 2):
        if any(len(cycle) % 2 == 0 and len(cycle) > 2 for cycle in nx.simple_cycles(g, length_bound=bound)):
            return bound
    return None


def girth_from_profile(profile: DmrProfile, dd: DistanceData) -> GirthReport:
    """
    Girths from the mean-array, cross-checked against direct cycle searches.

    Raises:
        ConsistencyError: if a value that must be exact disagrees with the direct search,
            or the even rule falls below the true even girth
    """
    odd_index = next((i for i, a in enumerate(profile.abar) if a != 0), None)
    odd = 2 * odd_index + 1 if odd_index is not None else None
    even_index = next((i for i, c in enumerate(profile.cbar, start=1) if c > 1), None)
    even = 2 * even_index if even_index is not None else None
    exact = odd is None or (even is not None and even < odd)
    girth = _min_or_none(odd, even)

    true_odd = direct_odd_girth(dd)
    true_even = direct_even_girth(dd)
    if odd != true_odd:
        raise ConsistencyError("odd girth from the mean-array disagrees with the graph", check="girth",
                               details=f"{odd} != {true_odd}")
    if exact and even != true_even:
        raise ConsistencyError("even girth from the mean-array disagrees with the graph", check="girth",
                               details=f"{even} != {true_even}")
    if not exact and even is not None and (true_even is None or true_even > even):
        raise ConsistencyError("even-girth bound lies below the shortest even cycle", check="girth",
                               details=f"{even} < {true_even}")
    if girth != _min_or_none(true_odd, true_even):
        raise ConsistencyError("girth from the mean-array disagrees with the graph", check="girth",
                               details=f"{girth} != {_min_or_none(true_odd, true_even)}")
    if not exact:
        logger.debug(f"Even-girth rule gives only the bound {even}; shortest even cycle has length {true_even}")
    return GirthReport(odd, even, exact, girth, true_odd, true_even)
