#!/usr/bin/env python3
"""
Seeded random search for super-regular graphs that are not distance mean-regular.

Super-regularity forces regularity, so candidates are drawn as random regular
graphs rather than filtered out of G(n, p).
"""

import random
from typing import Optional

import networkx as nx

from dmr_graphs.analysis import is_distance_mean_regular, super_regular_check
from dmr_graphs.config_model import SearchSettings
from dmr_graphs.graph import Graph, compute_distances
from dmr_graphs.utils.logging import get_logger

logger = get_logger(__name__)


def random_connected_graph(rng: random.Random, n: int, p: float, attempts: int = 100) -> Optional[Graph]:
    """G(n, p) sample redrawn until connected; None after too many disconnected draws."""
    for _ in range(attempts):
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 32))
        if nx.is_connected(g):
            return Graph.from_networkx(g)
    return None


def random_regular_graph(rng: random.Random, n: int) -> Optional[Graph]:
    """Connected random d-regular graph on n vertices with 2 <= d <= n-2, or None."""
    degrees = [d for d in range(2, n - 1) if (n * d) % 2 == 0]
    if not degrees:
        return None
    g = nx.random_regular_graph(rng.choice(degrees), n, seed=rng.randrange(2 ** 32))
    return Graph.from_networkx(g) if nx.is_connected(g) else None


def search_super_regular(settings: Optional[SearchSettings] = None) -> Optional[Graph]:
    """
    Sample connected regular graphs until one is super-regular but not distance mean-regular.

    Returns:
        The first witness found within the budget, or None
    """
    settings = settings or SearchSettings()
    rng = random.Random(settings.seed)
    logger.info(f"Searching {settings.budget} samples, n in [{settings.min_order}, {settings.max_order}]")
    for attempt in range(settings.budget):
        n = rng.randint(settings.min_order, settings.max_order)
        g = random_regular_graph(rng, n)
        if g is None:
            continue
        dd = compute_distances(g)
        if not super_regular_check(dd).holds:
            continue
        if not is_distance_mean_regular(dd, interlacing=False).verdict.holds:
            logger.info(f"Found super-regular, non mean-regular graph after {attempt + 1} samples (n={n})")
            return Graph.from_edges(g.n, g.edges, name=f"super_regular_witness_n{n}")
    logger.info("No super-regular, non mean-regular graph within the search budget")
    return None
