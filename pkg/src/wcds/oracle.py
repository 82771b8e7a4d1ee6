"""Exact counting by exhaustive subset sweep.

This is the referee every closed form and recurrence is checked against, so
it stays deliberately dumb: enumerate subsets, test the definition. The sweep
is vectorized with numpy (all subsets of a chunk are BFS-expanded in
parallel) and partitioned into fixed-size chunks; per-chunk counts are summed
as Python ints, so the result is independent of the partitioning and cannot
overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .core import mask_is_wcds
from .graph import Graph, is_connected

DEFAULT_CAP = 24
HARD_CAP = 30
_CHUNK_BITS = 20


class CapacityError(Exception):
    """Raised when a graph exceeds the subset-sweep cap."""


@dataclass(frozen=True)
class CountTable:
    """Counts of weakly connected dominating sets by cardinality.

    ``counts[k]`` is the number of such sets of size k + 1; cardinalities run
    1..order. ``connected`` is False for a disconnected input, in which case
    every entry is zero.
    """

    order: int
    counts: tuple[int, ...]
    connected: bool = True

    def __post_init__(self) -> None:
        if len(self.counts) != self.order:
            raise ValueError("counts length must equal order")

    def count(self, i: int) -> int:
        """Count at cardinality i, 0 outside 1..order."""
        if 1 <= i <= self.order:
            return self.counts[i - 1]
        return 0

    def total(self) -> int:
        return sum(self.counts)

    def min_size(self) -> int | None:
        """Smallest cardinality with a non-zero count, None if all zero."""
        for i, c in enumerate(self.counts, start=1):
            if c:
                return i
        return None


def _check_cap(g: Graph, cap: int) -> None:
    if cap > HARD_CAP:
        raise ValueError(f"cap {cap} exceeds the hard limit {HARD_CAP}")
    if g.order > cap:
        raise CapacityError(
            f"order {g.order} exceeds the subset-sweep cap {cap} "
            f"(2**{g.order} subsets); raise the cap up to {HARD_CAP} to proceed"
        )


def sweep_counts(order: int, edges: frozenset[tuple[int, int]], chunk_bits: int = _CHUNK_BITS) -> list[int]:
    """Raw subset sweep: counts[k] = number of k-subsets whose weakly induced
    spanning subgraph is connected. Exposed with a chunk-size knob so the
    partition-independence contract is testable."""
    n = order
    full = (1 << n) - 1
    # forward then backward edge order lets reachability run along paths and
    # cycles in few sweeps instead of order-many
    fwd = sorted((u - 1, v - 1) for u, v in edges)
    edge_seq = fwd + fwd[::-1]
    counts = [0] * (n + 1)
    step = 1 << min(chunk_bits, n)
    for lo in range(0, 1 << n, step):
        masks = np.arange(lo, min(lo + step, 1 << n), dtype=np.int64)
        reach = np.ones_like(masks)
        for _ in range(n):
            prev = reach.copy()
            for u, v in edge_seq:
                kept = ((masks >> u) | (masks >> v)) & 1
                reach |= ((reach >> u) & kept) << v
                reach |= ((reach >> v) & kept) << u
            if np.array_equal(prev, reach):
                break
        hits = masks[reach == full]
        if hits.size:
            sizes = np.bitwise_count(hits.astype(np.uint64)).astype(np.int64)
            for size, c in enumerate(np.bincount(sizes, minlength=n + 1)):
                counts[size] += int(c)
    # the all-zero mask sneaks through for order 1 (vertex 1 reaches itself)
    counts[0] = 0
    return counts


@lru_cache(maxsize=None)
def _count_table_cached(g: Graph) -> CountTable:
    if not is_connected(g):
        return CountTable(g.order, (0,) * g.order, connected=False)
    counts = sweep_counts(g.order, g.edges)
    return CountTable(g.order, tuple(counts[1:]), connected=True)


def count_table(g: Graph, cap: int = DEFAULT_CAP) -> CountTable:
    """Full count table for g by brute force.

    Disconnected graphs get the all-zero table with ``connected`` False (no
    subset can weakly connect them), so composition code can proceed
    uniformly. Orders above ``cap`` raise :class:`CapacityError`.
    """
    _check_cap(g, cap)
    return _count_table_cached(g)


def enumerate_wcds(g: Graph, i: int, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All weakly connected dominating sets of cardinality i, as sorted
    tuples in lexicographic order. Empty outside 1..order."""
    _check_cap(g, cap)
    if i < 1 or i > g.order:
        return []
    adj = g.neighbor_masks()
    out = []
    for combo in combinations(g.vertices(), i):
        mask = 0
        for v in combo:
            mask |= 1 << (v - 1)
        if mask_is_wcds(g.order, adj, mask):
            out.append(combo)
    return out


def gamma_w(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Minimum size of a weakly connected dominating set.

    Undefined (ValueError) for disconnected graphs.
    """
    # TODO: ascending-size search, so callers near the cap skip the full sweep
    table = count_table(g, cap)
    k = table.min_size()
    if k is None:
        raise ValueError("gamma_w undefined: graph is disconnected")
    return k


def gamma(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Minimum size of an ordinary dominating set."""
    _check_cap(g, cap)
    n = g.order
    adj = g.neighbor_masks()
    closed = [adj[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    for i in range(1, n + 1):
        for combo in combinations(range(n), i):
            cov = 0
            for v in combo:
                cov |= closed[v]
            if cov == full:
                return i
    raise AssertionError("unreachable: the full vertex set always dominates")


def dominating_counts(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    """Counts of ordinary dominating sets by cardinality (index i - 1).

    Companion to :func:`count_table` used by the verification layer to
    diagnose composition formulas whose one-part terms should count
    dominating sets rather than weakly connected ones.
    """
    _check_cap(g, cap)
    n = g.order
    adj = g.neighbor_masks()
    counts = [0] * (n + 1)
    step = 1 << min(_CHUNK_BITS, n)
    for lo in range(0, 1 << n, step):
        masks = np.arange(lo, min(lo + step, 1 << n), dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(n):
            ok &= (((masks >> v) & 1) != 0) | ((masks & adj[v]) != 0)
        hits = masks[ok]
        if hits.size:
            sizes = np.bitwise_count(hits.astype(np.uint64)).astype(np.int64)
            for size, c in enumerate(np.bincount(sizes, minlength=n + 1)):
                counts[size] += int(c)
    return tuple(counts[1:])


def has_minimum_wcds_containing(g: Graph, v: int, cap: int = DEFAULT_CAP) -> bool:
    """Whether some minimum-size weakly connected dominating set contains v."""
    k = gamma_w(g, cap)
    adj = g.neighbor_masks()
    bit = 1 << (v - 1)
    for combo in combinations(g.vertices(), k):
        if v not in combo:
            continue
        mask = 0
        for w in combo:
            mask |= 1 << (w - 1)
        if mask & bit and mask_is_wcds(g.order, adj, mask):
            return True
    return False


def has_minimum_dominating_containing(g: Graph, v: int, cap: int = DEFAULT_CAP) -> bool:
    """Whether some minimum-size ordinary dominating set contains v."""
    k = gamma(g, cap)
    n = g.order
    adj = g.neighbor_masks()
    closed = [adj[u] | (1 << u) for u in range(n)]
    full = (1 << n) - 1
    for combo in combinations(range(n), k):
        if v - 1 not in combo:
            continue
        cov = 0
        for u in combo:
            cov |= closed[u]
        if cov == full:
            return True
    return False
