"""Distance-k domination on trees.

``gamma_k`` runs one bottom-up pass over a BFS order rooted at vertex 0.
``gamma_k_bruteforce`` is an independent subset-search oracle used to certify it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .tree import Tree, _bfs_order, distance_matrix, distances_from

BRUTEFORCE_CAP = 16


class CapExceededError(ValueError):
    """Raised when a request exceeds a configured size cap."""


@dataclass(frozen=True)
class DominationResult:
    gamma: int
    witness: tuple[int, ...]


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"radius k must be >= 1, got {k}")


def _check_set(tree: Tree, dominators: Iterable[int]) -> frozenset[int]:
    ds = frozenset(dominators)
    if not ds:
        raise ValueError("dominating set must be nonempty")
    for v in ds:
        if not 0 <= v < tree.n:
            raise ValueError(f"vertex {v} out of range 0..{tree.n - 1}")
    return ds


def is_k_dominating(tree: Tree, dominators: Iterable[int], k: int) -> bool:
    _check_k(k)
    ds = _check_set(tree, dominators)
    best = [tree.n] * tree.n
    for d in ds:
        for v, dist in enumerate(distances_from(tree, d)):
            if dist < best[v]:
                best[v] = dist
    return max(best) <= k


def gamma_k(tree: Tree, k: int) -> DominationResult:
    """Minimum distance-k dominating set by the greedy deepest-demand pass.

    For each processed vertex we keep ``cover`` (k minus the distance to the
    nearest chosen vertex below it, or -1 if none reaches it) and ``demand``
    (distance to the farthest still-undominated vertex below it, or -1).
    A vertex is chosen exactly when some demand would otherwise fall out of
    range, i.e. when its demand reaches k.
    """
    _check_k(k)
    n = tree.n
    adj = tree.adjacency
    order = _bfs_order(adj, 0)
    parent = [-1] * n
    for u in order:
        for w in adj[u]:
            if w != parent[u]:
                parent[w] = u
    cover = [-1] * n
    demand = [-1] * n
    chosen: list[int] = []
    for v in reversed(order):
        cov = -1
        dem = -1
        for c in adj[v]:
            if c == parent[v]:
                continue
            if cover[c] - 1 > cov:
                cov = cover[c] - 1
            if demand[c] >= 0 and demand[c] + 1 > dem:
                dem = demand[c] + 1
        if cov < 0 and dem < 0:
            dem = 0
        if dem >= 0 and cov >= dem:
            dem = -1
        if dem == k or (v == 0 and dem >= 0):
            chosen.append(v)
            cov = k
            dem = -1
        cover[v] = cov
        demand[v] = dem
    chosen.sort()
    return DominationResult(len(chosen), tuple(chosen))


def gamma_k_bruteforce(tree: Tree, k: int, cap: int = BRUTEFORCE_CAP) -> int:
    """Smallest t such that some t-subset dominates, by increasing-size search."""
    _check_k(k)
    if tree.n > cap:
        raise CapExceededError(f"brute-force oracle cap is n <= {cap}, got n={tree.n}")
    dist = distance_matrix(tree)
    full = (1 << tree.n) - 1
    balls = [sum(1 << w for w in range(tree.n) if dist[v][w] <= k) for v in range(tree.n)]
    for t in range(1, tree.n + 1):
        for combo in combinations(balls, t):
            acc = 0
            for b in combo:
                acc |= b
            if acc == full:
                return t
    raise AssertionError("unreachable: the full vertex set dominates")


def removable_pendants(tree: Tree, k: int) -> tuple[frozenset[int], frozenset[int]]:
    """Pendants whose deletion keeps gamma_k, and the union of their neighborhoods."""
    _check_k(k)
    if tree.n < 2:
        raise ValueError("removable_pendants needs n >= 2")
    base = gamma_k(tree, k).gamma
    removable = []
    for w in range(tree.n):
        if tree.degree(w) == 1 and gamma_k(tree.delete_vertices([w]), k).gamma == base:
            removable.append(w)
    nbrs = frozenset(x for w in removable for x in tree.neighbors(w))
    return frozenset(removable), nbrs


def private_k_neighbors(tree: Tree, dominators: Iterable[int], k: int, u: int) -> frozenset[int]:
    _check_k(k)
    ds = _check_set(tree, dominators)
    if u not in ds:
        raise ValueError(f"vertex {u} is not in the dominating set")
    du = distances_from(tree, u)
    others = [distances_from(tree, x) for x in sorted(ds - {u})]
    return frozenset(
        v for v in range(tree.n) if du[v] <= k and all(d[v] > k for d in others)
    )
