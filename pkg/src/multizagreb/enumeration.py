"""Exhaustive generation of free trees, plus labeled-tree generators used as oracles.

Free trees are produced with the Wright-Richmond-Odlyzko-McKay successor rule
on canonical level sequences; each class appears exactly once, always in the
same order.
"""

from __future__ import annotations

import heapq
from itertools import product
from typing import Iterator, Sequence

from .domination import CapExceededError, gamma_k
from .tree import Tree, canonical_code_adj

FREE_TREE_CAP = 18
PRUFER_CAP = 9

# OEIS A000055, index = order
FREE_TREE_COUNTS = (
    1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629,
    123867, 317955, 823065,
)


def level_sequence_to_edges(levels: Sequence[int]) -> list[tuple[int, int]]:
    """Vertex i hangs from the latest earlier vertex one level up."""
    edges = []
    last_at_level: list[int] = []
    for i, lv in enumerate(levels):
        del last_at_level[lv:]
        if lv:
            edges.append((last_at_level[lv - 1], i))
        last_at_level.append(i)
    return edges


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted level sequence (Beyer-Hedetniemi)."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: Sequence[int]) -> tuple[list[int], list[int]]:
    """Split into the first root subtree (re-rooted) and the remainder."""
    m = len(levels)
    ones = 0
    for i, lv in enumerate(levels):
        if lv == 1:
            ones += 1
            if ones == 2:
                m = i
                break
    left = [lv - 1 for lv in levels[1:m]]
    rest = [0] + list(levels[m:])
    return left, rest


def _next_free(candidate: list[int]) -> list[int] | None:
    left, rest = _split(candidate)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return candidate
    p = len(left)
    nxt = _next_rooted(candidate, p)
    if nxt is not None and candidate[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def free_tree_level_sequences(n: int, cap: int = FREE_TREE_CAP) -> Iterator[list[int]]:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"free tree enumeration cap is n <= {cap}, got n={n}")
    if n <= 2:
        yield list(range(n))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted(levels)


def free_trees(n: int, cap: int = FREE_TREE_CAP) -> Iterator[Tree]:
    """One tree per isomorphism class of order ``n``, in a fixed order."""
    for levels in free_tree_level_sequences(n, cap):
        yield Tree.from_edge_list(n, level_sequence_to_edges(levels))


def free_trees_filtered(n: int, k: int, gamma: int, cap: int = FREE_TREE_CAP) -> Iterator[Tree]:
    for t in free_trees(n, cap):
        if gamma_k(t, k).gamma == gamma:
            yield t


def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical rooted trees of order ``n``, starting from the path."""
    levels: list[int] | None = list(range(n))
    while levels is not None:
        yield levels
        if n <= 1:
            return
        levels = _next_rooted(levels)


def free_trees_via_rooted(n: int, cap: int = FREE_TREE_CAP) -> Iterator[Tree]:
    """Second generation order: every rooted tree, kept at first sight of its free class."""
    if n > cap:
        raise CapExceededError(f"free tree enumeration cap is n <= {cap}, got n={n}")
    seen = set()
    for levels in rooted_level_sequences(n):
        t = Tree.from_edge_list(n, level_sequence_to_edges(levels))
        code = canonical_code_adj(t.adjacency)
        if code not in seen:
            seen.add(code)
            yield t


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def _check_prufer(n: int, cap: int) -> None:
    if n < 2:
        raise ValueError(f"Prufer generation needs n >= 2, got {n}")
    if n > cap:
        raise CapExceededError(f"Prufer oracle cap is n <= {cap}, got n={n}")


def labeled_trees_prufer(n: int, cap: int = PRUFER_CAP) -> Iterator[Tree]:
    """All ``n**(n-2)`` labeled trees on ``0..n-1``."""
    _check_prufer(n, cap)
    for seq in product(range(n), repeat=n - 2):
        yield Tree.from_edge_list(n, prufer_decode(seq, n))


def prufer_parents(seq: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Linear-time decode to a parent array rooted at ``n-1``.

    Also returns the leaf-removal order, in which every vertex follows all of
    its descendants.
    """
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    parent = [-1] * n
    order = []
    ptr = degree.index(1)
    leaf = ptr
    for x in seq:
        parent[leaf] = x
        order.append(leaf)
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    parent[leaf] = n - 1
    order.append(leaf)
    return parent, order


def _code_from_parents(n: int, parent: list[int], order: list[int]) -> str:
    """Bits of ``canonical_code_adj`` for the decoded tree.

    Subtree words are built once for the root ``n-1``; re-rooting at the
    centroid only recomputes the words along the centroid-to-root path.
    """
    root = n - 1
    size = [1] * n
    heaviest = [0] * n
    kids: list[list[int]] = [[] for _ in range(n)]
    down = ["10"] * n
    for v in order:
        ks = kids[v]
        if ks:
            down[v] = "1" + "".join(sorted([down[c] for c in ks])) + "0"
        p = parent[v]
        sv = size[v]
        size[p] += sv
        if sv > heaviest[p]:
            heaviest[p] = sv
        kids[p].append(v)
    half = n // 2
    cents = [v for v in range(n) if heaviest[v] <= half and n - size[v] <= half]
    if len(cents) == 2:
        a, b = cents
        if parent[b] != a:
            a, b = b, a
        # a is now the parent of b
        halves = sorted((down[b], _up_word(root, parent, kids, down, b)))
        return "1" + halves[0] + halves[1]
    c = cents[0]
    words = [down[x] for x in kids[c]]
    if c != root:
        words.append(_up_word(root, parent, kids, down, c))
    words.sort()
    return "01" + "".join(words) + "0"


def _up_word(root: int, parent: list[int], kids: list[list[int]], down: list[str], c: int) -> str:
    """Word of the component across the edge from ``c`` to its parent, rooted at the parent."""
    path = [c]
    while path[-1] != root:
        path.append(parent[path[-1]])
    word = None
    for i in range(len(path) - 1, 0, -1):
        below = path[i - 1]
        words = [down[x] for x in kids[path[i]] if x != below]
        if word is not None:
            words.append(word)
        words.sort()
        word = "1" + "".join(words) + "0"
    assert word is not None
    return word


def prufer_class_count(n: int, cap: int = PRUFER_CAP) -> tuple[int, int]:
    """(labeled tree count, distinct canonical codes) over every Prufer sequence."""
    _check_prufer(n, cap)
    codes = set()
    total = 0
    for seq in product(range(n), repeat=n - 2):
        parent, order = prufer_parents(seq, n)
        codes.add(_code_from_parents(n, parent, order))
        total += 1
    return total, len(codes)
