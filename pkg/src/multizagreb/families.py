"""Constructors for the named tree families and the corona decomposition."""

from __future__ import annotations

from .tree import Tree, is_isomorphic


def path(n: int) -> Tree:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Tree.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Tree.from_edge_list(n, [(0, i) for i in range(1, n)])


def _check_nks(n: int, k: int, s: int) -> None:
    if k < 1 or s < 1:
        raise ValueError(f"need k >= 1 and s >= 1, got k={k}, s={s}")
    if n < (k + 1) * s:
        raise ValueError(f"need n >= (k+1)s = {(k + 1) * s}, got n={n}")


def t_nks(n: int, k: int, s: int) -> Tree:
    """Starlike tree with center degree ``n - k*s``.

    Branches at the center (vertex 0): one path of k vertices, ``s-1`` paths
    of k+1 vertices, and ``n-(k+1)s`` pendant vertices. When the center
    degree is below 3 the tree is a path and ``path(n)`` is returned.
    """
    _check_nks(n, k, s)
    if n - k * s < 3:
        return path(n)
    edges = []
    nxt = 1
    for length in [k] + [k + 1] * (s - 1) + [1] * (n - (k + 1) * s):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree.from_edge_list(n, edges)


def t_a_nk2(n: int, k: int, a: int) -> Tree:
    """Path ``v_0..v_{2k+1}`` with ``n - 2(k+1)`` extra pendants on ``v_a``."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not 1 <= a <= k:
        raise ValueError(f"need 1 <= a <= k, got a={a}, k={k}")
    if n < 2 * k + 2:
        raise ValueError(f"need n >= 2k+2 = {2 * k + 2}, got n={n}")
    edges = [(i, i + 1) for i in range(2 * k + 1)]
    edges += [(a, v) for v in range(2 * k + 2, n)]
    return Tree.from_edge_list(n, edges)


def corona(base: Tree, k: int) -> Tree:
    """Attach a pendant path of k vertices to every vertex of ``base``.

    Base vertex i keeps id i; its path occupies ids ``m + i*k .. m + i*k + k-1``
    with ``m + i*k`` adjacent to i.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    m = base.n
    edges = list(base.edges())
    for i in range(m):
        first = m + i * k
        edges.append((i, first))
        edges.extend((first + j, first + j + 1) for j in range(k - 1))
    return Tree.from_edge_list(m * (k + 1), edges)


def corona_decompose(tree: Tree, k: int) -> Tree | None:
    """Return a base R with ``corona(R, k)`` isomorphic to ``tree``, or None.

    Every leaf must end a pendant path of exactly k vertices; the attachment
    points must be distinct, cover all non-path vertices and induce a tree.
    The answer is confirmed by rebuilding the corona.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    n = tree.n
    if n % (k + 1):
        return None
    m = n // (k + 1)
    if m == 1:
        # only a path on k+1 vertices; its base is a single vertex
        single = Tree(1, [[]])
        return single if is_isomorphic(corona(single, k), tree) else None
    leaves = [v for v in range(n) if tree.degree(v) == 1]
    if len(leaves) != m:
        return None
    on_paths: set[int] = set()
    anchors: set[int] = set()
    for leaf in leaves:
        prev, cur = -1, leaf
        for step in range(k):
            if step > 0 and tree.degree(cur) != 2:
                return None
            on_paths.add(cur)
            prev, cur = cur, next(w for w in tree.neighbors(cur) if w != prev)
        anchors.add(cur)
    if len(on_paths) != m * k or len(anchors) != m or anchors & on_paths:
        return None
    keep = sorted(anchors)
    new_id = {v: i for i, v in enumerate(keep)}
    base_edges = [(new_id[u], new_id[v]) for u, v in tree.edges() if u in new_id and v in new_id]
    if len(base_edges) != m - 1:
        return None
    base = Tree.from_edge_list(m, base_edges)
    return base if is_isomorphic(corona(base, k), tree) else None


def closed_form_pi1(n: int, k: int, s: int) -> int:
    _check_nks(n, k, s)
    return 4 ** (k * s - 1) * (n - k * s) ** 2


def closed_form_pi2(n: int, k: int, s: int) -> int:
    _check_nks(n, k, s)
    c = n - k * s
    return 4 ** (k * s - 1) * c**c
