"""Edge contraction with a compensating pendant, and bulk pendant moves."""

from __future__ import annotations

from .tree import Tree


def contract_pend(tree: Tree, u: int, v: int) -> Tree:
    """Merge the ends of a non-pendant edge uv and hang a new pendant on the result.

    The merged vertex keeps id ``u``; id ``v`` is reused for the new pendant.
    """
    if v not in tree.neighbors(u):
        raise ValueError(f"({u},{v}) is not an edge")
    if tree.degree(u) < 2 or tree.degree(v) < 2:
        raise ValueError(f"({u},{v}) is a pendant edge")
    edges = []
    for a, b in tree.edges():
        if {a, b} == {u, v}:
            continue
        edges.append((u if a == v else a, u if b == v else b))
    edges.append((u, v))
    return Tree.from_edge_list(tree.n, edges)


def pendant_neighbors(tree: Tree, u: int, exclude: int = -1) -> list[int]:
    return [w for w in tree.neighbors(u) if w != exclude and tree.degree(w) == 1]


def move_pendants(tree: Tree, u: int, v: int) -> tuple[Tree, Tree]:
    """Return (G', G''): all of v's pendant neighbors moved to u, and vice versa."""
    if u == v:
        raise ValueError("u and v must differ")
    for x in (u, v):
        if not 0 <= x < tree.n:
            raise ValueError(f"vertex {x} out of range 0..{tree.n - 1}")
    pu = set(pendant_neighbors(tree, u, exclude=v))
    pv = set(pendant_neighbors(tree, v, exclude=u))
    if not pu or not pv:
        raise ValueError(f"both {u} and {v} need at least one pendant neighbor")
    return _reattach(tree, v, pv, u), _reattach(tree, u, pu, v)


def _reattach(tree: Tree, src: int, moved: set[int], dst: int) -> Tree:
    edges = []
    for a, b in tree.edges():
        if a == src and b in moved:
            edges.append((dst, b))
        elif b == src and a in moved:
            edges.append((a, dst))
        else:
            edges.append((a, b))
    return Tree.from_edge_list(tree.n, edges)


def non_pendant_edges(tree: Tree) -> list[tuple[int, int]]:
    return [(a, b) for a, b in tree.edges() if tree.degree(a) >= 2 and tree.degree(b) >= 2]


def pendant_move_pairs(tree: Tree) -> list[tuple[int, int]]:
    """Ordered pairs (u, v), u != v, where both carry a movable pendant neighbor."""
    has = [v for v in range(tree.n) if pendant_neighbors(tree, v)]
    return [
        (u, v)
        for u in has
        for v in has
        if u != v and pendant_neighbors(tree, u, v) and pendant_neighbors(tree, v, u)
    ]
