"""Immutable trees on dense integer vertex ids, metrics, and canonical forms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TextIO


class InvalidTreeError(ValueError):
    """Raised when an edge list does not describe a tree."""


class TreeFormatError(ValueError):
    """Raised for malformed lines in the tree text format."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Tree:
    """A connected acyclic graph on vertices ``0..n-1``.

    Instances are immutable; adjacency lists are stored sorted.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self._n = n
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> Tree:
        if n < 1:
            raise InvalidTreeError(f"vertex count must be positive, got {n}")
        edges = [(int(a), int(b)) for a, b in edges]
        if len(edges) != n - 1:
            raise InvalidTreeError(f"expected {n - 1} edges for n={n}, got {len(edges)}")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidTreeError(f"edge ({a},{b}) has an endpoint outside 0..{n - 1}")
            if a == b:
                raise InvalidTreeError(f"self-loop at vertex {a}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise InvalidTreeError(f"duplicate edge ({a},{b})")
            seen.add(key)
            adj[a].append(b)
            adj[b].append(a)
        reached = _bfs_order(adj, 0)
        if len(reached) != n:
            # n-1 distinct edges without full reach means a cycle somewhere
            raise InvalidTreeError(
                f"not a tree: graph is disconnected and contains a cycle "
                f"(only {len(reached)} of {n} vertices reachable from 0)"
            )
        return cls(n, adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees())

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in self._adj[u] if u < v]

    def relabel(self, perm: Sequence[int]) -> Tree:
        """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
        return Tree.from_edge_list(self._n, [(perm[u], perm[v]) for u, v in self.edges()])

    def delete_vertices(self, removed: Iterable[int]) -> Tree:
        """Delete vertices and compact the remaining ids, preserving their order.

        The remainder must still be a tree.
        """
        gone = set(removed)
        keep = [v for v in range(self._n) if v not in gone]
        new_id = {v: i for i, v in enumerate(keep)}
        edges = [(new_id[u], new_id[v]) for u, v in self.edges() if u in new_id and v in new_id]
        return Tree.from_edge_list(len(keep), edges)

    def to_line(self) -> str:
        parts = [str(self._n)]
        for u, v in self.edges():
            parts.append(str(u))
            parts.append(str(v))
        return " ".join(parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Tree(n={self._n}, edges={self.edges()})"

    def __reduce__(self):
        return (Tree, (self._n, self._adj))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    return Tree.from_edge_list(n, edges)


def _bfs_order(adj: Sequence[Sequence[int]], root: int) -> list[int]:
    seen = [False] * len(adj)
    seen[root] = True
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
    return order


def _check_vertex(tree: Tree, v: int) -> None:
    if not 0 <= v < tree.n:
        raise ValueError(f"vertex {v} out of range 0..{tree.n - 1}")


def distances_from(tree: Tree, v: int) -> list[int]:
    _check_vertex(tree, v)
    dist = [-1] * tree.n
    dist[v] = 0
    queue = deque([v])
    adj = tree.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(tree: Tree) -> list[list[int]]:
    return [distances_from(tree, v) for v in range(tree.n)]


def eccentricity(tree: Tree, v: int) -> int:
    return max(distances_from(tree, v))


def diameter(tree: Tree) -> int:
    # double sweep is exact on trees
    far = _argmax(distances_from(tree, 0))
    return max(distances_from(tree, far))


def diametral_path(tree: Tree) -> list[int]:
    """A longest path, chosen as the lexicographically smallest vertex sequence."""
    if tree.n == 1:
        return [0]
    d = diameter(tree)
    start = next(v for v in range(tree.n) if eccentricity(tree, v) == d)
    parent = _parents(tree, start)
    dist = distances_from(tree, start)
    best: list[int] | None = None
    for end in range(tree.n):
        if dist[end] != d:
            continue
        path = [end]
        while path[-1] != start:
            path.append(parent[path[-1]])
        path.reverse()
        if best is None or path < best:
            best = path
    assert best is not None
    return best


def pendant_vertices(tree: Tree) -> frozenset[int]:
    return frozenset(v for v in range(tree.n) if tree.degree(v) == 1)


def _argmax(values: Sequence[int]) -> int:
    best = 0
    for i, x in enumerate(values):
        if x > values[best]:
            best = i
    return best


def _parents(tree: Tree, root: int) -> list[int]:
    parent = [-1] * tree.n
    for u in _bfs_order(tree.adjacency, root):
        for w in tree.adjacency[u]:
            if w != parent[u]:
                parent[w] = u
    return parent


# --- canonical forms -------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Relabeling-invariant code of a free tree.

    ``bits`` is a flag bit (0 = one centroid, 1 = two centroids) followed by
    AHU parenthesis words written with 1 for "(" and 0 for ")".
    """

    bits: str

    def hex(self) -> str:
        # leading sentinel bit keeps leading zeros recoverable
        return format(int("1" + self.bits, 2), "x")

    @classmethod
    def from_hex(cls, text: str) -> CanonicalCode:
        return cls(bin(int(text, 16))[3:])


def centroids(adj: Sequence[Sequence[int]]) -> list[int]:
    n = len(adj)
    order = _bfs_order(adj, 0)
    parent = [-1] * n
    for u in order:
        for w in adj[u]:
            if w != parent[u]:
                parent[w] = u
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    best = n
    found: list[int] = []
    for u in range(n):
        heaviest = n - size[u]
        for w in adj[u]:
            if w != parent[u] and size[w] > heaviest:
                heaviest = size[w]
        if heaviest < best:
            best = heaviest
            found = [u]
        elif heaviest == best:
            found.append(u)
    return found


def rooted_code(adj: Sequence[Sequence[int]], root: int, blocked: int = -1) -> str:
    """AHU word of the subtree hanging from ``root``, never crossing into ``blocked``."""
    parent = {root: blocked}
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in adj[u]:
            if w != parent[u]:
                parent[w] = u
                order.append(w)
    child_codes: dict[int, list[str]] = {u: [] for u in order}
    code = ""
    for u in reversed(order):
        kids = child_codes[u]
        kids.sort()
        code = "1" + "".join(kids) + "0"
        if u != root:
            child_codes[parent[u]].append(code)
    return code


def canonical_code_adj(adj: Sequence[Sequence[int]]) -> CanonicalCode:
    cents = centroids(adj)
    if len(cents) == 1:
        return CanonicalCode("0" + rooted_code(adj, cents[0]))
    a, b = cents
    halves = sorted((rooted_code(adj, a, b), rooted_code(adj, b, a)))
    return CanonicalCode("1" + halves[0] + halves[1])


def canonical_code(tree: Tree) -> CanonicalCode:
    return canonical_code_adj(tree.adjacency)


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


# --- text format -----------------------------------------------------------


def parse_tree_line(line: str, lineno: int = 1) -> Tree:
    tokens = line.split()
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise TreeFormatError(lineno, f"non-integer token ({exc})") from None
    n = values[0]
    rest = values[1:]
    if n < 1:
        raise TreeFormatError(lineno, f"vertex count must be positive, got {n}")
    if len(rest) != 2 * (n - 1):
        raise TreeFormatError(
            lineno, f"expected {2 * (n - 1)} endpoint integers for n={n}, got {len(rest)}"
        )
    edges = list(zip(rest[0::2], rest[1::2]))
    try:
        return Tree.from_edge_list(n, edges)
    except InvalidTreeError as exc:
        raise TreeFormatError(lineno, str(exc)) from None


def read_trees(stream: TextIO) -> Iterator[tuple[int, Tree]]:
    """Yield ``(line_number, tree)`` pairs; blank and ``#`` lines are skipped."""
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, parse_tree_line(line, lineno)


def write_trees(trees: Iterable[Tree], stream: TextIO) -> None:
    for t in trees:
        stream.write(t.to_line() + "\n")
