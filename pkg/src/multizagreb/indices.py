"""Exact degree-based indices: M1, M2, the multiplicative Zagreb indices, f, h and g.

Everything is a Python ``int``; nothing is ever rounded.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .tree import Tree


def _require_edges(tree: Tree) -> None:
    if tree.n < 2:
        raise ValueError("index undefined for the single-vertex tree (n must be >= 2)")


def first_zagreb(tree: Tree) -> int:
    return sum(d * d for d in tree.degrees())


def second_zagreb(tree: Tree) -> int:
    deg = tree.degrees()
    return sum(deg[u] * deg[v] for u, v in tree.edges())


def pi1(tree: Tree) -> int:
    _require_edges(tree)
    return prod(d * d for d in tree.degrees())


def pi2(tree: Tree, crosscheck: bool = False) -> int:
    """Product over edges of endpoint degree products.

    With ``crosscheck`` the vertex form ``prod d^d`` is computed as well and
    must agree.
    """
    _require_edges(tree)
    deg = tree.degrees()
    value = prod(deg[u] * deg[v] for u, v in tree.edges())
    if crosscheck:
        other = pi2_vertex_form(tree)
        if other != value:
            raise ArithmeticError(f"pi2 edge form {value} != vertex form {other}")
    return value


def pi2_vertex_form(tree: Tree) -> int:
    _require_edges(tree)
    return prod(d**d for d in tree.degrees())


def f_aux(tree: Tree) -> int:
    return prod(d + 1 for d in tree.degrees())


def h_aux(tree: Tree) -> int:
    return prod((d + 1) ** (d + 1) for d in tree.degrees())


@functools.total_ordering
@dataclass(frozen=True)
class ExactRatio:
    """Unreduced non-negative fraction compared by cross-multiplication."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactRatio):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __lt__(self, other: ExactRatio) -> bool:
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __hash__(self) -> int:
        # equal ratios must hash alike even when unreduced
        return hash(Fraction(self.numerator, self.denominator))


def g_ratio(x: int) -> ExactRatio:
    """``x**x / (x-1)**(x-1)``, the per-vertex growth factor of Π2 when a pendant is added."""
    if x < 2:
        raise ValueError(f"g_ratio needs x >= 2, got {x}")
    return ExactRatio(x**x, (x - 1) ** (x - 1))


def star_pi1(n: int) -> int:
    return (n - 1) ** 2


def star_pi2(n: int) -> int:
    return (n - 1) ** (n - 1)


def path_pi(n: int) -> int:
    """Π1 and Π2 of the path coincide: ``4**(n-2)``."""
    return 4 ** (n - 2)
