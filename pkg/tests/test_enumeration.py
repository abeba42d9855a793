from itertools import product

import pytest

from multizagreb.domination import CapExceededError, gamma_k
from multizagreb.enumeration import (
    FREE_TREE_COUNTS,
    _code_from_parents,
    free_trees,
    free_trees_filtered,
    free_trees_via_rooted,
    labeled_trees_prufer,
    prufer_class_count,
    prufer_decode,
    prufer_parents,
)
from multizagreb.tree import canonical_code, canonical_code_adj


def test_small_counts():
    assert len(list(free_trees(4))) == 2
    assert len(list(free_trees(7))) == 11
    assert len(list(free_trees(10))) == 106


@pytest.mark.parametrize("n", range(1, 15))
def test_counts_and_uniqueness(n):
    trees = list(free_trees(n))
    codes = [canonical_code(t) for t in trees]
    assert len(trees) == FREE_TREE_COUNTS[n]
    assert len(set(codes)) == len(codes)
    assert all(a != b for a, b in zip(codes, codes[1:]))


@pytest.mark.parametrize("n", range(1, 11))
def test_second_generation_order_agrees(n):
    first = {canonical_code(t) for t in free_trees(n)}
    second = [canonical_code(t) for t in free_trees_via_rooted(n)]
    assert len(second) == len(set(second)) == len(first)
    assert set(second) == first


def test_stream_is_deterministic():
    assert [t.to_line() for t in free_trees(11)] == [t.to_line() for t in free_trees(11)]


def test_caps():
    with pytest.raises(CapExceededError, match="18"):
        next(free_trees(19))
    with pytest.raises(CapExceededError, match="9"):
        next(labeled_trees_prufer(10))
    with pytest.raises(ValueError):
        next(free_trees(0))


@pytest.mark.parametrize("n, labeled, classes", [(3, 3, 1), (4, 16, 2), (6, 1296, 6)])
def test_prufer_examples(n, labeled, classes):
    trees = list(labeled_trees_prufer(n))
    assert len(trees) == labeled
    assert len({t.to_line() for t in trees}) == labeled
    assert len({canonical_code(t) for t in trees}) == classes
    assert prufer_class_count(n) == (labeled, classes)


@pytest.mark.parametrize("n", range(2, 8))
def test_prufer_oracle_matches_enumeration(n):
    assert prufer_class_count(n) == (n ** (n - 2), len(list(free_trees(n))))


def test_fast_prufer_codes_match_generic_path():
    for n in range(2, 8):
        for seq in product(range(n), repeat=n - 2):
            parent, order = prufer_parents(seq, n)
            adj = [[] for _ in range(n)]
            for a, b in prufer_decode(seq, n):
                adj[a].append(b)
                adj[b].append(a)
            assert _code_from_parents(n, parent, order) == canonical_code_adj(adj).bits


def test_filtered_stream():
    kept = list(free_trees_filtered(10, 2, 2))
    assert kept and all(gamma_k(t, 2).gamma == 2 for t in kept)
    assert len(kept) == sum(gamma_k(t, 2).gamma == 2 for t in free_trees(10))
