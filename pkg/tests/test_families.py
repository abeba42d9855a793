import pytest

from multizagreb.domination import gamma_k, gamma_k_bruteforce
from multizagreb.enumeration import free_trees
from multizagreb.families import (
    closed_form_pi1,
    closed_form_pi2,
    corona,
    corona_decompose,
    path,
    star,
    t_a_nk2,
    t_nks,
)
from multizagreb.indices import pi1, pi2
from multizagreb.tree import diameter, from_edge_list, is_isomorphic


def test_path_and_star():
    assert path(2) == star(2)
    assert pi1(star(6)) == 25
    assert diameter(path(7)) == 6
    with pytest.raises(ValueError):
        star(1)
    with pytest.raises(ValueError):
        path(0)


def test_t_nks_construction_audit():
    t = t_nks(9, 2, 2)
    assert sorted(t.degrees(), reverse=True) == [5, 2, 2, 2, 1, 1, 1, 1, 1]
    assert pi1(t) == 1600
    assert gamma_k_bruteforce(t_nks(9, 2, 3), 2) == 3


def test_t_nks_falls_back_to_path():
    # center degree n - ks below 3
    assert t_nks(6, 2, 2) == path(6)
    assert t_nks(3, 2, 1) == path(3)


@pytest.mark.parametrize("args", [(5, 2, 2), (4, 0, 1), (4, 1, 0)])
def test_t_nks_domain(args):
    with pytest.raises(ValueError):
        t_nks(*args)


def test_t_a_nk2_examples():
    t = t_a_nk2(10, 2, 1)
    assert pi1(t) == 4**3 * 6**2 == 2304
    assert gamma_k_bruteforce(t, 2) == 2
    for a in (1, 2, 3):
        assert t_a_nk2(8, 3, a) == path(8)
    with pytest.raises(ValueError):
        t_a_nk2(10, 2, 3)
    with pytest.raises(ValueError):
        t_a_nk2(5, 2, 1)


def test_corona_examples():
    single = from_edge_list(1, [])
    for k in range(1, 5):
        assert is_isomorphic(corona(single, k), path(k + 1))
    assert is_isomorphic(corona(path(2), 2), path(6))
    assert gamma_k_bruteforce(corona(path(3), 1), 1) == 3


def test_corona_decompose_examples():
    assert is_isomorphic(corona_decompose(path(6), 2), path(2))
    assert corona_decompose(path(5), 2) is None
    assert corona_decompose(star(4), 1) is None
    assert corona_decompose(path(4), 1) is not None


def test_closed_forms():
    assert (closed_form_pi1(9, 2, 2), closed_form_pi2(9, 2, 2)) == (1600, 200000)
    assert (closed_form_pi1(9, 2, 3), closed_form_pi2(9, 2, 3)) == (9216, 27648)
    t = t_nks(9, 2, 3)
    assert (pi1(t), pi2(t)) == (9216, 27648)
    for k in range(1, 4):
        for s in range(1, 5):
            assert closed_form_pi1((k + 1) * s, k, s) == 4 ** (k * s - 1) * s * s


def test_t_nks_matches_closed_forms_and_gamma():
    for k in range(1, 6):
        for s in range(1, 31):
            for n in range((k + 1) * s, 31):
                t = t_nks(n, k, s)
                assert t.n == n
                assert pi1(t) == closed_form_pi1(n, k, s)
                assert pi2(t) == closed_form_pi2(n, k, s)
                assert gamma_k(t, k).gamma == s


def test_corona_gamma_and_round_trip():
    for m in range(1, 6):
        for base in free_trees(m):
            for k in range(1, 4):
                c = corona(base, k)
                assert c.n == (k + 1) * m
                assert gamma_k(c, k).gamma == m
                back = corona_decompose(c, k)
                assert back is not None and is_isomorphic(back, base)


def test_t_a_nk2_invariants():
    for k in range(1, 5):
        for n in range(2 * k + 2, 2 * k + 9):
            for a in range(1, k + 1):
                t = t_a_nk2(n, k, a)
                assert gamma_k(t, k).gamma == 2
                assert diameter(t) == 2 * k + 1
            assert is_isomorphic(t_a_nk2(n, k, k), t_nks(n, k, 2))
