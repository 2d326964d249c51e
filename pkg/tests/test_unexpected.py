import math

import pytest

from geproci.configs import named, skeleton, unity_grid
from geproci.unexpected import (
    adim,
    c_predicate,
    skeleton_dims,
    skeleton_f,
    vdim,
    verify_skeleton_T,
)


# ---------------------------------------------------------------------------
# coordinate line skeletons

@pytest.mark.parametrize("n,expected", [(4, 0), (5, 5), (6, 14)])
def test_line_skeleton_cubic_cone_dimension(n, expected):
    sk = skeleton(n, n - 1)
    assert adim(sk, 3, 3, trials=1) == expected
    assert expected == math.comb(n + 1, 3) - math.comb(n + 2, 2) + n + 1


# ---------------------------------------------------------------------------
# codimension-2 coordinate skeletons

@pytest.mark.parametrize("n,m", [(3, 6), (3, 8), (4, 10)])
def test_codim2_skeleton_matches_closed_forms(n, m):
    sk = skeleton(n, 2)
    a = adim(sk, m, m, trials=1)
    v = vdim(sk, m, m, trials=1)
    idim, cone = skeleton_dims(n, m)
    assert a == cone
    assert a - v == skeleton_f(m, n)
    # positive f means the cone system is unexpectedly large
    assert (a > max(0, v)) == (skeleton_f(m, n) > 0 and cone > 0)


def test_skeleton_f_small_n_closed_forms():
    for m in range(3, 21):
        assert skeleton_f(m, 2) == 0
    for m in range(6, 21):
        assert skeleton_f(m, 3) == 7
    for m in range(10, 21):
        assert skeleton_f(m, 4) == 25 * m - 80


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_skeleton_permutation_hypersurface(n):
    report = verify_skeleton_T(n)
    assert report["ok"]
    assert report["degree"] == n // 2 + 1
    assert report["order_at_Q"] >= report["order_required"]


# ---------------------------------------------------------------------------
# cone predicates on concrete configurations

def test_half_grid_12_has_cubic_and_quartic_cones():
    cfg = named("d4")
    r3 = c_predicate(cfg, 3, trials=1)
    r4 = c_predicate(cfg, 4, trials=1)
    assert r3.unexpected and (r3.adim, r3.vdim) == (1, -2)
    assert r4.unexpected and (r4.adim, r4.vdim) == (4, 3)


def test_grid_2x4_has_no_unexpected_quartic_cone():
    g = unity_grid(2, 4)
    r = c_predicate(g, 4, trials=1)
    assert not r.unexpected
    assert r.adim == r.vdim == 7


def test_root_system_24_points_cones():
    cfg = named("f4")
    r4 = c_predicate(cfg, 4, trials=1)
    r6 = c_predicate(cfg, 6, trials=1)
    assert r4.unexpected and r4.adim == 1
    assert r6.unexpected and (r6.adim, r6.vdim) == (7, 4)


def test_rays13_near_diagonal_dimensions():
    cfg = named("rays13")
    assert [adim(cfg, d, d - 1, trials=1) for d in (5, 6, 7)] == [0, 1, 2]


def test_rays21_near_diagonal_start():
    cfg = named("rays21")
    assert [adim(cfg, d, d - 1, trials=1) for d in (7, 8)] == [0, 1]
