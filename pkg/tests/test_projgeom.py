import itertools
import random

import pytest

from geproci.field import make_field, order_constraint
from geproci.projgeom import (
    CollisionDetected,
    Flat,
    NotCollinear,
    NotDistinct,
    ProjPoint,
    VertexInZ,
    are_collinear,
    cross_ratio,
    flat_through,
    harmonic_conjugate,
    line_through,
    normalize,
    project_from,
    segre,
    span_dim,
)

from oracles import collinear

P = 1073741827


def pt(*coords):
    return ProjPoint.make(list(coords), P)


def test_normalize_first_nonzero_is_one():
    assert normalize([0, 3, 6], P)[1] == 1
    assert normalize([2, 4], P)[0] == 1


def test_projpoint_scaling_equal():
    assert pt(2, 4, 6) == pt(1, 2, 3)
    assert pt(0, 5, 10) == pt(0, 1, 2)


def test_are_collinear_matches_oracle():
    rng = random.Random(3)
    for _ in range(50):
        pts = [[rng.randrange(3) for _ in range(4)] for _ in range(3)]
        if any(not any(r) for r in pts):
            continue
        got = are_collinear([ProjPoint.make(r, P) for r in pts])
        assert got == collinear(*pts, P)


def test_flat_through_canonical():
    f1 = flat_through([pt(1, 0, 0, 0), pt(0, 1, 0, 0)])
    f2 = flat_through([pt(1, 1, 0, 0), pt(1, 2, 0, 0)])
    assert f1 == f2
    assert f1.dim == 1
    assert f1.contains(pt(3, 5, 0, 0))
    assert not f1.contains(pt(0, 0, 1, 0))


def test_span_dim():
    assert span_dim([pt(1, 0, 0), pt(0, 1, 0)]) == 1
    assert span_dim([pt(1, 0, 0), pt(2, 0, 0)]) == 0
    assert span_dim([pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)]) == 2


def test_segre_image_on_quadric():
    # [a:b] x [c:d] -> [ac:ad:bc:bd] satisfies xw = yz
    rng = random.Random(5)
    for _ in range(20):
        a, b, c, d = (rng.randrange(1, P) for _ in range(4))
        q = segre(ProjPoint.make([a, b], P), ProjPoint.make([c, d], P))
        x, y, z, w = q.coords
        assert x * w % P == y * z % P


def test_cross_ratio_standard_harmonic():
    A, B, C, D = pt(0, 1), pt(1, 0), pt(1, 1), pt(1, -1)
    assert cross_ratio(A, B, C, D) == P - 1


def test_cross_ratio_requires_collinear():
    with pytest.raises(NotCollinear):
        cross_ratio(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1))


def test_cross_ratio_requires_distinct():
    with pytest.raises(NotDistinct):
        cross_ratio(pt(1, 0), pt(1, 0), pt(1, 1), pt(1, 2))


def test_cross_ratio_projective_invariance():
    # apply a random invertible 2x2 change of coordinates
    rng = random.Random(9)
    A, B, C, D = pt(1, 2), pt(1, 5), pt(1, 11), pt(1, 17)
    base = cross_ratio(A, B, C, D)
    for _ in range(10):
        m = [[rng.randrange(P) for _ in range(2)] for _ in range(2)]
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % P == 0:
            continue
        def apply(q):
            x, y = q.coords
            return ProjPoint.make(
                [m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y], P)
        assert cross_ratio(apply(A), apply(B), apply(C), apply(D)) == base


def test_harmonic_conjugate_round_trip():
    A, B, C = pt(1, 3, 0), pt(1, 7, 0), pt(1, 5, 0)
    D = harmonic_conjugate(A, B, C)
    assert cross_ratio(A, B, C, D) == P - 1
    assert harmonic_conjugate(A, B, D) == C


def test_exactly_eight_harmonic_orderings():
    A, B, C, D = pt(0, 1), pt(1, 0), pt(1, 1), pt(1, -1)
    count = sum(
        1 for perm in itertools.permutations([A, B, C, D])
        if cross_ratio(*perm) == P - 1)
    assert count == 8


def test_nonharmonic_quadruple_has_fewer_orderings():
    A, B, C, D = pt(0, 1), pt(1, 0), pt(1, 1), pt(1, 3)
    count = sum(
        1 for perm in itertools.permutations([A, B, C, D])
        if cross_ratio(*perm) == P - 1)
    assert count == 0


@pytest.mark.parametrize("n", [5, 7])
def test_consecutive_roots_cross_ratio_identity(n):
    # four consecutive powers of a primitive n-th root u have cross
    # ratio (u+1)^2 / (u^2+u+1) = 1 + 1/(2r+1), r = (u + 1/u)/2
    fs = make_field([("u", order_constraint(n))])
    p, u = fs.p, fs.symbols["u"]
    expected = (u + 1) ** 2 * fs.inv(u * u + u + 1) % p
    r = (u + fs.inv(u)) * fs.inv(2) % p
    alt = (1 + fs.inv(2 * r + 1)) % p
    assert expected == alt
    for t in range(n - 3):
        pts = [ProjPoint.make([1, pow(u, t + k, p)], p) for k in range(4)]
        assert cross_ratio(*pts) == expected


def test_project_from_image_dimension_drops():
    rng = random.Random(17)
    Z = [pt(*[rng.randrange(P) for _ in range(4)]) for _ in range(6)]
    vertex = pt(*[rng.randrange(P) for _ in range(4)])
    images = project_from(vertex, Z, seed=1)
    assert all(q.ambient_dim == 2 for q in images)
    assert len(images) == len(Z)


def test_project_from_vertex_in_z():
    Z = [pt(1, 0, 0, 0), pt(0, 1, 0, 0)]
    with pytest.raises(VertexInZ):
        project_from(pt(1, 0, 0, 0), Z, seed=0)


def test_project_from_collision():
    # vertex on the line of two points: their images collide
    Z = [pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0)]
    with pytest.raises(CollisionDetected):
        project_from(pt(1, 1, 0, 0), Z, seed=0)


def test_line_through_contains_both():
    a, b = pt(1, 2, 3, 4), pt(4, 3, 2, 1)
    f = line_through(a, b)
    assert f.contains(a) and f.contains(b)
    assert f.dim == 1
