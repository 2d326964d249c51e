"""Acceptance checks, one test per criterion.

Each test prints a single [PASS]/[FAIL] line (run with -s to see them
all; pytest shows the output of failing tests regardless).
"""

import functools
import itertools
import json
import math
import random
import subprocess
import sys
import time

import pytest

from geproci import certify, combinat, ks, unexpected, weddle
from geproci.certify import (
    detect_grid,
    geprocb,
    cbp_ambient,
    is_ci222_p4,
    is_geproci,
    remembers,
)
from geproci.combinat import line_census, plane_census, weak_comb_equivalent
from geproci.configs import (
    extend_standard,
    grid,
    klein_memory,
    named,
    save,
    std_construction,
    unity_grid,
    z56,
)
from geproci.field import make_field, order_constraint
from geproci.ideals import (
    ideal_dim,
    interp_matrix,
    macaulay_matrix,
    monomials,
    multiplicity_weight,
    simple_scheme,
)
from geproci import linalg
from geproci.projgeom import (
    ProjPoint,
    cross_ratio,
    harmonic_conjugate,
    segre,
    span_dim,
)
from geproci.unexpected import adim, c_predicate, skeleton_f, vdim
from geproci.configs import skeleton

FS = make_field([])
P = FS.p


def criterion(num, desc):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"[FAIL] criterion {num}: {desc}")
                raise
            print(f"[PASS] criterion {num}: {desc}")
        return wrapper
    return deco


def rand_pt(rng, nvars, p=P):
    return ProjPoint.make([rng.randrange(p) for _ in range(nvars)], p)


# ---------------------------------------------------------------------------

@criterion(1, "geproci certificates for the whole corpus")
def test_criterion_01_geproci_certificates():
    def yes(points, a, b):
        dec = is_geproci(points, a, b, trials=3, seed=1)
        assert dec.prime >= 2 ** 30
        assert dec.verdict == "Yes", (a, b, dec.verdict)

    yes(named("d4").points, 3, 4)
    yes(named("f4").points, 4, 6)
    for n in range(3, 7):
        yes(std_construction(n, "Y1").points, n, n + 1)
        yes(std_construction(n, "Y2").points, n, n + 1)
    for n in (4, 6):
        yes(std_construction(n, "Y1Y2").points, n, n + 2)
    # removing rows of the 6x6 roots-of-unity block keeps the property
    cfg = std_construction(6, "Y1")
    for n_removed, a in [(2, 5), (3, 4)]:
        keep = [cfg.points[i * 6 + j]
                for i in range(6 - n_removed) for j in range(6)]
        keep += cfg.points[36:]
        yes(keep, a, 6)
    yes(extend_standard(std_construction(3, "Y1")).points, 4, 4)
    yes(extend_standard(std_construction(4, "Y1Y2")).points, 6, 6)
    yes(named("klein").points, 6, 10)
    yes(named("penrose").points, 5, 8)
    yes(named("half_penrose").points, 4, 5)
    yes(named("h4").points, 6, 10)
    start = time.monotonic()
    yes(named("points120").points, 10, 12)
    assert time.monotonic() - start < 60


@criterion(2, "grid / half-grid taxonomy")
def test_criterion_02_taxonomy():
    assert detect_grid(unity_grid(3, 4).points, seed=1)[0] == "Grid"
    for label in ("d4", "f4", "klein"):
        assert detect_grid(named(label).points, seed=1)[0] == "HalfGrid", label
    for label in ("penrose", "h4", "points120"):
        assert detect_grid(named(label).points, seed=1)[0] == "Neither", label


@criterion(3, "exact line and plane censuses")
def test_criterion_03_censuses():
    assert line_census(named("d4")).histogram == {2: 18, 3: 16}
    assert plane_census(named("d4")).histogram[6] == 12
    assert line_census(named("f4")).histogram == {2: 60, 3: 32, 4: 18}
    pen = line_census(named("penrose")).histogram
    assert pen == {2: 240, 4: 90}
    assert sum(pen.values()) == 330
    hp = line_census(named("half_penrose")).histogram
    assert hp[4] == 10 and 5 not in hp
    plane_tables = {
        1: {3: 366, 4: 168, 5: 30, 10: 30},
        2: {3: 408, 4: 192, 5: 18, 10: 30},
        3: {3: 324, 4: 144, 5: 42, 10: 30},
    }
    for which, table in plane_tables.items():
        cfg = z56(which)
        assert line_census(cfg).histogram == {2: 216, 3: 36, 4: 6, 6: 5}
        assert plane_census(cfg).histogram == table


@criterion(4, "combinatorial distinguishers")
def test_criterion_04_weak_equivalence():
    z1, z2, z3 = z56(1), z56(2), z56(3)
    for a, b in [(z1, z3), (z1, z2), (z2, z3)]:
        verdict, invariant = weak_comb_equivalent(a, b)
        assert verdict == "Distinguished"
        assert invariant in ("k33_probe", "disjoint_k13_probe")
    g1 = unity_grid(3, 3)
    g2 = grid(3, 3, [(1, 2), (1, 5), (2, 3)], [(1, 7), (3, 4), (1, 0)],
              g1.field)
    assert weak_comb_equivalent(g1, g2)[0] == "Equivalent"


@criterion(5, "determinantal locus degrees and membership")
def test_criterion_05_weddle():
    rng = random.Random(51)
    assert weddle.weddle_degree([rand_pt(rng, 4) for _ in range(6)], 2) == 4
    assert weddle.weddle_degree([rand_pt(rng, 5) for _ in range(10)], 2) == 5
    for d, expected in [(2, 4), (3, 10)]:
        pts = [rand_pt(rng, 4) for _ in range(math.comb(d + 2, 2))]
        assert weddle.weddle_degree(pts, d) == math.comb(d + 2, 3)
        assert math.comb(d + 2, 3) == expected
    assert weddle.weddle_degree(unity_grid(2, 3).points, 2) == \
        weddle.IDENTICALLY_ZERO
    # reducible fixture: split form at 200 samples plus harmonic points
    a, b, c = 3, 5, 7
    assert weddle.verify_reducible_weddle(a, b, c, P, samples=200)
    pts = weddle.reducible_weddle_points(a, b, c, P)
    O = ProjPoint.make([0, 0, 0, 1], P)
    for i, coords in enumerate([[2 * a, 0, 0, 1], [0, 2 * b, 0, 1],
                                [0, 0, 2 * c, 1]]):
        H = ProjPoint.make(coords, P)
        assert weddle.weddle_member(pts, 2, H)
        assert harmonic_conjugate(pts[i], pts[3 + i], O) == H

    def on_line(q1, q2):
        t = rng.randrange(2, P)
        return ProjPoint.make(
            [(x + t * y) % P for x, y in zip(q1.coords, q2.coords)], P)

    five = [rand_pt(rng, 4) for _ in range(5)]
    for q1, q2 in itertools.combinations(five, 2):
        assert weddle.weddle_member(five, 2, on_line(q1, q2))
    for _ in range(10):
        assert not weddle.weddle_member(five, 2, rand_pt(rng, 4))
    seven = [rand_pt(rng, 4) for _ in range(7)]
    for q1, q2 in itertools.combinations(seven, 2):
        assert not weddle.weddle_member(seven, 2, on_line(q1, q2))


@criterion(6, "unexpected cone dimensions")
def test_criterion_06_unexpected():
    for n in (4, 5, 6):
        got = adim(skeleton(n, n - 1), 3, 3, trials=1, seed=1)
        assert got == math.comb(n + 1, 3) - math.comb(n + 2, 2) + n + 1
    for n, m in [(3, 6), (3, 8), (4, 10)]:
        sk = skeleton(n, 2)
        a = adim(sk, m, m, trials=1, seed=1)
        v = vdim(sk, m, m, trials=1, seed=1)
        f = skeleton_f(m, n)
        assert a - v == f
        assert (f > 0) == (a > max(0, v) and a > 0)
    assert all(skeleton_f(m, 2) == 0 for m in range(3, 21))
    assert all(skeleton_f(m, 3) == 7 for m in range(6, 21))
    assert all(skeleton_f(m, 4) == 25 * m - 80 for m in range(10, 21))
    assert c_predicate(named("d4"), 3, trials=1, seed=1).unexpected
    assert c_predicate(named("d4"), 4, trials=1, seed=1).unexpected
    assert not c_predicate(unity_grid(2, 4), 4, trials=1, seed=1).unexpected
    f4 = named("f4")
    assert c_predicate(f4, 4, trials=1, seed=1).unexpected
    assert c_predicate(f4, 6, trials=1, seed=1).unexpected
    assert ideal_dim(f4.points, 4, f4.field.p) == 12
    pen = named("penrose")
    assert c_predicate(pen, 5, trials=1, seed=1).unexpected
    assert c_predicate(pen, 8, trials=1, seed=1).unexpected
    assert ideal_dim(pen.points, 5, pen.field.p) == 20
    r13 = named("rays13")
    assert [adim(r13, d, d - 1, trials=1, seed=1)
            for d in (5, 6, 7)] == [0, 1, 2]
    r21 = named("rays21")
    assert [adim(r21, d, d - 1, trials=1, seed=1)
            for d in range(7, 14)] == list(range(7))
    e_values = {
        "e7": {(4, 4): 64},
        "e8": {(4, 4): 99, (5, 5): 343},
    }
    for label, table in e_values.items():
        cfg = named(label)
        for (t, m), expected in table.items():
            got = adim(cfg, t, m, trials=1, seed=1)
            assert got == expected, f"{label} adim{(t, m)} = {got}"
    r300 = named("rays300")
    assert [adim(r300, m, m, trials=1, seed=1)
            for m in (22, 23, 24, 25)] == [2, 6, 28, 52]


@criterion(7, "interpolation matrix vs dual presentation")
def test_criterion_07_oracle_equivalence():
    rng = random.Random(71)
    for _ in range(50):
        d = rng.randrange(2, 5)
        r = rng.randrange(1, 13)
        pts = [rand_pt(rng, 4) for _ in range(r)]
        Q = [rng.randrange(P) for _ in range(4)]
        scheme = simple_scheme(pts) + [(ProjPoint(tuple(Q), P), d)]
        lam = interp_matrix(scheme, d, P)
        T = macaulay_matrix(pts, d, Q, P)
        assert linalg.rank(lam, P) == linalg.rank(T, P)
    # corresponding minors differ by prod(e_M) / (d!)^j
    pts = [ProjPoint.make(v, P) for v in
           [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1],
            [1, 1, 1, 1], [2, 3, 5, 7]]]
    Q = [rng.randrange(1, P) for _ in range(4)]
    scheme = simple_scheme(pts) + [(ProjPoint(tuple(Q), P), 3)]
    N = interp_matrix(scheme, 3, P).T.copy()
    T = macaulay_matrix(pts, 3, Q, P)
    keep = [i for i in range(20) if i + 1 not in (2, 12, 18, 19)]
    exps = monomials(4, 3)
    factor = 1
    for i in keep:
        factor = factor * multiplicity_weight(exps[i]) % P
    factor = factor * pow(pow(math.factorial(3), 6, P), P - 2, P) % P
    A = linalg.det(T[keep, :], P)
    B = linalg.det(N[keep, :], P)
    assert A != 0 and B == factor * A % P


@criterion(8, "one-point-deletion Hilbert behavior")
def test_criterion_08_cbp():
    for label in ("d4", "f4", "klein", "penrose", "half_penrose", "h4",
                  "points120"):
        assert geprocb(named(label).points, seed=1).verdict == "Yes", label
    for n in range(3, 7):
        pts = std_construction(n, "Y1").points
        assert geprocb(pts, seed=1).verdict == "Yes", n
    rng = random.Random(81)
    eleven = [segre(rand_pt(rng, 2), rand_pt(rng, 2)) for _ in range(10)]
    eleven.append(rand_pt(rng, 4))
    assert geprocb(eleven, seed=1).verdict == "Yes"
    assert cbp_ambient(eleven, seed=1).verdict == "No"


@criterion(9, "no (2,2,2) complete intersection in 4-space")
def test_criterion_09_no_ci222():
    rng = random.Random(91)

    def lgp8():
        while True:
            pts = [rand_pt(rng, 5) for _ in range(8)]
            if all(span_dim(list(s)) == 4
                   for s in itertools.combinations(pts, 5)):
                return pts

    for k in range(20):
        pts = ([rand_pt(rng, 5) for _ in range(8)] if k % 2 == 0
               else lgp8())
        assert is_ci222_p4(pts, trials=2, seed=k).verdict == "No", k


@criterion(10, "degree-m memory of subsets")
def test_criterion_10_memory():
    f4 = named("f4")
    census = line_census(f4)
    four_line = sorted((v for v in census.members.values() if len(v) == 4),
                       key=lambda s: sorted(q.coords for q in s))[0]
    W = [q for q in f4.points if q not in four_line]
    assert len(W) == 20
    dec = remembers(W, f4.points, 4, seed=1)
    assert dec.verdict == "Yes"
    kl = named("klein")
    dec = remembers(klein_memory().points, kl.points, 6, seed=1, probes=50)
    assert dec.verdict == "Yes"
    assert dec.data["probes_failing"] == 50


@criterion(11, "Kochen-Specker ray families")
def test_criterion_11_ks():
    for label in ("rays13", "rays21", "penrose"):
        assert ks.is_ks_set(named(label)), label
    start = time.monotonic()
    assert ks.is_ks_set(named("peres33"))
    assert time.monotonic() - start < 30
    fs = make_field([])
    basis = [ProjPoint.make([1 if j == i else 0 for j in range(4)], fs.p)
             for i in range(4)]
    from geproci.configs import Configuration
    assert not ks.is_ks_set(Configuration("basis", 3, fs, basis))


@criterion(12, "harmonic conjugates and cross-ratio identities")
def test_criterion_12_harmonic():
    A, B, C = (ProjPoint.make(v, P)
               for v in ([1, 3, 0], [1, 7, 0], [1, 5, 0]))
    D = harmonic_conjugate(A, B, C)
    assert cross_ratio(A, B, C, D) == P - 1
    assert harmonic_conjugate(A, B, D) == C
    quad = [ProjPoint.make(v, P)
            for v in ([0, 1], [1, 0], [1, 1], [1, -1])]
    count = sum(1 for perm in itertools.permutations(quad)
                if cross_ratio(*perm) == P - 1)
    assert count == 8
    for n in (5, 7):
        fs = make_field([("u", order_constraint(n))])
        p, u = fs.p, fs.symbols["u"]
        expected = (u + 1) ** 2 * fs.inv(u * u + u + 1) % p
        r = (u + fs.inv(u)) * fs.inv(2) % p
        assert expected == (1 + fs.inv(2 * r + 1)) % p
        for t in range(n - 3):
            pts = [ProjPoint.make([1, pow(u, t + k, p)], p)
                   for k in range(4)]
            assert cross_ratio(*pts) == expected


@criterion(13, "byte-identical reports under a fixed seed")
def test_criterion_13_determinism(tmp_path):
    path = tmp_path / "d4.json"
    save(named("d4"), str(path))
    argv = [sys.executable, "-m", "geproci.cli", "--json", "check",
            "geproci", "-a", "3", "-b", "4", "--seed", "7", str(path)]
    runs = [subprocess.run(argv, capture_output=True, check=True).stdout
            for _ in range(2)]
    assert runs[0] == runs[1]
    doc = json.loads(runs[0])
    assert doc["verdict"] == "Yes" and doc["seed"] == 7
