"""Graded pieces of ideals of (fat) point schemes via evaluation matrices.

A degree-t form vanishing on a scheme of fat points corresponds to a
kernel vector of a matrix whose rows evaluate monomials (and their
partial derivatives, for multiplicities) at the points. Everything here
is exact arithmetic mod p.
"""

import math
import random
from functools import lru_cache

import numpy as np

from . import linalg
from .projgeom import ProjPoint


class CharTooSmall(ValueError):
    pass


class ZeroForm(ValueError):
    pass


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int):
    """Exponent vectors of the degree-d monomials in nvars variables.

    Ordered lexicographically descending in (e0, e1, ...), so the first
    monomial is x0^d and the last is x_{n}^d.
    """
    if nvars == 1:
        return ((degree,),)
    out = []
    for e0 in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e0):
            out.append((e0,) + rest)
    return tuple(out)


def num_monomials(nvars: int, degree: int) -> int:
    if degree < 0:
        return 0
    return math.comb(degree + nvars - 1, nvars - 1)


def eval_monomials(point_coords, exps, p):
    """Row vector (M_1(P), ..., M_N(P)) for the given exponent list.

    Vectorized over the monomials: per variable a table of powers is
    built once, then indexed by the exponent column.
    """
    E = np.asarray(exps, dtype=np.int64)
    if E.ndim == 1:
        E = E.reshape(1, -1)
    top = int(E.max()) if E.size else 0
    row = np.ones(E.shape[0], dtype=np.int64)
    for j, c in enumerate(point_coords):
        c = int(c) % p
        table = np.empty(top + 1, dtype=np.int64)
        table[0] = 1
        for e in range(1, top + 1):
            table[e] = table[e - 1] * c % p
        row = row * table[E[:, j]] % p
    return row


def _eval_one(coords, exp, p):
    v = 1
    for c, e in zip(coords, exp):
        if e:
            v = v * pow(int(c), e, p) % p
    return v


def _derivative_entry(m_exp, M_exp, coords, p):
    """(d/dx)^m applied to the monomial M, evaluated at the point."""
    coeff = 1
    val = 1
    for a, b, c in zip(m_exp, M_exp, coords):
        if a > b:
            return 0
        # falling factorial b*(b-1)*...*(b-a+1)
        for k in range(a):
            coeff = coeff * (b - k) % p
        if b - a:
            val = val * pow(int(c), b - a, p) % p
    return coeff * val % p


def interp_matrix(scheme, t: int, p: int):
    """Evaluation matrix whose kernel is the degree-t piece of the ideal.

    scheme: list of (ProjPoint, multiplicity). A point of multiplicity s
    contributes one row per monomial of degree s-1 in the ambient
    variables, holding the corresponding partial derivatives of the
    degree-t monomials at the point.
    """
    if not scheme:
        raise ValueError("empty scheme")
    first = scheme[0][0]
    nvars = first.ambient_dim + 1
    if p <= t:
        raise CharTooSmall(f"need p > {t}")
    cols = monomials(nvars, t)
    rows = []
    for pt, mult in scheme:
        coords = pt.coords
        if mult == 1:
            rows.append(eval_monomials(coords, cols, p))
            continue
        if p <= mult:
            raise CharTooSmall(f"need p > multiplicity {mult}")
        for m_exp in monomials(nvars, mult - 1):
            rows.append(np.array(
                [_derivative_entry(m_exp, M, coords, p) for M in cols],
                dtype=np.int64))
    return np.stack(rows)


def simple_scheme(points):
    return [(q, 1) for q in points]


def ideal_dim(points_or_scheme, t: int, p: int) -> int:
    """dim of the degree-t piece of the ideal of the given points."""
    scheme = _as_scheme(points_or_scheme)
    nvars = scheme[0][0].ambient_dim + 1
    N = num_monomials(nvars, t)
    if t < 0:
        return 0
    M = interp_matrix(scheme, t, p)
    return N - linalg.rank(M, p)


def ideal_kernel(points, t: int, p: int):
    """Basis of degree-t forms vanishing on the points (coefficient vectors)."""
    M = interp_matrix(simple_scheme(points), t, p)
    return linalg.kernel_basis(M, p)


def _as_scheme(points_or_scheme):
    seq = list(points_or_scheme)
    if seq and isinstance(seq[0], ProjPoint):
        return simple_scheme(seq)
    return seq


def hilbert_function(points, t: int, p: int) -> int:
    """Hilbert function of the coordinate ring of the point set at t."""
    nvars = points[0].ambient_dim + 1
    if t < 0:
        return 0
    M = interp_matrix(simple_scheme(points), t, p)
    return linalg.rank(M, p)


def hilbert_h_vector(points, p):
    """First differences of the Hilbert function, up to saturation."""
    n_pts = len(points)
    h = []
    prev = 0
    t = 0
    while prev < n_pts:
        cur = hilbert_function(points, t, p)
        h.append(cur - prev)
        prev = cur
        t += 1
        if t > n_pts + 1:
            break
    return tuple(h)


def macaulay_matrix(points, d: int, Q_coords, p):
    """The dual presentation matrix for points plus a fat vertex.

    Columns: one per point (entry c_M * M(P_i), with c_M the multinomial
    coefficient of M), then one per degree-(d-1) monomial m (entry the
    Q-coordinate of M/m when m divides M, else 0). Rows run over the
    degree-d monomials M. Its rank equals the rank of
    interp_matrix(points + d*Q, d).
    """
    if p <= d:
        raise CharTooSmall(f"need p > {d}")
    nvars = len(Q_coords)
    Ms = monomials(nvars, d)
    ms = monomials(nvars, d - 1)
    m_index = {m: j for j, m in enumerate(ms)}
    r = len(points)
    A = np.zeros((len(Ms), r + len(ms)), dtype=np.int64)
    fact_d = math.factorial(d)
    for i, M in enumerate(Ms):
        e_M = 1
        for e in M:
            e_M *= math.factorial(e)
        c_M = (fact_d // e_M) % p
        for j, pt in enumerate(points):
            A[i, j] = c_M * _eval_one(pt.coords, M, p) % p
        for k in range(nvars):
            if M[k] == 0:
                continue
            m = tuple(e - (1 if idx == k else 0) for idx, e in enumerate(M))
            A[i, r + m_index[m]] = int(Q_coords[k]) % p
    return A


def multiplicity_weight(M_exp) -> int:
    """Product of factorials of the exponents of a monomial."""
    w = 1
    for e in M_exp:
        w *= math.factorial(e)
    return w


def eval_form(coeffs, exps, coords, p) -> int:
    v = 0
    for c, e in zip(coeffs, exps):
        if c % p:
            v = (v + int(c) * _eval_one(coords, e, p)) % p
    return v


def _univariate_slice(coeffs, exps, base, direction, degree, p):
    """Coefficients of F(base + s*direction) as a polynomial in s.

    Recovered by evaluating at degree+1 sample values and solving the
    Vandermonde system.
    """
    xs = list(range(1, degree + 2))
    ys = [eval_form(coeffs, exps,
                    [(b + x * d) % p for b, d in zip(base, direction)], p)
          for x in xs]
    V = np.array([[pow(x, k, p) for k in range(degree + 1)] for x in xs],
                 dtype=np.int64)
    sol = linalg.mat_mul(linalg.inv_matrix(V, p),
                         np.array(ys, dtype=np.int64).reshape(-1, 1), p)
    return [int(v) for v in sol.ravel()]


def coprime_plane_curves(F, G, a: int, b: int, p, seed: int = 0) -> bool:
    """Whether two ternary forms (coefficient vectors) share no factor.

    Decided by a resultant probe: after a random coordinate change making
    both forms monic in the last variable, the resultant with respect to
    that variable is sampled at random points of the other two. Any
    nonzero value certifies coprimality; identically-zero resultants
    across 3 independent coordinate changes mean a common factor.
    """
    F = np.asarray(F, dtype=np.int64) % p
    G = np.asarray(G, dtype=np.int64) % p
    if not F.any() or not G.any():
        raise ZeroForm("coprimality of a zero form")
    expF = monomials(3, a)
    expG = monomials(3, b)
    rng = random.Random(repr((seed, "coprime")))
    for _ in range(3):
        # random invertible coordinate change with both forms nonzero at
        # the image of (0,0,1)
        for _ in range(50):
            M = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
            if linalg.rank(linalg.as_matrix(M, p), p) != 3:
                continue
            top = [M[i][2] for i in range(3)]
            if eval_form(F, expF, top, p) and eval_form(G, expG, top, p):
                break
        else:
            continue
        for _ in range(a * b + 5):
            x0, y0 = rng.randrange(p), rng.randrange(p)
            base = [(M[i][0] * x0 + M[i][1] * y0) % p for i in range(3)]
            direction = top
            f = _univariate_slice(F, expF, base, direction, a, p)
            g = _univariate_slice(G, expG, base, direction, b, p)
            if _resultant(f, g, p):
                return True
    return False


def _resultant(f, g, p) -> int:
    """Resultant of two univariate polynomials given by coefficient lists
    (ascending). Degrees are taken from the list lengths; leading
    coefficients are assumed nonzero (arranged by the caller)."""
    a = len(f) - 1
    b = len(g) - 1
    S = np.zeros((a + b, a + b), dtype=np.int64)
    for i in range(b):
        for j, c in enumerate(reversed(f)):
            S[i, i + j] = c % p
    for i in range(a):
        for j, c in enumerate(reversed(g)):
            S[b + i, i + j] = c % p
    return linalg.det(S, p)


def generated_to_next_degree(points, d: int, p) -> bool:
    """Whether degree-(d+1) forms in the ideal all come from degree d.

    Compares the span of x_i * F over a kernel basis F of degree d with
    the full degree-(d+1) piece of the ideal.
    """
    if not points:
        return True
    nvars = points[0].ambient_dim + 1
    basis = ideal_kernel(points, d, p)
    target = ideal_dim(points, d + 1, p)
    if not basis:
        return target == 0
    exps_d = monomials(nvars, d)
    exps_d1 = monomials(nvars, d + 1)
    index = {e: i for i, e in enumerate(exps_d1)}
    rows = []
    for F in basis:
        for k in range(nvars):
            v = np.zeros(len(exps_d1), dtype=np.int64)
            for c, e in zip(F, exps_d):
                if c % p:
                    shifted = tuple(
                        x + (1 if idx == k else 0) for idx, x in enumerate(e))
                    v[index[shifted]] = c % p
            rows.append(v)
    return linalg.rank(np.stack(rows), p) == target
