"""Brute-force length oracle by dense linear algebra, independent of Gröbner bases.

For an ideal K generated by (weighted-)homogeneous polynomials,
``dim_k (S/K)_t = #monomials of degree t - rank{m*g : deg(m*g) = t}``,
and summing over t gives dim_k S/K.  Only meant for small inputs.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .polyfield import Polynomial, PolyRing


def _rank_mod_p(A: np.ndarray, p: int) -> int:
    return len(_echelon_mod_p(A, p)[1])


def _echelon_mod_p(A: np.ndarray, p: int):
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _nullspace_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {v : A v = 0} over F_p."""
    E, pivots = _echelon_mod_p(A, p)
    ncols = A.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -E[i, f] % p
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), ncols)


def _monomials_of_degree(n: int, t: int, weights: Sequence[int]):
    out = []

    def rec(i, remaining, acc):
        if i == n - 1:
            if remaining % weights[i] == 0:
                out.append(tuple(acc + [remaining // weights[i]]))
            return
        for a in range(remaining // weights[i] + 1):
            rec(i + 1, remaining - a * weights[i], acc + [a])

    if n == 0:
        return [()] if t == 0 else []
    rec(0, t, [])
    return out


def _wdeg(m, weights):
    return sum(a * w for a, w in zip(m, weights))


def dense_colength(gens: Sequence[Polynomial], ring: PolyRing | None = None,
                   weights: Sequence[int] | None = None, max_degree: int = 400) -> int:
    """dim_k S/<gens> for weighted-homogeneous ``gens`` by graded rank counts."""
    gens = [g for g in gens if g]
    ring = ring or gens[0].ring
    n, p = ring.n, ring.p
    weights = tuple(weights or (1,) * n)
    homog = []
    for g in gens:
        items = list(g.as_dict().items())
        degs = {_wdeg(m, weights) for m, _ in items}
        if len(degs) != 1:
            raise ValueError(f"{g} is not homogeneous for weights {weights}")
        homog.append((degs.pop(), items))
    if any(d == 0 for d, _ in homog):
        return 0
    total = 0
    zero_run = 0
    wmax = max(weights) if weights else 1
    for t in range(max_degree + 1):
        basis = _monomials_of_degree(n, t, weights)
        index = {m: i for i, m in enumerate(basis)}
        rows = []
        for dg, items in homog:
            if dg > t:
                continue
            for m in _monomials_of_degree(n, t - dg, weights):
                v = np.zeros(len(basis), dtype=np.int64)
                for gm, c in items:
                    v[index[tuple(a + b for a, b in zip(m, gm))]] += c
                rows.append(v % p)
        r = _rank_mod_p(np.array(rows), p) if rows and basis else 0
        dim_t = len(basis) - r
        total += dim_t
        zero_run = zero_run + 1 if dim_t == 0 else 0
        if zero_run >= wmax:
            return total
    raise ValueError(f"quotient still nonzero in degree {max_degree}; not finite?")


def dense_splitting_number(f: Polynomial, q: int) -> int:
    """a_e = dim_k S/((m^[q] : f^(q-1)) + (f)) via the kernel of
    multiplication by f^(q-1) on S/m^[q]."""
    ring = f.ring
    n, p = ring.n, ring.p
    box = list(itertools.product(range(q), repeat=n))
    index = {m: i for i, m in enumerate(box)}
    g = ring.one()
    for _ in range(q - 1):
        g = g * f

    def mult_matrix(h):
        M = np.zeros((len(box), len(box)), dtype=np.int64)
        items = list(h.as_dict().items())
        for j, m in enumerate(box):
            for hm, c in items:
                t = tuple(a + b for a, b in zip(m, hm))
                if all(a < q for a in t):
                    M[index[t], j] = (M[index[t], j] + c) % p
        return M

    K = _nullspace_mod_p(mult_matrix(g), p)
    F = mult_matrix(f).T  # rows: f * basis monomial
    stacked = np.vstack([K, F]) if K.size else F
    return len(box) - _rank_mod_p(stacked, p)
