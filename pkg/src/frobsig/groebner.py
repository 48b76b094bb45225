"""Gröbner bases over F_p: division, Buchberger, leading ideals, counting.

The hot loops work on the raw ``exponent tuple -> coefficient`` dictionaries
held by :class:`~frobsig.polyfield.Polynomial`; public functions take and
return ``Polynomial`` objects.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import ArityError, ResourceLimit
from .polyfield import (
    MonomialOrder,
    Monomial,
    Polynomial,
    PolyRing,
    inverse_mod,
    mono_coprime,
    mono_divides,
    mono_lcm,
)

INFINITE = math.inf
DEFAULT_CELL_GUARD = 10**7


# ---------------------------------------------------------------------------
# raw-dictionary kernels

def _monic(d: dict, order: MonomialOrder, p: int) -> tuple[Monomial, dict]:
    lm = max(d, key=order.key)
    c = d[lm]
    if c != 1:
        inv = inverse_mod(c, p)
        d = {m: v * inv % p for m, v in d.items()}
    return lm, d


def _prepare(lm: Monomial, d: dict):
    return lm, [(m, c) for m, c in d.items() if m != lm]


def _reduce(f: dict, basis: Sequence, order: MonomialOrder, p: int) -> dict:
    """Full reduction of ``f`` by monic ``basis`` entries ``(lm, tail_items)``.

    The first entry (in list order) whose leading monomial divides the
    current term is used, so the result is deterministic.
    """
    if not f or not basis:
        return dict(f)
    hk = order.heap_key
    f = dict(f)
    heap = [(hk(m), m) for m in f]
    heapq.heapify(heap)
    rem = {}
    while heap:
        m = heapq.heappop(heap)[1]
        c = f.pop(m, None)
        if c is None:
            continue
        for lm, tail in basis:
            if all(a <= b for a, b in zip(lm, m)):
                break
        else:
            rem[m] = c
            continue
        u = tuple(b - a for a, b in zip(lm, m))
        for gm, gc in tail:
            t = tuple(a + b for a, b in zip(u, gm))
            old = f.get(t)
            v = ((old or 0) - c * gc) % p
            if v:
                if old is None:
                    heapq.heappush(heap, (hk(t), t))
                f[t] = v
            elif old is not None:
                del f[t]
    return rem


def _spoly(lm_i, gi: dict, lm_j, gj: dict, p: int) -> dict:
    lcm = mono_lcm(lm_i, lm_j)
    ui = tuple(a - b for a, b in zip(lcm, lm_i))
    uj = tuple(a - b for a, b in zip(lcm, lm_j))
    out: dict = {}
    for m, c in gi.items():
        t = tuple(a + b for a, b in zip(ui, m))
        out[t] = c
    for m, c in gj.items():
        t = tuple(a + b for a, b in zip(uj, m))
        v = (out.get(t, 0) - c) % p
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


# ---------------------------------------------------------------------------
# public API

@dataclass(frozen=True)
class GroebnerBasis:
    """A Gröbner basis; when ``reduced`` the generators are monic and sorted
    by decreasing leading monomial."""

    ring: PolyRing
    generators: tuple
    reduced: bool = True

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial for g in self.generators]

    def _basis(self):
        cached = self.__dict__.get("_basis_cache")
        if cached is None:
            cached = []
            for g in self.generators:
                lm, d = _monic(g._d, self.order, self.ring.p)
                cached.append(_prepare(lm, d))
            object.__setattr__(self, "_basis_cache", cached)
        return cached

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.leading_monomials)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.generators) + "}"


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``G``; no term is divisible by any
    leading monomial of ``G``."""
    if f.ring.n != G.ring.n or f.ring.p != G.ring.p:
        raise ArityError(f"{f.ring} vs {G.ring}")
    rem = _reduce(f._d, G._basis(), G.order, G.ring.p)
    return Polynomial(G.ring, rem, _clean=True).change_ring(f.ring)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    order, p = f.ring.order, f.ring.p
    lf, df = _monic(f._d, order, p)
    lg, dg = _monic(g._d, order, p)
    return Polynomial(f.ring, _spoly(lf, df, lg, dg, p), _clean=True)


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder | None = None,
               ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are processed by the normal strategy (smallest lcm first) and
    skipped by the coprime-leading-monomial and chain criteria.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    if order is not None:
        ring = ring.with_order(order)
    order, p = ring.order, ring.p
    for g in gens:
        if g.ring.n != ring.n or g.ring.p != ring.p:
            raise ArityError(f"generator {g} is not in {ring}")
    inputs = [g._d for g in gens if g._d]
    if not inputs:
        return GroebnerBasis(ring, (), True)
    inputs.sort(key=lambda d: order.key(max(d, key=order.key)))

    G: list[tuple[Monomial, dict]] = []
    basis: list = []
    pairs: dict = {}

    def add(d):
        lm, d = _monic(d, order, p)
        k = len(G)
        G.append((lm, d))
        basis.append(_prepare(lm, d))
        for i in range(k):
            lcm = mono_lcm(G[i][0], lm)
            pairs[(i, k)] = (sum(lcm), order.key(lcm), i, k)

    for d in inputs:
        r = _reduce(d, basis, order, p)
        if r:
            add(r)
            if not any(G[-1][0]):
                return GroebnerBasis(ring, (ring.one(),), True)

    while pairs:
        ij = min(pairs, key=pairs.__getitem__)
        del pairs[ij]
        i, j = ij
        lm_i, gi = G[i]
        lm_j, gj = G[j]
        if mono_coprime(lm_i, lm_j):
            continue
        lcm = mono_lcm(lm_i, lm_j)
        if _chain_skip(i, j, lcm, G, pairs):
            continue
        r = _reduce(_spoly(lm_i, gi, lm_j, gj, p), basis, order, p)
        if r:
            add(r)
            if not any(G[-1][0]):
                return GroebnerBasis(ring, (ring.one(),), True)

    return GroebnerBasis(ring, tuple(_reduce_basis(G, ring)), True)


def _chain_skip(i, j, lcm, G, pairs) -> bool:
    for k, (lm_k, _) in enumerate(G):
        if k == i or k == j:
            continue
        if not mono_divides(lm_k, lcm):
            continue
        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue
        return True
    return False


def _reduce_basis(G, ring: PolyRing) -> list[Polynomial]:
    order, p = ring.order, ring.p
    keep = []
    for idx, (lm, d) in enumerate(G):
        redundant = False
        for jdx, (lm2, _) in enumerate(G):
            if jdx == idx or not mono_divides(lm2, lm):
                continue
            if lm2 != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append((lm, d))
    out = []
    for idx, (lm, d) in enumerate(keep):
        others = [_prepare(lm2, d2) for jdx, (lm2, d2) in enumerate(keep) if jdx != idx]
        tail = {m: c for m, c in d.items() if m != lm}
        tail = _reduce(tail, others, order, p)
        tail[lm] = 1
        out.append((lm, tail))
    out.sort(key=lambda t: order.key(t[0]), reverse=True)
    return [Polynomial(ring, d, _clean=True) for _, d in out]


def is_groebner(G: GroebnerBasis) -> bool:
    """Exhaustive S-pair certificate (no criteria skipped)."""
    gens = list(G.generators)
    for a, b in combinations(range(len(gens)), 2):
        if not normal_form(s_polynomial(gens[a], gens[b]), G).is_zero():
            return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    lms = G.leading_monomials
    for g, lm in zip(G.generators, lms):
        if g.leading_coefficient != 1:
            return False
        for other in lms:
            if other == lm:
                continue
            if any(mono_divides(other, m) for m in g.monomials()):
                return False
    return True


def leading_ideal(G: GroebnerBasis) -> list[Monomial]:
    """Minimal monomial generators of the initial ideal of ``G``."""
    lms = sorted(set(G.leading_monomials), key=G.order.key, reverse=True)
    return [m for m in lms if not any(o != m and mono_divides(o, m) for o in lms)]


def _box(L: Sequence[Monomial], n: int, guard: int):
    """Boolean mask of the bounding box; True marks monomials in the ideal.

    Returns None when some variable has no pure power in ``L``.
    """
    bounds = [None] * n
    for m in L:
        support = [i for i, a in enumerate(m) if a]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        return None
    cells = math.prod(bounds)
    if cells > guard:
        raise ResourceLimit(f"standard-monomial box has {cells} cells (guard {guard})")
    mask = np.zeros(bounds, dtype=bool)
    for m in L:
        if all(a < b for a, b in zip(m, bounds)):
            mask[tuple(slice(a, None) for a in m)] = True
    return mask


def count_standard_monomials(L: Sequence[Monomial], n: int | None = None,
                             guard: int = DEFAULT_CELL_GUARD):
    """Number of monomials outside the monomial ideal generated by ``L``.

    Returns ``INFINITE`` if some variable has no pure power among ``L``.
    """
    L = [tuple(m) for m in L]
    if n is None:
        if not L:
            raise ValueError("n is required when L is empty")
        n = len(L[0])
    if any(not any(m) for m in L):
        return 0
    if n == 0:
        return 1
    mask = _box(L, n, guard)
    if mask is None:
        return INFINITE
    return int(mask.size - np.count_nonzero(mask))


def standard_monomials(L: Sequence[Monomial], n: int,
                       guard: int = DEFAULT_CELL_GUARD) -> list[Monomial]:
    """The standard monomials themselves, in increasing lex order of exponents."""
    L = [tuple(m) for m in L]
    if any(not any(m) for m in L):
        return []
    if n == 0:
        return [()]
    mask = _box(L, n, guard)
    if mask is None:
        raise ResourceLimit("infinitely many standard monomials")
    return [tuple(int(a) for a in row) for row in np.argwhere(~mask)]


def krull_dimension(L: Sequence[Monomial], n: int | None = None) -> int:
    """Largest set of variables containing the support of no generator.

    Returns -1 for the unit ideal.
    """
    L = [tuple(m) for m in L]
    if n is None:
        n = len(L[0])
    supports = [frozenset(i for i, a in enumerate(m) if a) for m in L]
    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            U = frozenset(U)
            if not any(s <= U for s in supports):
                return size
    return -1


def eliminate(gens: Sequence[Polynomial], front_block: Iterable) -> list[Polynomial]:
    """Generators of ``<gens>`` intersected with the subring free of ``front_block``.

    ``front_block`` holds variable names or indices.  The basis is computed in
    a block order with the front variables first.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    front = sorted({ring.variables.index(v) if isinstance(v, str) else int(v)
                    for v in front_block})
    if not front:
        return list(buchberger(gens))
    back = [i for i in range(ring.n) if i not in front]
    perm = front + back
    inv = [perm.index(i) for i in range(ring.n)]
    erring = PolyRing(tuple(ring.variables[i] for i in perm), ring.p,
                      MonomialOrder.elimination(len(front)))
    moved = [Polynomial(erring, {tuple(m[i] for i in perm): c for m, c in g._d.items()},
                        _clean=True) for g in gens]
    G = buchberger(moved)
    out = []
    for g in G:
        if any(m[i] for m in g._d for i in range(len(front))):
            continue
        out.append(Polynomial(ring, {tuple(m[i] for i in inv): c for m, c in g._d.items()},
                              _clean=True))
    return out
