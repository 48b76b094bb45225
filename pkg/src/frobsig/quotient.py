"""Presented quotient rings R = F_p[x_1..x_n]/J and ideal arithmetic in R.

The maximal ideal is always the ideal of all variables, and lengths are
computed as vector-space dimensions of global quotients.  For ideals that
are homogeneous for some positive grading the two notions agree;
:func:`origin_support_check` flags inputs where they may not.
"""

from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InternalError, NotSOP, NotZeroDimensional
from .groebner import (
    DEFAULT_CELL_GUARD,
    INFINITE,
    GroebnerBasis,
    buchberger,
    count_standard_monomials,
    eliminate,
    krull_dimension,
    leading_ideal,
    normal_form,
    standard_monomials,
)
from .modlinalg import rref
from .polyfield import (
    Polynomial,
    PolyRing,
    frobenius_power,
    inverse_mod,
    mono_divides,
    mono_degree,
)


def _key(gens: Iterable[Polynomial]) -> frozenset:
    return frozenset(frozenset(g._d.items()) for g in gens if g)


class RingPresentation:
    """R = F_p[variables] / <relations> with its reduced Gröbner basis cached.

    ``cm_asserted`` records the caller's claim that R is Cohen-Macaulay; it
    is not verified, only probed by :func:`validate_sop`.  ``weights`` is an
    optional positive grading used by :func:`origin_support_check`.
    """

    def __init__(self, p: int, variables: Sequence[str], relations: Sequence = (),
                 *, cm_asserted: bool = True, weights: Sequence[int] | None = None,
                 name: str = "", guard: int = DEFAULT_CELL_GUARD):
        self.ring = PolyRing(tuple(variables), p)
        self.relations = tuple(
            r for r in (self.ring(r) for r in relations) if r
        )
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != self.ring.n or min(weights) <= 0:
                raise ValueError("weights must be positive, one per variable")
        self.weights = weights
        self.cm_asserted = bool(cm_asserted)
        self.name = name or str(self)
        self.guard = guard
        self.gb = buchberger(self.relations, ring=self.ring)
        if self.gb.is_unit():
            raise ValueError("the relations generate the unit ideal")
        self.dim = krull_dimension(leading_ideal(self.gb), self.ring.n)
        self._gb_cache: dict = {_key(self.relations): self.gb}
        self._lock = threading.Lock()

    @classmethod
    def polynomial_ring(cls, p, variables, **kw) -> RingPresentation:
        return cls(p, variables, (), **kw)

    # -- basic data -------------------------------------------------------
    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def variables(self) -> tuple:
        return self.ring.variables

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def d(self) -> int:
        return self.dim

    def __call__(self, value) -> Polynomial:
        return self.ring(value)

    def gens(self) -> list[Polynomial]:
        return self.ring.gens()

    def ideal(self, gens: Iterable) -> IdealInR:
        return IdealInR(self, tuple(self.ring(g) for g in gens))

    def maximal_ideal(self) -> IdealInR:
        return IdealInR(self, tuple(self.ring.gens()))

    def reduce(self, f) -> Polynomial:
        """Canonical representative of ``f`` modulo the relations."""
        return normal_form(self.ring(f), self.gb)

    def is_hypersurface(self) -> bool:
        return len(self.relations) == 1 and self.dim == self.n - 1

    def groebner(self, gens: Iterable[Polynomial]) -> GroebnerBasis:
        """Reduced Gröbner basis of ``J + <gens>`` (memoised)."""
        gens = [g for g in gens if g]
        key = _key(list(self.relations) + gens)
        G = self._gb_cache.get(key)
        if G is None:
            G = buchberger(list(self.relations) + gens, ring=self.ring)
            with self._lock:
                self._gb_cache[key] = G
        return G

    def quotient_by(self, element, name: str = "") -> RingPresentation:
        """Presentation of R/<element>, appending it to the relations."""
        return RingPresentation(
            self.p, self.variables, list(self.relations) + [self.ring(element)],
            cm_asserted=self.cm_asserted, weights=self.weights,
            name=name or f"{self.name}/({self.ring(element)})", guard=self.guard,
        )

    def __str__(self):
        base = f"F_{self.p}[{', '.join(self.variables)}]"
        if not self.relations:
            return base
        return f"{base}/({', '.join(str(r) for r in self.relations)})"

    def __repr__(self):
        return f"RingPresentation({self})"


@dataclass(frozen=True)
class IdealInR:
    """Ideal of R given by representatives in the ambient polynomial ring."""

    ring: RingPresentation = field(compare=False)
    generators: tuple = ()

    def lifted(self) -> list[Polynomial]:
        """Generators of the lifted ideal J + <generators> in the ambient ring."""
        return list(self.ring.relations) + [g for g in self.generators if g]

    def groebner(self) -> GroebnerBasis:
        return self.ring.groebner(self.generators)

    def contains(self, f) -> bool:
        return normal_form(self.ring(f), self.groebner()).is_zero()

    def contains_ideal(self, other: IdealInR) -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_as(self, other: IdealInR) -> bool:
        return self.groebner().generators == other.groebner().generators

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def colength(self):
        return colength(self)

    def __add__(self, other):
        if isinstance(other, IdealInR):
            return IdealInR(self.ring, self.generators + other.generators)
        return IdealInR(self.ring, self.generators + tuple(self.ring(g) for g in other))

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


# ---------------------------------------------------------------------------
# ideal operations

def bracket_power(I: IdealInR, e: int) -> IdealInR:
    """Frobenius bracket power I^[p^e], generated by q-th powers of the generators."""
    if e < 1:
        raise ValueError("bracket power needs e >= 1")
    return IdealInR(I.ring, tuple(frobenius_power(g, e) for g in I.generators))


def _with_t(ring: PolyRing) -> PolyRing:
    name = "_t"
    while name in ring.variables:
        name += "_"
    return PolyRing((name,) + ring.variables, ring.p)


def _push(f: Polynomial, tring: PolyRing, t_exp: int = 0) -> Polynomial:
    return Polynomial(tring, {(t_exp,) + m: c for m, c in f._d.items()}, _clean=True)


def intersect_lifted(A: Sequence[Polynomial], B: Sequence[Polynomial]) -> list[Polynomial]:
    """Generators of <A> ∩ <B> in the ambient ring, eliminating one variable t
    from t*A + (t-1)*B."""
    A = [g for g in A if g]
    B = [g for g in B if g]
    if not A or not B:
        return []
    ring = A[0].ring
    tring = _with_t(ring)
    t = tring.gen(0)
    gens = [_push(a, tring, 1) for a in A]
    gens += [(t - 1) * _push(b, tring) for b in B]
    out = eliminate(gens, [0])
    return [Polynomial(ring, {m[1:]: c for m, c in g._d.items()}, _clean=True) for g in out]


def divide_exact(g: Polynomial, f: Polynomial) -> Polynomial:
    """g / f, raising InternalError unless f divides g exactly."""
    order, p = f.ring.order, f.ring.p
    lf = f.leading_monomial
    inv = inverse_mod(f._d[lf], p)
    rest = dict(g._d)
    quo = {}
    while rest:
        lm = max(rest, key=order.key)
        if not mono_divides(lf, lm):
            raise InternalError(f"{f} does not divide {g}")
        u = tuple(a - b for a, b in zip(lm, lf))
        c = rest[lm] * inv % p
        quo[u] = c
        for m, v in f._d.items():
            t = tuple(a + b for a, b in zip(u, m))
            w = (rest.get(t, 0) - c * v) % p
            if w:
                rest[t] = w
            else:
                rest.pop(t, None)
    return Polynomial(f.ring, quo, _clean=True)


def _tidy(R: RingPresentation, gens: Iterable[Polynomial]) -> tuple:
    out = []
    seen = set()
    for g in gens:
        r = R.reduce(g)
        if r and r not in seen:
            seen.add(r)
            out.append(r)
    return tuple(out)


def colon_element(I: IdealInR, f) -> IdealInR:
    """(J + I) : f, returned as an ideal of R."""
    R = I.ring
    f = R.ring(f)
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    meet = intersect_lifted(I.lifted(), [f])
    quotients = [divide_exact(h, f) for h in meet]
    return IdealInR(R, _tidy(R, quotients))


def intersect(I: IdealInR, K: IdealInR) -> IdealInR:
    R = I.ring
    if I.is_unit():
        return K
    if K.is_unit():
        return I
    return IdealInR(R, _tidy(R, intersect_lifted(I.lifted(), K.lifted())))


def colon_ideal(I: IdealInR, K: IdealInR) -> IdealInR:
    """(J + I) : K as the intersection of the colons by each generator of K."""
    R = I.ring
    result = None
    for g in K.generators:
        if R.reduce(g).is_zero():
            continue
        C = colon_element(I, g)
        result = C if result is None else intersect(result, C)
    if result is None:
        return IdealInR(R, (R.ring.one(),))
    return result


def colength(I: IdealInR):
    """dim_k S/(J + I); ``INFINITE`` when the quotient is not finite-dimensional."""
    G = I.groebner()
    return count_standard_monomials(leading_ideal(G), I.ring.n, I.ring.guard)


def socle_basis(x: IdealInR) -> list[Polynomial]:
    """Basis of the socle (x : m)/x as normal forms modulo J + x."""
    R = x.ring
    if colength(x) == INFINITE:
        raise NotZeroDimensional(f"{x} does not have finite colength in {R}")
    G = x.groebner()
    std = standard_monomials(leading_ideal(G), R.n, R.guard)
    std.sort(key=R.ring.order.key, reverse=True)
    col = {m: i for i, m in enumerate(std)}
    C = colon_ideal(x, R.maximal_ideal())
    rows = []
    for g in C.generators:
        r = normal_form(g, G)
        if r:
            v = [0] * len(std)
            for m, c in r._d.items():
                v[col[m]] = c
            rows.append(v)
    basis, _ = rref(rows, R.p)
    return [Polynomial(R.ring, {std[i]: c for i, c in enumerate(v) if c}, _clean=True)
            for v in basis]


@dataclass
class SOPReport:
    accepted: bool
    colength: int
    probe_ran: bool = False
    probe_ok: bool | None = None
    probe_lengths: tuple | None = None
    warnings: list = field(default_factory=list)


def validate_sop(R: RingPresentation, x: Sequence) -> SOPReport:
    """Check that ``x`` is a system of parameters of R.

    Raises NotSOP on a wrong number of elements or infinite colength.  When
    the ring is asserted Cohen-Macaulay, also probes
    l(R/x^[p]) == p^d l(R/x) and records a warning on failure.
    """
    xs = tuple(R.ring(g) for g in x)
    if len(xs) != R.d:
        raise NotSOP(f"{len(xs)} elements given but dim R = {R.d}")
    ideal = IdealInR(R, xs)
    ell = colength(ideal)
    if ell == INFINITE:
        raise NotSOP(f"R/<{', '.join(map(str, xs))}> is not finite-dimensional")
    report = SOPReport(True, ell)
    if R.cm_asserted:
        ell_p = colength(bracket_power(ideal, 1))
        report.probe_ran = True
        report.probe_lengths = (ell_p, R.p ** R.d * ell)
        report.probe_ok = ell_p == R.p ** R.d * ell
        if not report.probe_ok:
            msg = (f"Cohen-Macaulay probe failed for {R.name}: "
                   f"l(R/x^[p]) = {ell_p} but p^d l(R/x) = {R.p ** R.d * ell}")
            report.warnings.append(msg)
            warnings.warn(msg, stacklevel=2)
    return report


def cm_type(R: RingPresentation, x: Sequence) -> int:
    """Dimension of the socle modulo the parameter ideal (x)."""
    validate_sop(R, x)
    return len(socle_basis(R.ideal(x)))


@dataclass
class SupportCheck:
    ok: bool
    weights: tuple
    diagnostics: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def origin_support_check(I: IdealInR, weights: Sequence[int] | None = None) -> SupportCheck:
    """Are all lifted generators homogeneous for a positive grading?

    If so the quotient is supported at the origin and global dimension equals
    local length.  A failure only warns.
    """
    R = I.ring
    weights = tuple(weights or R.weights or (1,) * R.n)
    diagnostics = []
    for g in I.lifted():
        degs = sorted({mono_degree(m, weights) for m in g._d})
        if len(degs) > 1:
            diagnostics.append(f"{g} mixes weighted degrees {degs}")
    check = SupportCheck(not diagnostics, weights, diagnostics)
    if diagnostics:
        warnings.warn(
            "lengths are global vector-space dimensions and may differ from the "
            "length at the origin: " + "; ".join(diagnostics),
            stacklevel=2,
        )
    return check
