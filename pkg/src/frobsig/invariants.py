"""Hilbert-Kunz sequences and F-rational / F-signature estimators.

Everything here is exact: lengths are integers and normalized values are
``fractions.Fraction``.  Limits are estimated from finitely many Frobenius
iterates e = 1..E by fitting ``value(q) = s + c/q`` through the last two
rows; the raw rows are always reported next to the fitted ``s``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InternalError, NotNested, NotSOP, ResourceLimit
from .groebner import INFINITE
from .modlinalg import rref
from .polyfield import Polynomial, PolyRing, frobenius_power, format_polynomial
from .quotient import (
    IdealInR,
    RingPresentation,
    bracket_power,
    colength,
    colon_element,
    socle_basis,
    validate_sop,
)

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled-upper-bound"

MODEL_NOTE = (
    "normalized lengths converge at rate O(1/q); the estimate fits "
    "s + c/q through the last two rows. The constant in the rate is not "
    "known, so no rigorous error bar is attached."
)


def _e_values(e_range) -> list[int]:
    if isinstance(e_range, int):
        es = list(range(1, e_range + 1))
    else:
        es = sorted(set(int(e) for e in e_range))
    if not es or es[0] < 1:
        raise ValueError(f"e_range must consist of positive integers, got {e_range!r}")
    return es


def extrapolate(qs: Sequence[int], values: Sequence[Fraction]) -> Fraction:
    """Limit estimate ``s`` of ``values ~ s + c/q`` from the last two points."""
    if not values:
        raise ValueError("nothing to extrapolate")
    if len(values) == 1:
        return Fraction(values[-1])
    q1, q2 = qs[-2], qs[-1]
    v1, v2 = Fraction(values[-2]), Fraction(values[-1])
    return (q2 * v2 - q1 * v1) / (q2 - q1)


# ---------------------------------------------------------------------------
# Hilbert-Kunz sequences

@dataclass
class HKRow:
    e: int
    q: int
    length: int
    normalized: Fraction


@dataclass
class HKReport:
    ring: str
    ideal: str
    d: int
    rows: list = field(default_factory=list)
    extrapolated: Fraction | None = None
    model_note: str = MODEL_NOTE
    truncated: str | None = None

    @property
    def residual(self) -> Fraction:
        if not self.rows:
            return Fraction(0)
        return abs(self.extrapolated - self.rows[-1].normalized)


def hk_sequence(R: RingPresentation, I: IdealInR, e_range=4) -> HKReport:
    """Rows ``(e, q, l(R/I^[q]), l(R/I^[q]) / q^d)`` and their extrapolated limit."""
    if colength(I) == INFINITE:
        raise NotSOP(f"{I} is not m-primary in {R.name}")
    report = HKReport(R.name, str(I), R.d)
    for e in _e_values(e_range):
        q = R.p ** e
        try:
            ell = colength(bracket_power(I, e))
        except ResourceLimit as exc:
            report.truncated = str(exc)
            _finish_hk(report)
            raise ResourceLimit(str(exc), partial=report) from exc
        report.rows.append(HKRow(e, q, ell, Fraction(ell, q ** R.d)))
    _finish_hk(report)
    return report


def _finish_hk(report: HKReport):
    if report.rows:
        report.extrapolated = extrapolate([r.q for r in report.rows],
                                          [r.normalized for r in report.rows])


@dataclass
class RelativeRow:
    e: int
    q: int
    length_sop: int
    length_ideal: int
    value: Fraction


@dataclass
class RelativeHKReport:
    ring: str
    sop: str
    ideal: str
    rows: list = field(default_factory=list)
    extrapolated: Fraction | None = None

    @property
    def values(self) -> list[Fraction]:
        return [r.value for r in self.rows]


def relative_hk(R: RingPresentation, x: Sequence, I: IdealInR, e_range=4) -> RelativeHKReport:
    """Per-e relative Hilbert-Kunz differences (l(R/x^[q]) - l(R/I^[q])) / q^d."""
    X = R.ideal(x)
    if not I.contains_ideal(X):
        raise NotNested(f"{X} is not contained in {I}")
    if colength(X) == INFINITE or colength(I) == INFINITE:
        raise NotSOP("both ideals must have finite colength")
    report = RelativeHKReport(R.name, str(X), str(I))
    for e in _e_values(e_range):
        q = R.p ** e
        lx = colength(bracket_power(X, e))
        li = colength(bracket_power(I, e))
        report.rows.append(RelativeRow(e, q, lx, li, Fraction(lx - li, q ** R.d)))
    report.extrapolated = extrapolate([r.q for r in report.rows], report.values)
    return report


# ---------------------------------------------------------------------------
# candidate search

@dataclass
class SearchConfig:
    max_subspaces: int = 10**5
    seed: int = 0


@dataclass
class Candidate:
    description: str
    generators: tuple
    dim: int
    lengths: list = field(default_factory=list)
    values: list = field(default_factory=list)
    extrapolated: Fraction | None = None

    @property
    def residual(self) -> Fraction:
        return abs(self.extrapolated - self.values[-1])


@dataclass
class SignatureReport:
    task: str
    ring: str
    sop: tuple
    d: int
    e_values: list
    q_values: list
    base_lengths: list
    candidates: list
    minimum: Fraction
    minimizers: list
    per_e_minimum: list
    search_complete: bool
    bound_flag: str
    socle: tuple = ()
    notes: list = field(default_factory=list)

    @property
    def residual(self) -> Fraction:
        """Extrapolation residual of the (first) minimizing candidate."""
        best = next(c for c in self.candidates if c.description == self.minimizers[0])
        return best.residual

    def candidate(self, description: str) -> Candidate:
        return next(c for c in self.candidates if c.description == description)


def gaussian_binomial(t: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^t."""
    num = den = 1
    for i in range(k):
        num *= p ** (t - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def count_subspaces(t: int, p: int) -> int:
    return sum(gaussian_binomial(t, k, p) for k in range(1, t + 1))


def _rref_subspaces(t: int, k: int, p: int):
    """All k x t reduced row echelon matrices over F_p (each a subspace once)."""
    for pivots in itertools.combinations(range(t), k):
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, t)
                if j not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            M = [[0] * t for _ in range(k)]
            for i, pc in enumerate(pivots):
                M[i][pc] = 1
            for (i, j), v in zip(free, values):
                M[i][j] = v
            yield tuple(tuple(r) for r in M)


def _lines(t: int, p: int):
    return _rref_subspaces(t, 1, p)


def _random_subspace(t: int, p: int, rng: random.Random, weights) -> tuple:
    k = rng.choices(range(1, t + 1), weights=weights)[0]
    while True:
        rows = [[rng.randrange(p) for _ in range(t)] for _ in range(k)]
        M, _ = rref(rows, p)
        if len(M) == k:
            return tuple(tuple(r) for r in M)


def _enumerate(t: int, p: int, cap: int, seed: int, lines_only: bool):
    """Candidate coefficient matrices (rows span a subspace of the socle).

    Below the cap the enumeration is exhaustive; above it the list is a
    prefix of a fixed sequence (full socle, lines, seeded random draws) so a
    larger cap always yields a superset.
    """
    if lines_only:
        total = (p ** t - 1) // (p - 1)
    else:
        total = count_subspaces(t, p)
    if total <= cap:
        if lines_only:
            return list(_lines(t, p)), True
        return [M for k in range(1, t + 1) for M in _rref_subspaces(t, k, p)], True

    chosen: dict = {}
    full = tuple(tuple(int(i == j) for j in range(t)) for i in range(t))
    if not lines_only:
        chosen[full] = None
    for M in _lines(t, p):
        if len(chosen) >= cap:
            break
        chosen.setdefault(M, None)
    rng = random.Random(seed)
    if lines_only:
        weights = [1] + [0] * (t - 1)
    else:
        weights = [gaussian_binomial(t, k, p) for k in range(1, t + 1)]
    attempts = 0
    while len(chosen) < cap and attempts < 50 * cap:
        attempts += 1
        chosen.setdefault(_random_subspace(t, p, rng, weights), None)
    return list(chosen), False


def _span_description(gens: Sequence[Polynomial]) -> str:
    return "span(" + ", ".join(format_polynomial(g) for g in gens) + ")"


def _combine(M, socle: Sequence[Polynomial]) -> tuple:
    out = []
    for row in M:
        g = socle[0].ring.zero()
        for c, s in zip(row, socle):
            if c:
                g = g + s.scale(c)
        out.append(g)
    return tuple(out)


def _signature(task: str, R: RingPresentation, x: Sequence, e_range,
               search: SearchConfig | None) -> SignatureReport:
    search = search or SearchConfig()
    xs = tuple(R(g) for g in x)
    validate_sop(R, xs)
    X = R.ideal(xs)
    socle = socle_basis(X)
    t = len(socle)
    es = _e_values(e_range)
    qs = [R.p ** e for e in es]
    base = [colength(bracket_power(X, e)) for e in es]
    ell_x = colength(X)

    matrices, complete = _enumerate(t, R.p, search.max_subspaces, search.seed,
                                    lines_only=(task == "rsig"))
    candidates = []
    for M in matrices:
        gens = _combine(M, socle)
        I = R.ideal(xs + gens)
        dim = len(M)
        drop = ell_x - colength(I)
        if drop != dim:
            raise InternalError(f"length drop {drop} != subspace dimension {dim} for {gens}")
        desc = format_polynomial(gens[0]) if task == "rsig" else _span_description(gens)
        cand = Candidate(desc, gens, dim)
        denom = dim if task == "csig" else 1
        for e, q, lx in zip(es, qs, base):
            li = colength(bracket_power(I, e))
            cand.lengths.append(li)
            cand.values.append(Fraction(lx - li, q ** R.d * denom))
        cand.extrapolated = extrapolate(qs, cand.values)
        candidates.append(cand)
    candidates.sort(key=lambda c: (c.dim, c.description))

    minimum = min(c.extrapolated for c in candidates)
    minimizers = sorted(c.description for c in candidates if c.extrapolated == minimum)
    per_e = [min(c.values[k] for c in candidates) for k in range(len(es))]
    notes = []
    if not complete:
        notes.append(f"searched {len(candidates)} of the candidate "
                     f"{'elements' if task == 'rsig' else 'subspaces'}; "
                     "the minimum is an upper bound")
    notes.append("only F_p-rational candidates are searched; the infimum over "
                 "field extensions can be smaller")
    if ell_x == 1:
        notes.append("the parameter ideal is the maximal ideal (regular ring); "
                     "the only candidate is the unit ideal")
    return SignatureReport(
        task=task, ring=R.name, sop=tuple(format_polynomial(g) for g in xs), d=R.d,
        e_values=es, q_values=qs, base_lengths=base, candidates=candidates,
        minimum=minimum, minimizers=minimizers, per_e_minimum=per_e,
        search_complete=complete, bound_flag=EXHAUSTIVE if complete else SAMPLED,
        socle=tuple(format_polynomial(s) for s in socle), notes=notes,
    )


def rsig_estimate(R: RingPresentation, x: Sequence, e_range=4,
                  search: SearchConfig | None = None) -> SignatureReport:
    """F-rational signature estimate over socle elements u (up to scalars):
    min over u of the limit of (l(R/x^[q]) - l(R/(x, u)^[q])) / q^d."""
    return _signature("rsig", R, x, e_range, search)


def csig_estimate(R: RingPresentation, x: Sequence, e_range=4,
                  search: SearchConfig | None = None) -> SignatureReport:
    """Relative F-rational signature estimate over nonzero socle subspaces V.

    Each candidate is I_V = x + V with value
    (l(R/x^[q]) - l(R/I_V^[q])) / (q^d dim V).
    """
    return _signature("csig", R, x, e_range, search)


# ---------------------------------------------------------------------------
# F-signature of hypersurfaces

def fsig_hypersurface(S, f, e_range=4) -> SignatureReport:
    """F-signature estimate of S/(f) from the splitting numbers
    a_e = l(S / ((m^[q] : f^(q-1)) + (f))), normalized by q^(n-1)."""
    if isinstance(S, RingPresentation):
        if S.relations:
            raise ValueError("fsig_hypersurface expects the ambient polynomial ring")
        P = S
    elif isinstance(S, PolyRing):
        P = RingPresentation(S.p, S.variables, (), cm_asserted=True)
    else:
        raise TypeError(f"expected a polynomial ring, got {type(S).__name__}")
    f = P(f)
    if f.is_zero() or f.is_constant():
        raise ValueError("f must be a nonconstant polynomial")
    p, d = P.p, P.n - 1
    es = _e_values(e_range)
    qs = [p ** e for e in es]
    m = P.maximal_ideal()
    fp1 = f ** (p - 1)
    cand = Candidate("splitting ideal (m^[q] : f^(q-1)) + (f)", (f,), 1)
    for e, q in zip(es, qs):
        g = P.ring.one()
        for i in range(e):
            g = g * frobenius_power(fp1, i)
        colon = colon_element(bracket_power(m, e), g)
        a_e = colength(colon + [f])
        cand.lengths.append(a_e)
        cand.values.append(Fraction(a_e, q ** d))
    cand.extrapolated = extrapolate(qs, cand.values)
    return SignatureReport(
        task="fsig", ring=f"{P}/({format_polynomial(f)})", sop=(), d=d,
        e_values=es, q_values=qs, base_lengths=[q ** d for q in qs],
        candidates=[cand], minimum=cand.extrapolated, minimizers=[cand.description],
        per_e_minimum=list(cand.values), search_complete=True, bound_flag=EXHAUSTIVE,
    )


# ---------------------------------------------------------------------------
# comparison chain, thresholds, deformation

@dataclass
class ChainRow:
    e: int
    csig_min: Fraction
    rsig_min: Fraction
    ok: bool


@dataclass
class ChainReport:
    ring: str
    rows: list
    csig: SignatureReport
    rsig: SignatureReport
    cm_type: int
    dsig_lower_bound: Fraction
    strict: bool
    fsig: SignatureReport | None = None
    coincidence_ok: bool | None = None
    tolerance: Fraction | None = None
    findings: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows) and self.csig.minimum <= self.rsig.minimum \
            and self.coincidence_ok is not False


def chain_check(R: RingPresentation, x: Sequence, e_range=4,
                search: SearchConfig | None = None,
                tolerance: Fraction = Fraction(1, 10)) -> ChainReport:
    """Check csig <= rsig exactly at every e; for Gorenstein hypersurfaces
    also compare csig with the F-signature estimate."""
    cs = csig_estimate(R, x, e_range, search)
    rs = rsig_estimate(R, x, e_range, search)
    rows = [ChainRow(e, c, r, c <= r)
            for e, c, r in zip(cs.e_values, cs.per_e_minimum, rs.per_e_minimum)]
    t = len(cs.socle)
    report = ChainReport(
        ring=R.name, rows=rows, csig=cs, rsig=rs, cm_type=t,
        dsig_lower_bound=rs.minimum / t, strict=cs.minimum < rs.minimum,
    )
    for row in rows:
        if not row.ok:
            report.findings.append(f"e={row.e}: csig {row.csig_min} > rsig {row.rsig_min}")
    if cs.minimum > rs.minimum:
        report.findings.append(f"extrapolated csig {cs.minimum} > rsig {rs.minimum}")
    if R.is_hypersurface():
        report.fsig = fsig_hypersurface(R.ring, R.relations[0], e_range)
        if t == 1:
            report.tolerance = Fraction(tolerance)
            report.coincidence_ok = abs(cs.minimum - report.fsig.minimum) <= report.tolerance
            if not report.coincidence_ok:
                report.findings.append(
                    f"Gorenstein ring but |csig - fsig| = "
                    f"{abs(cs.minimum - report.fsig.minimum)} > {tolerance}")
    return report


@dataclass
class SingularityReport:
    csig: Fraction
    multiplicity: int
    d: int
    flags: list = field(default_factory=list)
    thresholds: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    note: str = ("heuristic: the csig value is a finite-e, finite-search estimate, "
                 "not the exact invariant")


def singularity_report(csig_est, mult: int, d: int) -> SingularityReport:
    """Classify from a csig estimate, the multiplicity e(R) and dim R.

    regular: csig == 1; weakly F-regular: csig >= 1 - max(1/d!, 1/e)/(e-1);
    Gorenstein and F-regular: csig >= 1 - 1/(e-1)^2.  The F-regularity
    flags additionally need csig > 0, since F-regular rings are F-rational.
    """
    c = Fraction(csig_est)
    if mult < 1:
        raise ValueError("multiplicity must be positive")
    rep = SingularityReport(c, mult, d)
    if c == 1:
        rep.flags.append("regular")
    if mult == 1:
        if c < 1:
            rep.warnings.append("multiplicity 1 forces a regular ring, but csig < 1: "
                                "inconsistent input")
        return rep
    weak = 1 - max(Fraction(1, math.factorial(d)), Fraction(1, mult)) / (mult - 1)
    gor = 1 - Fraction(1, (mult - 1) ** 2)
    rep.thresholds = {"weakly-F-regular": weak, "Gorenstein-F-regular": gor}
    if c > 0 and c >= weak:
        rep.flags.append("weakly-F-regular")
    if c > 0 and c >= gor:
        rep.flags.append("Gorenstein-F-regular")
    if c > 1:
        rep.warnings.append("csig estimate exceeds 1")
    return rep


@dataclass
class DeformationReport:
    ring: str
    quotient: str
    parameter: str
    csig_ring: SignatureReport
    csig_quotient: SignatureReport
    tolerance: Fraction
    passed: bool


def deformation_check(R: RingPresentation, x_param, sop_R: Sequence, sop_quotient: Sequence,
                      e_range=4, search: SearchConfig | None = None,
                      tolerance: Fraction | None = None) -> DeformationReport:
    """Compare csig(R) with csig(R/xR); expects csig(R) >= csig(R/xR)."""
    xp = R(x_param)
    sop = [R(g) for g in sop_R]
    if xp not in sop:
        raise NotSOP(f"{xp} is not one of the given parameters {[str(g) for g in sop]}")
    validate_sop(R, sop)
    Q = R.quotient_by(xp)
    if Q.d != R.d - 1:
        raise NotSOP(f"dim R/({xp}) = {Q.d}, expected {R.d - 1}: not a parameter")
    validate_sop(Q, sop_quotient)
    c_r = csig_estimate(R, sop, e_range, search)
    c_q = csig_estimate(Q, sop_quotient, e_range, search)
    if tolerance is None:
        tolerance = max(c_r.residual, c_q.residual)
    passed = c_r.minimum >= c_q.minimum - tolerance
    return DeformationReport(R.name, Q.name, format_polynomial(xp), c_r, c_q,
                             Fraction(tolerance), passed)
