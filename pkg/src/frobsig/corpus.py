"""Built-in corpus of rings with known invariants.

Each expected value records how it is known in ``source``:
``"closed-form"`` (a known formula for the family),
``"hand-count"`` (worked out by hand or by an independent count) or
``"trivial"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .config import JobConfig
from .invariants import (
    SearchConfig,
    chain_check,
    csig_estimate,
    fsig_hypersurface,
    hk_sequence,
    relative_hk,
    rsig_estimate,
)


@dataclass(frozen=True)
class Expectation:
    quantity: str     # hk_m, relative_hk_m, csig, rsig, fsig, type, strict_gap
    mode: str         # limit | every_e | e1 | exact
    value: object
    tolerance: Fraction = Fraction(0)
    source: str = "hand-count"
    remark: str = ""


@dataclass
class CorpusEntry:
    name: str
    config: JobConfig
    expectations: list = field(default_factory=list)
    description: str = ""


def _cfg(**kw) -> JobConfig:
    return JobConfig(**kw)


CORPUS = [
    CorpusEntry(
        "regular2",
        _cfg(name="regular2", p=2, vars=["x", "y"], sop=["x", "y"], task="csig", e_max=4),
        [
            Expectation("hk_m", "every_e", Fraction(1), source="trivial"),
            Expectation("csig", "every_e", Fraction(1), source="closed-form",
                        remark="csig = 1 exactly for regular rings"),
            Expectation("rsig", "every_e", Fraction(1), source="trivial"),
            Expectation("type", "exact", 1, source="trivial"),
        ],
        "polynomial ring F_2[x, y]",
    ),
    CorpusEntry(
        "veronese2",
        _cfg(name="veronese2", p=2, vars=["a", "b", "c"], relations=["b^2 - a*c"],
             sop=["a", "c"], task="csig", e_max=4),
        [
            Expectation("hk_m", "e1", Fraction(3, 2), source="hand-count",
                        remark="6 standard monomials over q^2 = 4"),
            Expectation("hk_m", "limit", Fraction(3, 2), Fraction(1, 10), "closed-form",
                        "e_HK(m) = (n+1)/2 for the n-th Veronese of k[x, y]"),
            Expectation("csig", "e1", Fraction(1, 2), source="hand-count", remark="(8 - 6)/4"),
            Expectation("csig", "limit", Fraction(1, 2), Fraction(1, 20), "closed-form"),
            Expectation("rsig", "limit", Fraction(1, 2), Fraction(1, 10), "closed-form",
                        "rsig = 1 - 1/n with n = 2"),
            Expectation("type", "exact", 1, source="hand-count"),
        ],
        "second Veronese subring of F_2[x, y]",
    ),
    CorpusEntry(
        "veronese3",
        _cfg(name="veronese3", p=2, vars=["a", "b", "c", "d"],
             relations=["b^2 - a*c", "c^2 - b*d", "b*c - a*d"], sop=["a", "d"],
             task="chain", e_max=3),
        [
            Expectation("csig", "limit", Fraction(1, 2), Fraction(1, 10), "closed-form"),
            Expectation("rsig", "limit", Fraction(2, 3), Fraction(1, 10), "closed-form",
                        "rsig = 1 - 1/n with n = 3; over F_2 an upper bound"),
            Expectation("strict_gap", "exact", True, source="closed-form",
                        remark="csig < rsig for Veronese subrings"),
            Expectation("type", "exact", 2, source="hand-count"),
        ],
        "third Veronese subring of F_2[x, y]",
    ),
    CorpusEntry(
        "a1-hypersurface",
        _cfg(name="a1-hypersurface", p=2, vars=["a", "b", "c"], relations=["b^2 - a*c"],
             sop=["a", "c"], task="fsig", e_max=4),
        [
            Expectation("fsig", "limit", Fraction(1, 2), Fraction(1, 10), "closed-form",
                        "Gorenstein: F-signature equals csig = 1/2"),
            Expectation("fsig_minus_csig", "limit", Fraction(0), Fraction(1, 10), "closed-form"),
        ],
        "A1 surface singularity b^2 = ac",
    ),
    CorpusEntry(
        "cusp",
        _cfg(name="cusp", p=2, vars=["x", "y"], relations=["y^2 - x^3"], sop=["x"],
             weights=[2, 3], task="csig", e_max=5),
        [
            Expectation("relative_hk_m", "every_e", Fraction(0), source="hand-count",
                        remark="l(R/(x^q, y^q)) = 2q = l(R/(x^q))"),
            Expectation("csig", "every_e", Fraction(0), source="hand-count"),
            Expectation("rsig", "every_e", Fraction(0), source="hand-count"),
        ],
        "cusp y^2 = x^3 (not F-rational)",
    ),
]


def corpus_names() -> list[str]:
    return [c.name for c in CORPUS]


def get_entry(name: str) -> CorpusEntry:
    for c in CORPUS:
        if c.name == name:
            return c
    raise KeyError(f"unknown corpus entry {name!r}; known: {', '.join(corpus_names())}")


@dataclass
class CheckResult:
    entry: str
    quantity: str
    mode: str
    expected: object
    observed: object
    tolerance: Fraction
    source: str
    passed: bool


class _Lazy:
    """Per-entry cache so each report is computed once."""

    def __init__(self, entry: CorpusEntry, e_max: int | None, search: SearchConfig):
        self.cfg = entry.config
        self.e = e_max or self.cfg.e_max
        self.search = search
        self.R = self.cfg.ring()
        self._cache = {}

    def get(self, key):
        if key not in self._cache:
            self._cache[key] = getattr(self, "_" + key)()
        return self._cache[key]

    def _hk_m(self):
        return hk_sequence(self.R, self.R.maximal_ideal(), self.e)

    def _relative_hk_m(self):
        return relative_hk(self.R, self.cfg.sop, self.R.maximal_ideal(), self.e)

    def _csig(self):
        return csig_estimate(self.R, self.cfg.sop, self.e, self.search)

    def _rsig(self):
        return rsig_estimate(self.R, self.cfg.sop, self.e, self.search)

    def _fsig(self):
        return fsig_hypersurface(self.R.ring, self.R.relations[0], self.e)

    def _chain(self):
        return chain_check(self.R, self.cfg.sop, self.e, self.search)


def _observe(lazy: _Lazy, exp: Expectation):
    q = exp.quantity
    if q == "type":
        return len(lazy.get("csig").socle)
    if q == "strict_gap":
        return lazy.get("csig").minimum < lazy.get("rsig").minimum
    if q == "fsig_minus_csig":
        return lazy.get("fsig").minimum - lazy.get("csig").minimum
    rep = lazy.get(q)
    if q == "hk_m":
        rows = [r.normalized for r in rep.rows]
        limit = rep.extrapolated
    elif q == "relative_hk_m":
        rows, limit = rep.values, rep.extrapolated
    else:
        rows, limit = rep.per_e_minimum, rep.minimum
    if exp.mode == "limit":
        return limit
    if exp.mode == "e1":
        return rows[0]
    if exp.mode == "every_e":
        return rows
    raise ValueError(f"bad mode {exp.mode!r} for {q}")


def _compare(exp: Expectation, observed) -> bool:
    if exp.mode == "every_e":
        return all(abs(Fraction(v) - exp.value) <= exp.tolerance for v in observed)
    if isinstance(exp.value, Fraction):
        return abs(Fraction(observed) - exp.value) <= exp.tolerance
    return observed == exp.value


def corpus_run(name: str = "all", e_max: int | None = None,
               search: SearchConfig | None = None) -> list[CheckResult]:
    """Evaluate every expectation of one entry (or all) and report pass/fail."""
    entries = CORPUS if name == "all" else [get_entry(name)]
    results = []
    for entry in entries:
        s = search or SearchConfig(entry.config.max_subspaces, entry.config.seed)
        lazy = _Lazy(entry, e_max, s)
        for exp in entry.expectations:
            obs = _observe(lazy, exp)
            results.append(CheckResult(entry.name, exp.quantity, exp.mode, exp.value, obs,
                                       exp.tolerance, exp.source, _compare(exp, obs)))
    return results


def entry_config(name: str, **overrides) -> JobConfig:
    return replace(get_entry(name).config, **overrides)
