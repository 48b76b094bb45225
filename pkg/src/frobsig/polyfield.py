"""Prime fields, monomial orders and sparse polynomials over F_p.

Polynomials are stored as a mapping ``exponent tuple -> coefficient`` with
coefficients kept as plain ints in ``[0, p)``.  The mapping never contains
zero coefficients, so two polynomials over the same ring are equal exactly
when their mappings are equal.  The ordered, canonical term list is produced
on demand from the ring's monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Mapping, Sequence

from .errors import ArityError, DivisionByZero, ExponentOverflow

MAX_EXPONENT = 2**20
MAX_PRIME = 2**31

Monomial = tuple  # tuple[int, ...] of length n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def inverse_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse modulo {p}")
    r0, r1, s0, s1 = p, a, 0, 1
    while r1:
        quo = r0 // r1
        r0, r1 = r1, r0 - quo * r1
        s0, s1 = s1, s0 - quo * s1
    return s0 % p


# ---------------------------------------------------------------------------
# prime field

@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (2 <= self.p < MAX_PRIME) or not is_prime(self.p):
            raise ValueError(f"modulus must be a prime below 2^31, got {self.p}")

    def __call__(self, value: int) -> PrimeFieldElement:
        return PrimeFieldElement(value % self.p, self.p)

    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.p)

    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.p)

    def elements(self):
        return [PrimeFieldElement(v, self.p) for v in range(self.p)]


@total_ordering
@dataclass(frozen=True)
class PrimeFieldElement:
    """Residue class modulo ``p``; ``value`` is always reduced."""

    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement((self.value + b) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement((self.value - b) % self.p, self.p)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement((b - self.value) % self.p, self.p)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement((self.value * b) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value % self.p, self.p)

    def inverse(self) -> PrimeFieldElement:
        return PrimeFieldElement(inverse_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * PrimeFieldElement(inverse_mod(b, self.p), self.p)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElement(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


# ---------------------------------------------------------------------------
# monomial orders

def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative well-order on exponent vectors.

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"block"``.  The block order
    compares the first ``block`` variables by grevlex and breaks ties by
    grevlex on the remaining ones; it eliminates the front block.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise ValueError("block order needs a front block of size >= 1")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def elimination(cls, front: int):
        return cls("block", front)

    def key(self, m: Monomial) -> tuple:
        """Sort key; larger keys are larger monomials."""
        if self.kind == "grevlex":
            return _grevlex_key(m)
        if self.kind == "lex":
            return tuple(m)
        k = self.block
        return _grevlex_key(m[:k]) + _grevlex_key(m[k:])

    def heap_key(self, m: Monomial) -> tuple:
        """Key whose ascending order is the descending monomial order."""
        return tuple(-v for v in self.key(m))

    def compare(self, u: Monomial, v: Monomial) -> int:
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def __str__(self):
        return f"block({self.block})" if self.kind == "block" else self.kind


# ---------------------------------------------------------------------------
# monomial helpers

def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_div(u: Monomial, v: Monomial) -> Monomial:
    """u / v, assuming v divides u."""
    return tuple(a - b for a, b in zip(u, v))


def mono_divides(v: Monomial, u: Monomial) -> bool:
    return all(a <= b for a, b in zip(v, u))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_coprime(u: Monomial, v: Monomial) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(u, v))


def mono_degree(m: Monomial, weights: Sequence[int] | None = None) -> int:
    if weights is None:
        return sum(m)
    return sum(a * w for a, w in zip(m, weights))


# ---------------------------------------------------------------------------
# polynomial rings

@dataclass(frozen=True)
class PolyRing:
    """F_p[variables] with a fixed monomial order."""

    variables: tuple
    p: int
    order: MonomialOrder = MonomialOrder()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable names in {self.variables}")
        PrimeField(self.p)  # validates p

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    def with_order(self, order: MonomialOrder) -> PolyRing:
        return PolyRing(self.variables, self.p, order)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.n: int(c)})

    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.n)]

    def gen(self, i) -> Polynomial:
        if isinstance(i, str):
            i = self.variables.index(i)
        m = [0] * self.n
        m[i] = 1
        return Polynomial(self, {tuple(m): 1})

    def monomial(self, exponents: Sequence[int], coeff=1) -> Polynomial:
        if len(exponents) != self.n:
            raise ArityError(f"expected {self.n} exponents, got {len(exponents)}")
        return Polynomial(self, {tuple(exponents): int(coeff)})

    def from_terms(self, terms: Iterable) -> Polynomial:
        """Build from ``(coefficient, exponents)`` pairs; duplicates add up."""
        acc: dict = {}
        for c, m in terms:
            m = tuple(m)
            if len(m) != self.n:
                raise ArityError(f"expected {self.n} exponents, got {len(m)}")
            acc[m] = acc.get(m, 0) + int(c)
        return Polynomial(self, acc)

    def parse(self, text: str) -> Polynomial:
        from .parser import parse_polynomial

        return parse_polynomial(text, self)

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            return value.change_ring(self)
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(int(value))

    def __str__(self):
        return f"F_{self.p}[{', '.join(self.variables)}] ({self.order})"


class Polynomial:
    """Immutable sparse polynomial in canonical form."""

    __slots__ = ("ring", "_d", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, int], *, _clean=False):
        self.ring = ring
        if _clean:
            self._d = terms
        else:
            p = ring.p
            d = {}
            for m, c in terms.items():
                c %= p
                if c:
                    d[m] = c
            self._d = d
        self._hash = None

    # -- views ------------------------------------------------------------
    @property
    def terms(self) -> list[tuple[int, Monomial]]:
        """``(coefficient, exponents)`` pairs, strictly decreasing in the order."""
        key = self.ring.order.key
        return [(self._d[m], m) for m in sorted(self._d, key=key, reverse=True)]

    def as_dict(self) -> dict:
        return dict(self._d)

    def monomials(self) -> list[Monomial]:
        return [m for _, m in self.terms]

    def coefficient(self, m: Sequence[int]) -> int:
        return self._d.get(tuple(m), 0)

    def __len__(self):
        return len(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._d)

    @property
    def leading_monomial(self) -> Monomial:
        if not self._d:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._d, key=self.ring.order.key)

    @property
    def leading_coefficient(self) -> int:
        return self._d[self.leading_monomial]

    def degree(self, weights=None) -> int:
        if not self._d:
            return -1
        return max(mono_degree(m, weights) for m in self._d)

    def support(self) -> set[int]:
        """Indices of variables that occur."""
        return {i for m in self._d for i, a in enumerate(m) if a}

    def is_homogeneous(self, weights=None) -> bool:
        return len({mono_degree(m, weights) for m in self._d}) <= 1

    def monic(self) -> Polynomial:
        if not self._d:
            return self
        inv = inverse_mod(self.leading_coefficient, self.ring.p)
        return self * inv

    def change_ring(self, ring: PolyRing) -> Polynomial:
        if ring.n != self.ring.n or ring.p != self.ring.p:
            raise ArityError(f"cannot move {self} from {self.ring} to {ring}")
        return Polynomial(ring, self._d, _clean=True)

    # -- arithmetic -------------------------------------------------------
    def _lift(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ArityError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, PrimeFieldElement)):
            return self.ring.constant(int(other))
        return None

    def __add__(self, other):
        g = self._lift(other)
        if g is None:
            return NotImplemented
        p = self.ring.p
        d = dict(self._d)
        for m, c in g._d.items():
            v = (d.get(m, 0) + c) % p
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Polynomial(self.ring, d, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self._d.items()}, _clean=True)

    def __sub__(self, other):
        g = self._lift(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = self._lift(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def scale(self, c) -> Polynomial:
        c = int(c) % self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial(self.ring, {m: v * c % p for m, v in self._d.items()}, _clean=True)

    def mul_monomial(self, u: Monomial, c: int = 1) -> Polynomial:
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring, {mono_mul(m, u): v * c % p for m, v in self._d.items()}, _clean=True
        )

    def __mul__(self, other):
        if isinstance(other, (int, PrimeFieldElement)):
            return self.scale(int(other))
        g = self._lift(other)
        if g is None:
            return NotImplemented
        p = self.ring.p
        acc: dict = {}
        for m1, c1 in self._d.items():
            for m2, c2 in g._d.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return poly_power(self, k)

    def frobenius(self, e: int = 1) -> Polynomial:
        return frobenius_power(self, e)

    # -- comparison / display --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        if isinstance(other, int):
            return self._d == self.ring.constant(other)._d
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(f: Polynomial) -> str:
    """Render in the parser's grammar: ``3*x^2*y + z + 1``."""
    if f.is_zero():
        return "0"
    names = f.ring.variables
    out = []
    for c, m in f.terms:
        factors = []
        for name, a in zip(names, m):
            if a == 1:
                factors.append(name)
            elif a > 1:
                factors.append(f"{name}^{a}")
        if c != 1 or not factors:
            factors.insert(0, str(c))
        out.append("*".join(factors))
    return " + ".join(out)


def poly_power(f: Polynomial, k: int) -> Polynomial:
    """``f**k`` by binary exponentiation."""
    if k < 0:
        raise ValueError("negative powers are not polynomials")
    if f._d and k * max(max(m, default=0) for m in f._d) > MAX_EXPONENT:
        raise ExponentOverflow(f"exponent would exceed {MAX_EXPONENT}")
    result = f.ring.one()
    base = f
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def frobenius_power(f: Polynomial, e: int) -> Polynomial:
    """``f^(p^e)`` computed by scaling every exponent by ``q = p^e``.

    Valid because coefficients lie in F_p, where ``c^q = c``.
    """
    if e < 0:
        raise ValueError("Frobenius iterate must be nonnegative")
    q = f.ring.p ** e
    if f._d and q * max(max(m, default=0) for m in f._d) > MAX_EXPONENT:
        raise ExponentOverflow(f"q = {q} pushes exponents past {MAX_EXPONENT}")
    return Polynomial(f.ring, {tuple(a * q for a in m): c for m, c in f._d.items()}, _clean=True)
