"""Exact arithmetic in cyclotomic fields Q(ζ_N), and linear algebra over them.

A CycloNumber is a polynomial in ζ_N with rational coefficients, reduced
mod Φ_N.  No complex embedding is chosen: ζ_N is the class of t in
Q[t]/(Φ_N), which is all that exact ranks and vanishing orders need.
Mixed-conductor arithmetic lifts both operands to the lcm conductor.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence

from .laurent import ComputationCapError, LaurentPoly, _euler_phi, normalize

CONDUCTOR_CAP = 240


class CycloError(ValueError):
    pass


@lru_cache(maxsize=None)
def _phi_coeffs(n: int) -> tuple:
    """Integer coefficients of Φ_n, ascending degree."""
    # divide t^n - 1 by the product of Φ_d over proper divisors d of n
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, list(_phi_coeffs(d)))
    return tuple(num)


def _polydiv_exact(num, den):
    num = [Fraction(x) for x in num]
    den = [Fraction(x) for x in den]
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] / den[-1]
        out[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
        while num and num[-1] == 0:
            num.pop()
    return [int(x) for x in out]


def cyclotomic_poly(n: int) -> LaurentPoly:
    """Φ_n as a univariate LaurentPoly."""
    if n < 1:
        raise CycloError("conductor must be positive")
    coeffs = _phi_coeffs(n)
    return LaurentPoly(1, {(i,): c for i, c in enumerate(coeffs) if c})


def _reduce(coeffs: List[Fraction], n: int) -> tuple:
    """Reduce a coefficient list mod Φ_n to degree < φ(n)."""
    phi = list(_phi_coeffs(n))
    deg = len(phi) - 1
    coeffs = list(coeffs)
    while len(coeffs) > deg:
        c = coeffs.pop()
        if c:
            shift = len(coeffs) - deg
            for i in range(deg):
                coeffs[shift + i] -= c * phi[i]
    while len(coeffs) < deg:
        coeffs.append(Fraction(0))
    return tuple(coeffs)


class CycloNumber:
    """An element of Q(ζ_N), reduced mod Φ_N."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence):
        if conductor < 1:
            raise CycloError("conductor must be positive")
        if conductor > CONDUCTOR_CAP:
            raise ComputationCapError(
                f"conductor {conductor} exceeds cap {CONDUCTOR_CAP}")
        self.conductor = conductor
        self.coeffs = _reduce([Fraction(c) for c in coeffs], conductor)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "CycloNumber":
        return cls(1, [Fraction(q)])

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "CycloNumber":
        """ζ_n^k."""
        if n < 1:
            raise CycloError("order must be positive")
        k %= n
        g = math.gcd(k, n) if k else n
        order = n // g if k else 1
        kk = k // g if k else 0
        coeffs = [Fraction(0)] * (kk + 1)
        coeffs[kk] = Fraction(1)
        return cls(order, coeffs)

    def ring_one(self) -> "CycloNumber":
        return CycloNumber(self.conductor, [Fraction(1)])

    # -- basics ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self == CycloNumber.from_rational(1)

    def as_rational(self) -> Optional[Fraction]:
        """The value as a Fraction when it lies in Q, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0] if self.coeffs else Fraction(0)
        return None

    def _lift(self, n: int) -> "CycloNumber":
        """Rewrite in Q(ζ_n), where conductor | n."""
        if n == self.conductor:
            return self
        step = n // self.conductor
        out = [Fraction(0)] * (len(self.coeffs) * step + 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] += c
        return CycloNumber(n, out)

    def _pair(self, other) -> tuple:
        if not isinstance(other, CycloNumber):
            other = CycloNumber.from_rational(other)
        n = math.lcm(self.conductor, other.conductor)
        return self._lift(n), other._lift(n)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        return CycloNumber(a.conductor,
                           [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        return CycloNumber(a.conductor,
                           [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1 or 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    out[i + j] += x * y
        return CycloNumber(a.conductor, out)

    __rmul__ = __mul__

    def scale(self, q) -> "CycloNumber":
        q = Fraction(q)
        return CycloNumber(self.conductor, [c * q for c in self.coeffs])

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # extended Euclid of (self, Φ_N) over Q[t]
        phi = [Fraction(c) for c in _phi_coeffs(self.conductor)]
        a = list(self.coeffs)
        while a and a[-1] == 0:
            a.pop()
        r0, r1 = phi, a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        # r0 is the gcd (a nonzero constant, since Φ_N is irreducible)
        c = r0[0]
        inv = [x / c for x in s0]
        return CycloNumber(self.conductor, inv)

    def __truediv__(self, other):
        a, b = self._pair(other)
        return a * b.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloNumber(self.conductor, [Fraction(1)])
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_rational(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equality lifts conductors; not usable as a dict key

    def __repr__(self):
        return f"CycloNumber(zeta{self.conductor}: {list(self.coeffs)})"

    def multiplicative_order(self, bound: int) -> Optional[int]:
        """Smallest d ≤ bound with self^d = 1, or None."""
        acc = self.ring_one()
        for d in range(1, bound + 1):
            acc = acc * self
            if acc.is_one():
                return d
        return None


def _polydivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b):
        if a and a[-1] == 0:
            a.pop()
            continue
        if len(a) < len(b):
            break
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for i in range(len(b)):
            a[shift + i] -= c * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _polymul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _polysub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    while out and out[-1] == 0:
        out.pop()
    return out


def common_conductor(values: Sequence[CycloNumber]) -> List[CycloNumber]:
    n = math.lcm(*(v.conductor for v in values)) if values else 1
    if n > CONDUCTOR_CAP:
        raise ComputationCapError(f"conductor {n} exceeds cap {CONDUCTOR_CAP}")
    return [v._lift(n) for v in values]


# -- characters -------------------------------------------------------------


class Character:
    """A tuple of nonzero cyclotomic values, one per generator (or variable)."""

    def __init__(self, values: Sequence[CycloNumber]):
        vals = []
        for v in values:
            if not isinstance(v, CycloNumber):
                v = CycloNumber.from_rational(v)
            if v.is_zero():
                raise CycloError("character values must be nonzero")
            vals.append(v)
        self.values = tuple(vals)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def is_trivial(self) -> bool:
        return all(v.is_one() for v in self.values)

    def __repr__(self):
        return f"Character({list(self.values)})"


_VALUE = re.compile(
    r"^\s*(?:(?P<mult>-?\d+(?:/\d+)?)\s*\*\s*)?"
    r"(?:(?P<zeta>zeta(?P<n>\d+))(?:\^(?P<k>-?\d+))?|(?P<rat>-?\d+(?:/\d+)?))\s*$")


def parse_character(text: str, names: Sequence[str]) -> Character:
    """Parse `name=value, ...` with values rational or zetaN^k."""
    assignments = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise CycloError(f"bad character assignment {chunk!r}")
        name, value = chunk.split("=", 1)
        name = name.strip()
        if name not in names:
            raise CycloError(f"unknown name {name!r} in character")
        m = _VALUE.match(value)
        if not m:
            raise CycloError(f"bad character value {value!r}")
        if m.group("zeta"):
            n = int(m.group("n"))
            k = int(m.group("k") or 1)
            val = CycloNumber.root_of_unity(n, k)
        else:
            val = CycloNumber.from_rational(Fraction(m.group("rat")))
        if m.group("mult"):
            val = val.scale(Fraction(m.group("mult")))
        assignments[name] = val
    missing = [n for n in names if n not in assignments]
    if missing:
        raise CycloError(f"character missing values for {missing}")
    return Character([assignments[n] for n in names])


# -- evaluation and exact rank ----------------------------------------------


def evaluate(f: LaurentPoly, point) -> CycloNumber:
    """Exact value of f at a tuple of nonzero cyclotomic coordinates."""
    if isinstance(point, Character):
        point = point.values
    vals = [v if isinstance(v, CycloNumber) else CycloNumber.from_rational(v)
            for v in point]
    if len(vals) != f.nvars:
        raise CycloError("point has wrong number of coordinates")
    if any(v.is_zero() for v in vals):
        raise CycloError("evaluation needs nonzero coordinates")
    vals = common_conductor(vals)
    one = vals[0].ring_one() if vals else CycloNumber.from_rational(1)
    acc = CycloNumber.from_rational(0)
    for exp, c in f.terms.items():
        term = one.scale(c)
        for v, e in zip(vals, exp):
            if e:
                term = term * (v ** e)
        acc = acc + term
    return acc


def rank_over_field(matrix: Sequence[Sequence[CycloNumber]]) -> int:
    """Exact rank via Gaussian elimination with exact zero tests."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    col = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows)
                      if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(nrows):
            if i != rank and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def euler_phi(m: int) -> int:
    return _euler_phi(m)
