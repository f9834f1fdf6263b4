"""Closed-form invariants of Seifert links from their fiber weights.

A Seifert link is described by pairwise coprime multiplicities
k_1..k_n of the singular fibers with the first q fibers taken as the
link components.  The Alexander polynomial, the divisor structure of
its zero set, and the twisted ranks at torsion points all have exact
closed forms in the single variable u = t_1^{N_1} ... t_q^{N_q}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .cyclofield import CycloNumber, common_conductor
from .laurent import LaurentPoly, exact_div, normalize


class SeifertError(ValueError):
    pass


@dataclass(frozen=True)
class SpliceData:
    """Fiber weights k_1..k_n (pairwise coprime) with the first q as link
    components; trivial weights in the tail are sorted last."""

    weights: Tuple[int, ...]
    q: int

    def __post_init__(self):
        k = self.weights
        n = len(k)
        if n < 3:
            raise SeifertError("need at least three weights")
        if not (2 <= self.q <= n):
            raise SeifertError("q must satisfy 2 <= q <= n")
        if any(x < 1 for x in k):
            raise SeifertError("weights must be positive integers")
        for i in range(n):
            for j in range(i + 1, n):
                if math.gcd(k[i], k[j]) != 1:
                    raise SeifertError("weights not pairwise coprime")
        tail = sorted(k[self.q:], reverse=True)
        object.__setattr__(self, "weights", tuple(k[:self.q]) + tuple(tail))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def big_n(self) -> int:
        return math.prod(self.weights[:self.q])

    def n_j(self, j: int) -> int:
        """N_j = N / k_j for a link component (0-based j < q)."""
        return self.big_n // self.weights[j]

    @property
    def big_n_prime(self) -> int:
        return math.prod(self.weights[self.q:]) if self.n > self.q else 1

    def n_prime_j(self, j: int) -> int:
        """N'_j = N' / k_j for a non-component fiber (0-based j >= q)."""
        return self.big_n_prime // self.weights[j]

    @property
    def s(self) -> int:
        return sum(1 for x in self.weights[self.q:] if x > 1)


def _u_power_minus_one(k: int) -> LaurentPoly:
    return LaurentPoly.monomial([k]) - LaurentPoly.one(1)


def seifert_delta(d: SpliceData) -> LaurentPoly:
    """The link's Alexander polynomial in t_1..t_q.

    Computed as [u^{N'} - 1]^{q+s-2} divided by the u^{N'_j} - 1 of the
    nontrivial non-component fibers, then u substituted by the monomial
    t_1^{N_1} ... t_q^{N_q}; the division is exact by construction.
    """
    q, s = d.q, d.s
    expo = q + s - 2
    num = _u_power_minus_one(d.big_n_prime) ** expo if expo > 0 \
        else LaurentPoly.one(1)
    for j in range(q, q + s):
        quot = exact_div(num, _u_power_minus_one(d.n_prime_j(j)))
        if quot is None:
            raise SeifertError("inexact divisor division (internal bug)")
        num = quot
    # substitute u -> t1^{N_1} ... tq^{N_q}
    exps = [d.n_j(j) for j in range(q)]
    out = LaurentPoly.zero(q)
    for (e,), c in num.terms.items():
        out = out + LaurentPoly.monomial([x * e for x in exps], c)
    return normalize(out) if not out.is_zero() else out


@dataclass(frozen=True)
class DivisorComponent:
    """Zero-set component u = zeta with zeta of exact order root_order;
    all primitive roots of that order share the multiplicity."""

    root_order: int
    multiplicity: int


def _mult_at_order(d: SpliceData, order: int) -> int:
    hits = sum(1 for j in range(d.q, d.q + d.s)
               if d.n_prime_j(j) % order == 0)
    return (d.q + d.s - 2) - hits


def seifert_divisor(d: SpliceData) -> List[DivisorComponent]:
    """Components of the polynomial's zero set with their multiplicities,
    one entry per exact root order dividing N'."""
    out = []
    np = d.big_n_prime
    for order in sorted(k for k in range(1, np + 1) if np % k == 0):
        m = _mult_at_order(d, order)
        if m > 0:
            out.append(DivisorComponent(order, m))
    return out


def seifert_twisted_betti(d: SpliceData,
                          rho: Sequence[CycloNumber]) -> int:
    """Predicted twisted rank at a character on the link components.

    The character only matters through alpha = rho_1^{N_1}...rho_q^{N_q};
    off the divisor (alpha^{N'} != 1) the rank is zero, on it the rank is
    the component multiplicity, cross-checked against the orbifold count.
    """
    vals = list(rho)
    if len(vals) != d.q:
        raise SeifertError(f"expected {d.q} character values")
    if all(v.is_one() for v in vals):
        raise SeifertError("trivial character excluded")
    alpha = CycloNumber.from_rational(1)
    for j in range(d.q):
        alpha = alpha * (vals[j] ** d.n_j(j))
    if not (alpha ** d.big_n_prime).is_one():
        return 0
    order = alpha.multiplicative_order(d.big_n_prime)
    if order is None:
        return 0
    m = _mult_at_order(d, order)
    # independent orbifold-Euler count
    i_alpha = sum(1 for j in range(d.q, d.q + d.s)
                  if (alpha ** d.n_prime_j(j)).is_one())
    if m != (d.q - 2) + d.s - i_alpha:
        raise SeifertError("multiplicity disagrees with orbifold count "
                           "(internal bug)")
    return max(m, 0)
