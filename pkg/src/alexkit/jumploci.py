"""Twisted Betti ranks, jump-locus membership, and multiplicity bounds.

A rank-one local system is a character of the group; its first twisted
Betti number is computed from the Alexander matrix evaluated at the
character.  Bounds compare that rank with multiplicities and vanishing
orders of the factors of the Alexander polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from .alexander import (AlexanderMatrix, elementary_divisor_exponents,
                        evaluate_matrix, univariate_invariant_factors)
from .cyclofield import (Character, CycloNumber, cyclotomic_poly, evaluate,
                         rank_over_field)
from .intlinalg import induced_torus_point, validate_character
from .laurent import (FactoredPoly, LaurentPoly, associates, factor_poly,
                      multiplicity, normalize, vanishing_order)
from .presentation import GroupPresentation


class JumpLociError(ValueError):
    pass


class BoundInconsistencyError(JumpLociError):
    """A proven upper bound was exceeded: indicates bad input assertions."""


def _check_character(mat: AlexanderMatrix, rho: Character) -> None:
    if mat.origin == "presentation":
        if not validate_character(mat.presentation, rho):
            raise JumpLociError("character does not respect the relators")
    else:
        if len(rho) != mat.num_vars:
            raise JumpLociError(
                f"character has {len(rho)} values, matrix has "
                f"{mat.num_vars} variables")


def twisted_betti(mat: AlexanderMatrix, rho: Character) -> int:
    """b1 of the group with coefficients twisted by the character rho.

    The trivial character gives the untwisted rank n; otherwise the rank
    drops to m - 1 - rank of the evaluated Alexander matrix.
    """
    _check_character(mat, rho)
    if rho.is_trivial():
        return mat.num_vars
    if mat.num_rows == 0:
        return mat.num_cols - 1
    return mat.num_cols - 1 - rank_over_field(evaluate_matrix(mat, rho))


def cv_membership(mat: AlexanderMatrix, rho: Character, k: int) -> bool:
    """Membership of rho in the depth-k jump locus: b1(G, rho) >= k."""
    if k < 1:
        raise JumpLociError("depth must be a positive integer")
    return twisted_betti(mat, rho) >= k


def torus_point(mat: AlexanderMatrix, rho: Character):
    """Coordinates of rho on the identity component of the character torus,
    or None when rho does not factor through the torsion-free quotient."""
    _check_character(mat, rho)
    if mat.origin == "presentation":
        return induced_torus_point(mat.abelian, rho)
    return list(rho.values)


APStatus = Tuple[str, Optional[str]]  # ("Yes"|"Unknown", reason)


def almost_principal_status(p: GroupPresentation,
                            asserted: Optional[str] = None) -> APStatus:
    """Sufficient conditions for the first elementary ideal to be almost
    principal; Unknown when none applies."""
    from .intlinalg import abelianization
    if abelianization(p).rank == 1:
        return ("Yes", "b1=1")
    if p.num_generators - p.num_relators >= 1:
        return ("Yes", "deficiency>0")
    if asserted:
        return ("Yes", f"user-asserted: {asserted}")
    return ("Unknown", None)


@dataclass
class BettiReport:
    rho: Character
    b1: int
    bound_pointwise: Optional[int]
    bound_generic: Optional[int]
    almost_principal: APStatus
    attained: bool
    lower_confidence: bool = False

    def as_dict(self, names: Sequence[str]) -> dict:
        status, reason = self.almost_principal
        return {
            "b1": self.b1,
            "bound_pointwise": self.bound_pointwise,
            "bound_generic": self.bound_generic,
            "almost_principal": status if reason is None
            else f"{status} ({reason})",
            "attained": self.attained,
            "lower_confidence": self.lower_confidence,
        }


def bounds_report(mat: AlexanderMatrix, factored: FactoredPoly,
                  rho: Character,
                  almost_principal: Optional[APStatus] = None) -> BettiReport:
    """Compare b1(G, rho) with the multiplicity-weighted vanishing orders
    of the Alexander polynomial factors at rho.

    When the first elementary ideal is known almost principal and rho is a
    nontrivial point of the identity component, the pointwise sum is a
    proven upper bound; a violation raises BoundInconsistencyError.
    """
    if rho.is_trivial():
        raise JumpLociError("bounds require a nontrivial character")
    if factored.constant == 0:
        raise JumpLociError("bounds undefined for zero Alexander polynomial")
    b1 = twisted_betti(mat, rho)
    point = torus_point(mat, rho)
    if almost_principal is None:
        if mat.origin == "presentation":
            almost_principal = almost_principal_status(mat.presentation)
        else:
            almost_principal = ("Unknown", None)
    if point is None:
        # off the identity component: vanishing orders do not apply
        return BettiReport(rho, b1, None, None, almost_principal, False)
    lower_confidence = False
    bound = 0
    on_components = []
    for f, mu, _ in factored.resolved_factors:
        nu = vanishing_order(f, point)
        bound += mu * nu
        if nu > 0:
            on_components.append((f, mu))
    if factored.unresolved_remainder is not None:
        bound += vanishing_order(factored.unresolved_remainder, point)
        lower_confidence = True
    bound_generic = on_components[0][1] if len(on_components) == 1 else None
    attained = (b1 == bound)
    if almost_principal[0] == "Yes" and b1 > bound:
        raise BoundInconsistencyError(
            f"b1 = {b1} exceeds the proven bound {bound} at a nontrivial "
            "character; the almost-principal assertion must be wrong")
    return BettiReport(rho, b1, bound, bound_generic, almost_principal,
                       attained, lower_confidence)


# -- roots of univariate factors --------------------------------------------


def _factor_root(f: LaurentPoly):
    """A representative root of a univariate irreducible factor as an exact
    cyclotomic value: rational for linear factors, a root of unity for
    cyclotomic factors, None otherwise."""
    g = normalize(f)
    deg = max(e[0] for e in g.terms)
    if deg == 1:
        a = g.terms.get((1,), Fraction(0))
        b = g.terms.get((0,), Fraction(0))
        return CycloNumber.from_rational(-b / a)
    for m in _orders_of_degree(deg):
        if g == normalize(cyclotomic_poly(m)):
            return CycloNumber.root_of_unity(m, 1)
    return None


def _orders_of_degree(deg: int):
    from .laurent import _euler_phi
    return [m for m in range(1, 2 * deg * deg + 2) if _euler_phi(m) == deg]


@dataclass
class RootEquality:
    root_text: str
    root: Optional[CycloNumber]
    mu: int
    b1: int
    equality: bool
    all_ek_zero_above_1: bool


def semisimple_equality_report(mat: AlexanderMatrix,
                               factored: FactoredPoly) -> List[RootEquality]:
    """Per root z of the univariate Alexander polynomial: does b1(G, z)
    reach the multiplicity of the corresponding factor?

    Equality is equivalent to the (t-z)-primary part of the module being
    semisimple, i.e. every elementary divisor at z has exponent one.  The
    rank is read off the invariant factors (number of them vanishing at z)
    and cross-checked against the evaluated matrix when a presentation is
    available.
    """
    if mat.num_vars != 1:
        raise JumpLociError("semisimple analysis requires one variable")
    if not factored.resolved_factors and factored.unresolved_remainder is None:
        raise JumpLociError("constant Alexander polynomial: no roots")
    inv = univariate_invariant_factors(mat)
    out = []
    for f, mu, _ in factored.resolved_factors:
        root = _factor_root(f)
        if root is None or root.is_one():
            continue
        ek = elementary_divisor_exponents(inv, root)
        b1 = sum(ek.values())
        all_simple = all(k <= 1 for k in ek)
        equality = (b1 == mu)
        if equality != all_simple:
            raise JumpLociError(
                "invariant-factor structure disagrees with the multiplicity "
                "comparison (internal bug)")
        if mat.origin == "presentation":
            chi = _character_at(mat, root)
            if chi is not None and twisted_betti(mat, chi) != b1:
                raise JumpLociError(
                    "twisted rank disagrees with invariant factors "
                    "(internal bug)")
        out.append(RootEquality(f.render(("t",)), root, mu, b1, equality,
                                all_simple))
    return out


def _character_at(mat: AlexanderMatrix, value: CycloNumber):
    """The character on the generators induced by t -> value on the
    one-dimensional torsion-free quotient."""
    row = mat.abelian.abf_projection[0]
    try:
        vals = [value ** int(a) for a in row]
    except ZeroDivisionError:
        return None
    return Character(vals)


# -- integer monodromy -------------------------------------------------------


@dataclass
class MonodromyReport:
    delta: LaurentPoly
    factored: FactoredPoly
    semisimple: bool
    equalities: List[RootEquality]


def monodromy_analysis(h: Sequence[Sequence[int]]) -> MonodromyReport:
    """Mapping-torus analysis of an integer monodromy matrix.

    The Alexander polynomial is the characteristic polynomial; for each
    irreducible factor the twisted rank at its roots is the geometric
    multiplicity, and global semisimplicity is equivalent to every
    algebraic multiplicity being attained.
    """
    m = sympy.Matrix([[int(x) for x in row] for row in h])
    if m.rows != m.cols:
        raise JumpLociError("monodromy matrix must be square")
    size = m.rows
    if (m - sympy.eye(size)).det() == 0:
        raise JumpLociError("1 is an eigenvalue of the monodromy")
    from .laurent import _symbols
    char = m.charpoly().as_expr(_symbols(1)[0])
    delta = LaurentPoly.from_sympy(sympy.expand(char), 1)
    factored = factor_poly(delta)
    equalities = []
    semisimple = True
    for f, mu, _ in factored.resolved_factors:
        g = normalize(f)
        deg = max(e[0] for e in g.terms)
        pm = sympy.zeros(size, size)
        for e, c in g.terms.items():
            pm += sympy.Rational(c.numerator, c.denominator) * m ** e[0]
        geometric = (size - pm.rank()) // deg
        equality = (geometric == mu)
        if not equality:
            semisimple = False
        equalities.append(RootEquality(
            f.render(("t",)), _factor_root(f), mu, geometric, equality,
            equality))
    return MonodromyReport(delta, factored, semisimple, equalities)
