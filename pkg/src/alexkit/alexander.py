"""Fox calculus, Alexander matrices, elementary ideals, and polynomials.

The matrix of abelianized Fox derivatives of the relators presents the
Alexander module; its minor ideals give the elementary ideals and their
gcds the Alexander polynomials.  Matrices may also be loaded directly
(matrix mode) for groups specified by an Alexander matrix alone.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from .cyclofield import Character, CycloNumber, evaluate, rank_over_field
from .intlinalg import AbelianStructure, abelianization, induced_torus_point
from .laurent import (ComputationCapError, LaurentError, LaurentPoly,
                      _symbols, associates, divides, exact_div, gcd_many,
                      normalize, parse_poly, vanishing_order)
from .presentation import GroupPresentation, Word

MINOR_MATRIX_CAP = 8
MINOR_TERM_WARN = 10_000


class AlexanderError(ValueError):
    pass


@dataclass
class AlexanderMatrix:
    """h x m matrix over the Laurent ring, with provenance.

    `entries` live in the torsion-free quotient variables (num_vars of them).
    For matrices built from a presentation, `generator_entries` additionally
    hold the Fox derivatives abelianized only by generator exponents (one
    variable per generator), which is what character evaluation uses.
    """

    num_vars: int
    var_names: Tuple[str, ...]
    entries: List[List[LaurentPoly]]
    origin: str  # "presentation" | "matrix"
    presentation: Optional[GroupPresentation] = None
    abelian: Optional[AbelianStructure] = None
    generator_entries: Optional[List[List[LaurentPoly]]] = field(
        default=None, repr=False)

    @property
    def num_rows(self) -> int:
        return len(self.entries)

    @property
    def num_cols(self) -> int:
        return len(self.entries[0]) if self.entries else (
            self.presentation.num_generators if self.presentation else 0)

    def fox_identity_holds(self) -> bool:
        """Check sum_j entry(i,j)·(t^{phi(x_j)} − 1) = 0 for every row."""
        if self.origin != "presentation":
            raise AlexanderError("identity check applies to Fox matrices")
        n = self.num_vars
        cols = [LaurentPoly.monomial([row[j] for row in self.abelian.abf_projection])
                - LaurentPoly.one(n)
                for j in range(self.presentation.num_generators)]
        for row in self.entries:
            acc = LaurentPoly.zero(n)
            for entry, c in zip(row, cols):
                acc = acc + entry * c
            if not acc.is_zero():
                return False
        return True


# -- Fox derivatives --------------------------------------------------------


def _fox_row(r: Word, m: int) -> List[LaurentPoly]:
    """Abelianized Fox derivatives of one relator, in m generator variables."""
    out = [LaurentPoly.zero(m) for _ in range(m)]
    prefix = [0] * m  # exponent vector of the prefix, abelianized
    for g, e in r.letters:
        if e > 0:
            for k in range(e):
                exp = list(prefix)
                exp[g] += k
                out[g] = out[g] + LaurentPoly.monomial(exp)
        else:
            for k in range(1, -e + 1):
                exp = list(prefix)
                exp[g] -= k
                out[g] = out[g] - LaurentPoly.monomial(exp)
        prefix[g] += e
    return out


def _substitute_monomials(f: LaurentPoly,
                          projection: Sequence[Sequence[int]]) -> LaurentPoly:
    """Push exponent vectors through an integer matrix (variable change)."""
    n = len(projection)
    out = {}
    for exp, c in f.terms.items():
        new = tuple(sum(row[j] * exp[j] for j in range(len(exp)))
                    for row in projection)
        out[new] = out.get(new, Fraction(0)) + c
    return LaurentPoly(n, out)


def fox_matrix(p: GroupPresentation) -> AlexanderMatrix:
    """The Alexander matrix of a presentation over the torsion-free quotient."""
    ab = abelianization(p)
    m = p.num_generators
    gen_rows = [_fox_row(r, m) for r in p.relators]
    rows = [[_substitute_monomials(e, ab.abf_projection) for e in row]
            for row in gen_rows]
    from .laurent import default_names
    mat = AlexanderMatrix(
        num_vars=ab.rank,
        var_names=tuple(default_names(ab.rank)),
        entries=rows,
        origin="presentation",
        presentation=p,
        abelian=ab,
        generator_entries=gen_rows,
    )
    if not mat.fox_identity_holds():
        raise AlexanderError("Fox fundamental identity failed (internal bug)")
    return mat


def load_matrix(var_names: Sequence[str],
                rows: Sequence[Sequence[str]]) -> AlexanderMatrix:
    """Matrix-mode input: a grid of polynomial expressions.

    The Fox identity is not required (and not checked); the origin tag
    records the unverified provenance.
    """
    names = tuple(var_names)
    parsed: List[List[LaurentPoly]] = []
    width = None
    for row in rows:
        cur = [parse_poly(text, names) if isinstance(text, str) else text
               for text in row]
        if width is None:
            width = len(cur)
        elif len(cur) != width:
            raise AlexanderError("ragged rows in matrix input")
        parsed.append(cur)
    return AlexanderMatrix(
        num_vars=len(names),
        var_names=names,
        entries=parsed,
        origin="matrix",
        generator_entries=parsed,
    )


# -- minors and elementary ideals -------------------------------------------


def _det(rows: List[List[LaurentPoly]]) -> LaurentPoly:
    k = len(rows)
    if k == 0:
        return LaurentPoly.one(0)
    n = rows[0][0].nvars
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = LaurentPoly.zero(n)
    for i in range(k):
        if rows[i][0].is_zero():
            continue
        minor = [r[1:] for j, r in enumerate(rows) if j != i]
        term = rows[i][0] * _det(minor)
        acc = acc + term if i % 2 == 0 else acc - term
    return acc


def elementary_ideal_minors(mat: AlexanderMatrix, i: int) -> List[LaurentPoly]:
    """Generators (all minors of size m−i) of the i-th elementary ideal.

    Conventions: [1] when i ≥ m (ideal is the whole ring), [0] when the
    minor size exceeds the number of rows (zero ideal).
    """
    if i < 0:
        raise AlexanderError("elementary ideal index must be nonnegative")
    m = mat.num_cols
    h = mat.num_rows
    n = mat.num_vars
    size = m - i
    if size <= 0:
        return [LaurentPoly.one(n)]
    if size > h:
        return [LaurentPoly.zero(n)]
    if max(h, m) > MINOR_MATRIX_CAP:
        raise ComputationCapError(
            f"matrix size {h}x{m} exceeds minor cap {MINOR_MATRIX_CAP}")
    out = []
    for rsel in itertools.combinations(range(h), size):
        for csel in itertools.combinations(range(m), size):
            sub = [[mat.entries[r][c] for c in csel] for r in rsel]
            out.append(_det(sub))
    return out


def alexander_poly(mat: AlexanderMatrix, i: int = 1) -> LaurentPoly:
    """Δ_i: the gcd of the minors of the i-th elementary ideal, canonical."""
    if i < 1:
        raise AlexanderError("alexander_poly index must be >= 1")
    return gcd_many(elementary_ideal_minors(mat, i))


def delta_chain(mat: AlexanderMatrix, up_to: int) -> List[LaurentPoly]:
    return [alexander_poly(mat, i) for i in range(1, up_to + 1)]


# -- generic ranks ----------------------------------------------------------


def generic_rank_mod(mat: AlexanderMatrix, f: LaurentPoly) -> int:
    """Largest k such that some k x k minor of the matrix is not divisible
    by f (the rank at the generic point of V(f) for irreducible f).
    """
    if f.is_zero() or f.is_unit() or normalize(f).is_constant():
        raise AlexanderError("generic_rank_mod needs a nonzero non-unit f")
    h, m = mat.num_rows, mat.num_cols
    for k in range(min(h, m), 0, -1):
        for rsel in itertools.combinations(range(h), k):
            for csel in itertools.combinations(range(m), k):
                minor = _det([[mat.entries[r][c] for c in csel] for r in rsel])
                if minor.is_zero():
                    continue
                if not divides(f, minor):
                    return k
    return 0


# -- evaluation at characters -----------------------------------------------


def evaluate_matrix(mat: AlexanderMatrix, chi: Character):
    """Evaluate at a character with one value per generator (or per variable
    in matrix mode); returns a CycloNumber matrix."""
    entries = mat.generator_entries if mat.generator_entries is not None \
        else mat.entries
    width = len(entries[0]) if entries else 0
    if entries and len(chi) != entries[0][0].nvars:
        raise AlexanderError(
            f"character has {len(chi)} values, expected {entries[0][0].nvars}")
    return [[evaluate(e, chi.values) for e in row] for row in entries]


def evaluate_matrix_at_point(mat: AlexanderMatrix, point):
    """Evaluate the torsion-free-quotient entries at a torus point
    (num_vars coordinates)."""
    return [[evaluate(e, point) for e in row] for row in mat.entries]


# -- univariate invariant factors -------------------------------------------


def univariate_invariant_factors(mat: AlexanderMatrix) -> List[LaurentPoly]:
    """Nonzero Smith invariant factors over Q[t^±], ordered by divisibility."""
    if mat.num_vars != 1:
        raise AlexanderError("invariant factors require a univariate matrix")
    t = _symbols(1)[0]
    grid = []
    for row in mat.entries:
        grid.append([sympy.Poly(r._shifted()[1].to_sympy(), t, domain="QQ")
                     for r in row])
    factors = _poly_smith(grid, t)
    out = []
    for p in factors:
        lp = LaurentPoly.from_sympy(p.as_expr(), 1)
        if not lp.is_zero():
            out.append(normalize(lp))
    return out


def _poly_smith(grid, t):
    """Smith normal form diagonal over Q[t] (Euclidean by degree)."""
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    m = [[grid[i][j] for j in range(cols)] for i in range(rows)]
    diag = []
    top = 0
    while top < min(rows, cols):
        pivot = min(((i, j) for i in range(top, rows) for j in range(top, cols)
                     if not m[i][j].is_zero),
                    key=lambda ij: m[ij[0]][ij[1]].degree(), default=None)
        if pivot is None:
            break
        i0, j0 = pivot
        m[top], m[i0] = m[i0], m[top]
        for r in range(rows):
            m[r][top], m[r][j0] = m[r][j0], m[r][top]
        while True:
            changed = False
            for i in range(top + 1, rows):
                if not m[i][top].is_zero:
                    q, r = sympy.div(m[i][top], m[top][top], domain="QQ")
                    q = sympy.Poly(q, t, domain="QQ")
                    m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                    if not m[i][top].is_zero:
                        m[top], m[i] = m[i], m[top]
                        changed = True
            for j in range(top + 1, cols):
                if not m[top][j].is_zero:
                    q, r = sympy.div(m[top][j], m[top][top], domain="QQ")
                    q = sympy.Poly(q, t, domain="QQ")
                    for rr in range(rows):
                        m[rr][j] = m[rr][j] - q * m[rr][top]
                    if not m[top][j].is_zero:
                        for rr in range(rows):
                            m[rr][top], m[rr][j] = m[rr][j], m[rr][top]
                        changed = True
            if changed:
                continue
            bad = next(((i, j) for i in range(top + 1, rows)
                        for j in range(top + 1, cols)
                        if not sympy.rem(m[i][j], m[top][top], domain="QQ")
                        .is_zero), None)
            if bad is None:
                break
            m[top] = [a + b for a, b in zip(m[top], m[bad[0]])]
        diag.append(m[top][top])
        top += 1
    return diag


def elementary_divisor_exponents(invariant_factors: List[LaurentPoly],
                                 root) -> dict:
    """e_k(z): number of invariant factors with (t−z)-multiplicity exactly k."""
    if not isinstance(root, CycloNumber):
        root = CycloNumber.from_rational(root)
    out: dict = {}
    for f in invariant_factors:
        if normalize(f).is_constant():
            continue
        nu = vanishing_order(f, (root,))
        if nu > 0:
            out[nu] = out.get(nu, 0) + 1
    return out
