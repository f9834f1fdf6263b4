"""Integer matrix normal forms and abelianization structure.

Smith normal form with unimodular transforms is the workhorse: it yields
the abelianization (rank, torsion invariants) of a presentation and the
projection matrix onto the maximal torsion-free abelian quotient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .cyclofield import Character, CycloError, CycloNumber
from .presentation import GroupPresentation


def _identity(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: Sequence[Sequence[int]]):
    """(U, D, V) with U, V unimodular and D = U·M·V in Smith form.

    D is diagonal with nonnegative entries d_1 | d_2 | ...; zero rows/columns
    are allowed (D has the same shape as M).
    """
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)

    def row_op(i, j, c):  # row_i += c * row_j
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        u[i] = [a + c * b for a, b in zip(u[i], u[j])]

    def col_op(i, j, c):  # col_i += c * col_j
        for r in range(rows):
            m[r][i] += c * m[r][j]
        for r in range(cols):
            v[r][i] += c * v[r][j]

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in range(rows):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def row_negate(i):
        m[i] = [-a for a in m[i]]
        u[i] = [-a for a in u[i]]

    t = 0
    while t < min(rows, cols):
        # locate a pivot: smallest nonzero entry in the remaining block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (pivot is None or
                                     abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])
        if m[t][t] < 0:
            row_negate(t)
        while True:
            # reduce column t; a nonzero remainder becomes the new pivot
            changed = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    row_op(i, t, -(m[i][t] // m[t][t]))
                    if m[i][t] != 0:
                        row_swap(t, i)
                        changed = True
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    col_op(j, t, -(m[t][j] // m[t][t]))
                    if m[t][j] != 0:
                        col_swap(t, j)
                        changed = True
            if changed:
                if m[t][t] < 0:
                    row_negate(t)
                continue
            # divisibility: d_t must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, rows)
                        for j in range(t + 1, cols)
                        if m[i][j] % m[t][t] != 0), None)
            if bad is None:
                break
            row_op(t, bad[0], 1)
        t += 1
    return u, m, v


@dataclass(frozen=True)
class AbelianStructure:
    """Abelianization data: rank, torsion invariants, and the projection
    matrix sending generator j to its image in Z^rank."""

    rank: int
    torsion: Tuple[int, ...]
    abf_projection: Tuple[Tuple[int, ...], ...]  # rank x m


def abelianization(p: GroupPresentation) -> AbelianStructure:
    """Structure of G_ab and the projection onto G_ab/Tors."""
    m = p.num_generators
    exponent = p.exponent_matrix()
    if not exponent:
        exponent = [[0] * m] if m else []
    if m == 0:
        return AbelianStructure(0, (), ())
    _, d, v = smith_normal_form(exponent)
    diag = [d[i][i] for i in range(min(len(d), m))] if d else []
    r = sum(1 for x in diag if x != 0)
    torsion = tuple(x for x in diag if x >= 2)
    # generators map through columns r..m-1 of V
    projection = tuple(tuple(v[j][k] for j in range(m))
                       for k in range(r, m))
    return AbelianStructure(m - r, torsion, projection)


def validate_character(p: GroupPresentation, chi: Character) -> bool:
    """True iff chi respects every relator (factors through G_ab)."""
    if len(chi) != p.num_generators:
        raise CycloError("character length does not match generator count")
    for vec in p.exponent_matrix():
        acc = CycloNumber.from_rational(1)
        for val, e in zip(chi.values, vec):
            if e:
                acc = acc * (val ** e)
        if not acc.is_one():
            return False
    return True


def induced_torus_point(ab: AbelianStructure,
                        chi: Character) -> Optional[List[CycloNumber]]:
    """Coordinates y with y^(A column j) = chi_j for all j, if chi factors
    through the torsion-free quotient; None otherwise."""
    a = [list(row) for row in ab.abf_projection]
    n = len(a)
    m = len(chi)
    if n == 0:
        return [] if all(v.is_one() for v in chi.values) else None
    u, d, v = smith_normal_form(a)
    # A is surjective over Z, so d has 1s on the diagonal
    # solve y^A = chi: set chi' = chi^V, z_i = chi'_i, y = z^U
    chi_prime = []
    for i in range(m):
        acc = CycloNumber.from_rational(1)
        for j in range(m):
            if v[j][i]:
                acc = acc * (chi[j] ** v[j][i])
        chi_prime.append(acc)
    for i in range(n):
        if d[i][i] != 1:
            return None
    # consistency: coordinates past n must be trivial
    for i in range(n, m):
        if not chi_prime[i].is_one():
            return None
    z = chi_prime[:n]
    y = []
    for i in range(n):
        acc = CycloNumber.from_rational(1)
        for k in range(n):
            if u[k][i]:
                acc = acc * (z[k] ** u[k][i])
        y.append(acc)
    return y
