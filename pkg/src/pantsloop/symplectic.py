"""
Exact symplectic linear algebra over the rationals.

Lagrangians of handlebodies live in ``H_1(Σ; Q)`` with the standard form
``psi(a_i, b_j) = delta_ij``.  The Maslov triple index is the signature of
the symmetric form

    theta(x, y) = psi(x1, y2) + psi(x2, y3) + psi(x3, y1)
                - psi(x2, y1) - psi(x3, y2) - psi(x1, y3)

on ``L1 + L2 + L3`` (direct sum).  With this convention
``M(span a, span b, span a+b) = -1`` on the torus.
"""

from dataclasses import dataclass
from fractions import Fraction


class SymplecticError(ValueError):
    pass


def psi(x, y):
    """Standard symplectic pairing of two coordinate vectors (a-part then b-part)."""
    g = len(x) // 2
    return sum(x[i] * y[g + i] - x[g + i] * y[i] for i in range(g))


def rref(rows):
    """Reduced row echelon form (exact) with zero rows dropped."""
    m = [[Fraction(v) for v in r] for r in rows]
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r])


def rank(rows):
    return len(rref(rows)) if rows else 0


@dataclass(frozen=True)
class LagrangianSubspace:
    """A Lagrangian of ``H_1(Σ; Q)``, stored by its reduced echelon basis."""

    genus: int
    rows: tuple  # g basis vectors of length 2g, in reduced row echelon form

    @property
    def basis_matrix(self):
        """The 2g x g matrix whose columns span the subspace."""
        return [[r[i] for r in self.rows] for i in range(2 * self.genus)]

    def contains(self, v):
        return rank(list(self.rows) + [tuple(v)]) == self.genus

    def serialize(self):
        return ";".join(" ".join(f"{x.numerator}/{x.denominator}" for x in r) for r in self.rows)


def lagrangian_from_vectors(genus, vectors):
    rows = rref([tuple(v) for v in vectors]) if vectors else ()
    if len(rows) != genus:
        raise SymplecticError(f"classes span rank {len(rows)}, expected {genus}")
    for u in rows:
        for v in rows:
            if psi(u, v) != 0:
                raise SymplecticError("classes are not isotropic")
    return LagrangianSubspace(genus, rows)


def lagrangian_of(p, basis=None):
    """Span of the homology classes of a decomposition's curves."""
    from .curves import homology_class

    if basis is not None and basis.genus != p.genus:
        raise SymplecticError("basis lives on a different surface")
    classes = [homology_class(c) for c in p.curves]
    return lagrangian_from_vectors(p.genus, [v for v in classes if any(v)])


def signature_of_symmetric_form(m):
    """Positive minus negative inertia, by exact congruence diagonalisation."""
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise SymplecticError("matrix must be square")
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise SymplecticError("matrix must be symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j makes the diagonal entry 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / d
            if f:
                for k in active:
                    a[i][k] -= f * a[piv][k]
        for i in active:
            a[i][piv] = a[piv][i] = Fraction(0)
    return pos - neg


def theta_matrix(l1, l2, l3):
    blocks = [l1.rows, l2.rows, l3.rows]
    plus = {(0, 1), (1, 2), (2, 0)}
    basis = [(b, v) for b, rows in enumerate(blocks) for v in rows]
    mat = []
    for bi, x in basis:
        row = []
        for bj, y in basis:
            if bi == bj:
                row.append(Fraction(0))
            elif (bi, bj) in plus:
                row.append(Fraction(psi(x, y)))
            else:
                row.append(Fraction(-psi(x, y)))
        mat.append(row)
    return mat


def maslov(l1, l2, l3):
    """Maslov triple index of three Lagrangians."""
    if not (l1.genus == l2.genus == l3.genus):
        raise SymplecticError("dimension mismatch")
    return signature_of_symmetric_form(theta_matrix(l1, l2, l3))

