"""Per-sector geometry of a linear action on affine space.

For each conjugacy class [g]: the fixed subspace V^g = ker(g - I), the
determinant character of the centralizer on the normal directions, the
restricted centralizer action on V^g, and two bigraded Hilbert series that
realize the derived fixed locus (Koszul side) and its shifted-tangent model.

Weight conventions: coordinates x_i carry weight 1 and so do the 1-forms dx_i
(equivalently the Koszul exterior generators); that choice is what makes the
two series below agree bidegree by bidegree.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from .exact import (QZERO, QONE, mat_det, mat_identity, mat_inv, mat_mul,
                    mat_rank, mat_sub, nullspace_basis, rref)
from .groups import matrix_key


def monomials(nvars, degree):
    """Exponent tuples of total degree `degree`, in a fixed deterministic order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for a in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - a):
            out.append((a,) + rest)
    return out


class Sector:
    """One twisted sector: class data plus the linear geometry of V^g."""

    __slots__ = ("class_ref", "n", "fixed_basis", "c_g", "det_normal_char",
                 "restricted_action")

    def __init__(self, class_ref, n, fixed_basis, c_g, det_normal_char,
                 restricted_action):
        self.class_ref = class_ref
        self.n = n
        self.fixed_basis = fixed_basis
        self.c_g = c_g
        self.det_normal_char = det_normal_char
        self.restricted_action = restricted_action

    @property
    def fixed_dim(self):
        return len(self.fixed_basis)

    def __repr__(self):
        return "Sector(f=%d, c=%d, class_size=%d)" % (
            self.fixed_dim, self.c_g, len(self.class_ref.members))


def build_sector(G, cls, complement=None):
    """Assemble the Sector of a conjugacy class.

    The normal complement is chosen from coordinate vectors off the pivot
    columns of the fixed basis unless an explicit column list is passed; the
    determinant character lives on the quotient V/V^g so the choice cannot
    matter (and a change-of-complement test holds it to that).
    """
    g = cls.representative
    n = G.n
    fixed = nullspace_basis(mat_sub(g, mat_identity(n)))
    f = len(fixed)
    c = n - f
    if complement is None:
        pivots = rref(fixed)[1] if fixed else []
        comp_cols = [j for j in range(n) if j not in set(pivots)]
    else:
        comp_cols = list(complement)
        if len(comp_cols) != c:
            raise ValueError("complement needs %d columns, got %d" % (c, len(comp_cols)))
    # basis change: columns are the fixed basis then the complement coordinates
    B = tuple(tuple(fixed[k][i] if k < f else
                    (QONE if i == comp_cols[k - f] else QZERO)
                    for k in range(n)) for i in range(n))
    Binv = mat_inv(B)  # NotInvertible here means the complement was not one
    restricted = {}
    charv = {}
    for h in cls.centralizer:
        M = mat_mul(mat_mul(Binv, h), B)
        for i in range(f, n):
            for j in range(f):
                if M[i][j]:
                    raise RuntimeError(
                        "centralizer element does not preserve the fixed subspace; "
                        "this is a bug, not bad input")
        restricted[matrix_key(h)] = tuple(tuple(M[i][j] for j in range(f))
                                          for i in range(f))
        quot = tuple(tuple(M[i][j] for j in range(f, n)) for i in range(f, n))
        charv[matrix_key(h)] = mat_det(quot)
    return Sector(cls, n, tuple(fixed), c, charv, restricted)


class KoszulReport:
    """Weight-graded homology dimensions, one row per homological degree."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    def row(self, p):
        return self.rows[p]

    def __eq__(self, other):
        return isinstance(other, KoszulReport) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "KoszulReport(%s)" % (list(map(list, self.rows)),)


def _koszul_boundary(L, p, d, n):
    # matrix of K_{p,d} -> K_{p-1,d}: multiply by the forms L rows, contract e_I
    src_mono = monomials(n, d - p)
    tgt_mono = monomials(n, d - p + 1)
    src_sub = list(combinations(range(n), p))
    tgt_sub = list(combinations(range(n), p - 1))
    tmono = {m: i for i, m in enumerate(tgt_mono)}
    tsub = {s: i for i, s in enumerate(tgt_sub)}
    rows = len(tgt_mono) * len(tgt_sub)
    cols = len(src_mono) * len(src_sub)
    M = [[QZERO] * cols for _ in range(rows)]
    for a, alpha in enumerate(src_mono):
        for b, I in enumerate(src_sub):
            col = a * len(src_sub) + b
            for r, i in enumerate(I):
                sign = QONE if r % 2 == 0 else -QONE
                rest = I[:r] + I[r + 1:]
                for j in range(n):
                    cij = L[i][j]
                    if cij:
                        beta = list(alpha)
                        beta[j] += 1
                        row = tmono[tuple(beta)] * len(tgt_sub) + tsub[rest]
                        M[row][col] += sign * cij
    return M, cols


def derived_fixed_hilbert(g, t_max):
    """Koszul homology of the n linear forms given by the rows of (g - I).

    Row p, column d is dim H_p in weight d, where the monomial x^a sits in
    weight |a| and each exterior generator adds 1.  For finite-order g this is
    the derived self-intersection along the g-twisted diagonal, weight by
    weight, with no Groebner machinery: one exact rank per bidegree.
    """
    g = matrix_key(g)
    n = len(g)
    L = mat_sub(g, mat_identity(n))
    ranks = {}
    for p in range(1, n + 1):
        for d in range(t_max + 1):
            if d - p < 0:
                ranks[(p, d)] = 0
                continue
            M, cols = _koszul_boundary(L, p, d, n)
            ranks[(p, d)] = mat_rank(M) if cols else 0
    rows = []
    for p in range(n + 1):
        row = []
        for d in range(t_max + 1):
            k = d - p
            dim = comb(n + k - 1, n - 1) * comb(n, p) if k >= 0 and n > 0 else (
                1 if k == 0 and p == 0 else 0)
            row.append(dim - ranks.get((p, d), 0) - ranks.get((p + 1, d), 0))
        rows.append(tuple(row))
    return KoszulReport(rows)


def shifted_tangent_hilbert(sector, t_max):
    """Bigraded dimensions of Sym(V^g dual) tensor Lambda^p(V^g dual).

    dx shifts the weight by one, so row p starts at weight p; rows above the
    fixed dimension vanish.  Padded to the ambient dimension so the report is
    comparable cell by cell with derived_fixed_hilbert.
    """
    f = sector.fixed_dim
    n = sector.n
    rows = []
    for p in range(n + 1):
        row = []
        for d in range(t_max + 1):
            k = d - p
            if p > f or k < 0:
                row.append(0)
            elif f == 0:
                row.append(1 if p == 0 and d == 0 else 0)
            else:
                row.append(comb(f, p) * comb(f - 1 + k, f - 1))
        rows.append(tuple(row))
    return KoszulReport(rows)
