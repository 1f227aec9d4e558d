"""Exact arithmetic kernels.

Arbitrary-precision rationals (stdlib Fraction), cyclotomic fields Q(zeta_m)
in the power basis mod Phi_m, dense linear algebra over exact fields, truncated
bigraded series, and integer Smith normal form.  Every value is immutable after
construction; every function is pure.
"""

from fractions import Fraction
import re

QZERO = Fraction(0)
QONE = Fraction(1)


class BadRational(ValueError):
    """String is not of the form p or p/q with integer p and positive integer q."""


class NotInvertible(ZeroDivisionError):
    """A matrix inverse was requested and the determinant vanishes."""


class ConductorMismatch(ValueError):
    """Arithmetic on cyclotomics with different conductors; embed first."""


# rationals -----------------------------------------------------------------

_RATIONAL_RE = re.compile(r"[+-]?[0-9]+(/[0-9]+)?\Z")


def parse_rational(text):
    """Parse "p" or "p/q" (decimal integers, optional sign on p) exactly.

    >>> parse_rational("-6/4")
    Fraction(-3, 2)
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise BadRational("expected 'p' or 'p/q' with integer entries, got %r" % (text,))
    s = text.strip()
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise BadRational("zero denominator in %r" % (text,))
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(q):
    # Fraction already prints normalized p/q with q > 0, or bare p
    return str(q)


# cyclotomic polynomials ----------------------------------------------------

def _divisors(m):
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def _poly_exact_div(num, den):
    # long division by a monic integer polynomial; remainder must vanish
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dn]
        out[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


_PHI_CACHE = {}


def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, lowest degree first.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError("conductor must be positive")
    if m in _PHI_CACHE:
        return _PHI_CACHE[m]
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m):
        if d < m:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    _PHI_CACHE[m] = tuple(poly)
    return _PHI_CACHE[m]


_POWER_CACHE = {}


def _zeta_powers(m, upto):
    """Coordinate vectors of z^0, ..., z^upto reduced mod Phi_m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    # z^deg = -(phi_0 + phi_1 z + ... + phi_{deg-1} z^{deg-1}), phi is monic
    top = tuple(Fraction(-c) for c in phi[:deg])
    tab = _POWER_CACHE.setdefault(m, [])
    if not tab:
        tab.append((QONE,) + (QZERO,) * (deg - 1))
    while len(tab) <= upto:
        prev = tab[-1]
        nxt = [QZERO] * deg
        for j in range(deg - 1):
            nxt[j + 1] = prev[j]
        if prev[deg - 1]:
            for j in range(deg):
                nxt[j] += prev[deg - 1] * top[j]
        tab.append(tuple(nxt))
    return tab


class Cyclotomic:
    """Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}.

    Coordinates are always reduced mod Phi_m, so two elements of the same
    conductor are equal iff their coordinate tuples are equal.
    """

    __slots__ = ("m", "coords")

    def __init__(self, m, coords):
        deg = len(cyclotomic_polynomial(m)) - 1
        cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coords)
        if len(cs) != deg:
            raise ValueError("conductor %d needs %d coordinates, got %d" % (m, deg, len(cs)))
        self.m = m
        self.coords = cs

    @classmethod
    def from_rational(cls, m, q):
        deg = len(cyclotomic_polynomial(m)) - 1
        return cls(m, (Fraction(q),) + (QZERO,) * (deg - 1))

    @classmethod
    def zero(cls, m):
        return cls.from_rational(m, 0)

    @classmethod
    def one(cls, m):
        return cls.from_rational(m, 1)

    @classmethod
    def zeta(cls, m, k=1):
        """zeta_m^k.

        >>> Cyclotomic.zeta(4) * Cyclotomic.zeta(4) == -1
        True
        """
        k %= m
        return cls(m, _zeta_powers(m, k)[k])

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.m != self.m:
                raise ConductorMismatch("conductors %d and %d" % (self.m, other.m))
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.m, other)
        return None

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.m, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.m, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.m, tuple(a * other for a in self.coords))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        deg = len(self.coords)
        conv = [QZERO] * (2 * deg - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(o.coords):
                if b:
                    conv[i + j] += a * b
        tab = _zeta_powers(self.m, 2 * deg - 2)
        out = [QZERO] * deg
        for k, c in enumerate(conv):
            if c:
                pw = tab[k]
                for j in range(deg):
                    out[j] += c * pw[j]
        return Cyclotomic(self.m, out)

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse; Phi_m is irreducible so any nonzero element works."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.m)
        phi = UniPoly(tuple(Fraction(c) for c in cyclotomic_polynomial(self.m)))
        f = UniPoly(self.coords)
        g, _, v = _poly_ext_gcd(phi, f)
        # g = u*phi + v*f is a nonzero constant, so (v/g)*f = 1 mod phi
        c = g.coeffs[0]
        _, rem = (v.scale(QONE / c)).divmod(phi)
        deg = len(self.coords)
        coords = list(rem.coeffs) + [QZERO] * (deg - len(rem.coeffs))
        return Cyclotomic(self.m, coords)

    def __truediv__(self, other):
        if isinstance(other, int):
            return self * Fraction(1, other)
        if isinstance(other, Fraction):
            return self * (QONE / other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = Cyclotomic.one(self.m)
        for _ in range(k):
            out = out * self
        return out

    def is_rational(self):
        return not any(self.coords[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("not a rational value: %r" % (self,))
        return self.coords[0]

    def embed(self, big_m):
        """Image in Q(zeta_M) for m | M, via zeta_m = zeta_M^(M/m)."""
        if big_m % self.m != 0:
            raise ConductorMismatch("%d does not divide %d" % (self.m, big_m))
        step = big_m // self.m
        out = Cyclotomic.zero(big_m)
        for j, c in enumerate(self.coords):
            if c:
                out = out + c * Cyclotomic.zeta(big_m, j * step)
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if isinstance(other, Cyclotomic):
            if other.m == self.m:
                return self.coords == other.coords
            return (self.is_rational() and other.is_rational()
                    and self.coords[0] == other.coords[0])
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.m, self.coords))

    def __repr__(self):
        return "Cyclotomic(%d, %s)" % (self.m, [str(c) for c in self.coords])


def cyclotomic_arith(a, b, op):
    """add / mul / inv in Q(zeta_m); operands must share a conductor (inv ignores b)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    raise ValueError("op must be one of add, mul, inv")


# univariate polynomials ----------------------------------------------------

class UniPoly:
    """Dense univariate polynomial over an exact field, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if not self or not other:
            return UniPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def scale(self, c):
        return UniPoly(tuple(a * c for a in self.coeffs))

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= dn:
            return UniPoly(()), UniPoly(rem)
        quo = [QZERO] * (len(rem) - dn)
        for k in range(len(quo) - 1, -1, -1):
            c = rem[k + dn] / lead
            quo[k] = c
            if c:
                for i, dc in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * dc
        return UniPoly(quo), UniPoly(rem)

    def __repr__(self):
        return "UniPoly(%s)" % (list(self.coeffs),)


def _poly_ext_gcd(a, b):
    # returns (g, u, v) with u*a + v*b = g
    r0, r1 = a, b
    u0, u1 = UniPoly((QONE,)), UniPoly(())
    v0, v1 = UniPoly(()), UniPoly((QONE,))
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return r0, u0, v0


# dense linear algebra over an exact field ----------------------------------
# Entries are Fractions or Cyclotomics (any type with exact +,-,*,/ and
# truthiness as the zero test).  Plain ints are lifted to Fraction on entry.

def _lift(x):
    return Fraction(x) if isinstance(x, int) else x


def mat_identity(n, one=QONE):
    zero = one - one
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(A, B):
    if A and len(A[0]) != len(B):
        raise ValueError("shape mismatch")
    return tuple(tuple(sum((_lift(A[i][k]) * _lift(B[k][j]) for k in range(len(B))), QZERO)
                       for j in range(len(B[0]) if B else 0))
                 for i in range(len(A)))


def mat_add(A, B):
    return tuple(tuple(_lift(a) + _lift(b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(A, c):
    return tuple(tuple(_lift(a) * c for a in row) for row in A)


def mat_sub(A, B):
    return mat_add(A, mat_scale(B, -1))

def mat_trace(A):
    return sum((_lift(A[i][i]) for i in range(len(A))), QZERO)


def transpose(A):
    if not A:
        return ()
    return tuple(tuple(A[i][j] for i in range(len(A))) for j in range(len(A[0])))


def mat_vec(A, v):
    return tuple(sum((_lift(A[i][j]) * _lift(v[j]) for j in range(len(v))), QZERO)
                 for i in range(len(A)))


def rref(A):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [[_lift(x) for x in row] for row in A]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def mat_rank(A):
    return len(rref(A)[1])


def nullspace_basis(A):
    """Echelon basis of {v : Av = 0}; deterministic, one vector per free column."""
    if not A:
        return []
    ncols = len(A[0])
    rows, pivots = rref(A)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [QZERO] * ncols
        v[f] = QONE
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def linear_solve(A, b):
    """One solution of A x = b with free variables zeroed, or None if none exists."""
    if not A:
        return ()
    ncols = len(A[0])
    aug = [list(A[i]) + [b[i]] for i in range(len(A))]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [QZERO] * ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][ncols]
    return tuple(x)


def mat_inv(A):
    """Inverse by Gauss-Jordan; raises NotInvertible on singular input."""
    n = len(A)
    rows = [[_lift(x) for x in A[i]] + [QONE if i == j else QZERO for j in range(n)]
            for i in range(n)]
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, n):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            raise NotInvertible("matrix is singular")
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return tuple(tuple(row[n:]) for row in rows)


def mat_det(A):
    """Determinant by fraction-free-enough elimination (field entries)."""
    n = len(A)
    if n == 0:
        return QONE
    rows = [[_lift(x) for x in row] for row in A]
    det = QONE
    for c in range(n):
        pr = None
        for i in range(c, n):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            return QZERO
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def elementary_symmetric(M):
    """e_0, ..., e_n of the eigenvalues of M via the Faddeev-LeVerrier recursion."""
    n = len(M)
    M = tuple(tuple(_lift(x) for x in row) for row in M)
    coeffs = [QONE]
    B = mat_identity(n)
    for k in range(1, n + 1):
        B = mat_mul(M, B)
        c = -mat_trace(B) / k
        coeffs.append(c)
        B = mat_add(B, mat_scale(mat_identity(n), c))
    # char poly of M is sum coeffs[k] x^{n-k}, so e_k = (-1)^k coeffs[k]
    return tuple(coeffs[k] if k % 2 == 0 else -coeffs[k] for k in range(n + 1))


def eigenspace(g, zeta):
    """Exact basis of ker(g - zeta*I) for a square rational matrix g.

    zeta may be an int, Fraction, or Cyclotomic; rational matrix entries are
    lifted into zeta's field.  The direct sum over all eigenvalues in
    mu_{ord(g)} recovers the ambient space.
    """
    n = len(g)
    if isinstance(zeta, Cyclotomic):
        lift = lambda q: Cyclotomic.from_rational(zeta.m, q)
    else:
        zeta = Fraction(zeta)
        lift = Fraction
    A = []
    for i in range(n):
        row = [lift(_lift(g[i][j])) for j in range(n)]
        row[i] = row[i] - zeta
        A.append(row)
    return nullspace_basis(A)


# truncated bigraded series --------------------------------------------------

class BiSeries:
    """Bigraded coefficient table: polynomial in u, series in t cut at t_max.

    rows[p][d] is the coefficient of u^p t^d, 0 <= p <= u_max, 0 <= d <= t_max.
    Sums and products truncate consistently in t; u degrees add.
    """

    __slots__ = ("u_max", "t_max", "rows")

    def __init__(self, u_max, t_max, rows):
        rs = tuple(tuple(_lift(x) for x in row) for row in rows)
        if len(rs) != u_max + 1 or any(len(r) != t_max + 1 for r in rs):
            raise ValueError("rows must form a (u_max+1) x (t_max+1) rectangle")
        self.u_max = u_max
        self.t_max = t_max
        self.rows = rs

    @classmethod
    def zero(cls, u_max, t_max):
        return cls(u_max, t_max, [[QZERO] * (t_max + 1) for _ in range(u_max + 1)])

    @classmethod
    def one(cls, t_max):
        return cls(0, t_max, [[QONE] + [QZERO] * t_max])

    def coeff(self, p, d):
        if d < 0 or d > self.t_max:
            raise ValueError("t-degree %d outside truncation %d" % (d, self.t_max))
        if p < 0 or p > self.u_max:
            return QZERO
        return self.rows[p][d]

    def row(self, p):
        if p > self.u_max:
            return (QZERO,) * (self.t_max + 1)
        return self.rows[p]

    def pad_u(self, u_max):
        if u_max < self.u_max:
            raise ValueError("cannot shrink u_max")
        rows = list(self.rows) + [(QZERO,) * (self.t_max + 1)] * (u_max - self.u_max)
        return BiSeries(u_max, self.t_max, rows)

    def shift_u(self, k):
        """Multiply by u^k: prepend k zero rows."""
        rows = [(QZERO,) * (self.t_max + 1)] * k + list(self.rows)
        return BiSeries(self.u_max + k, self.t_max, rows)

    def __add__(self, other):
        if self.t_max != other.t_max:
            raise ValueError("t truncations differ")
        u = max(self.u_max, other.u_max)
        a, b = self.pad_u(u), other.pad_u(u)
        return BiSeries(u, self.t_max,
                        [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)])

    def scale(self, c):
        return BiSeries(self.u_max, self.t_max,
                        [[x * c for x in row] for row in self.rows])

    def __mul__(self, other):
        if self.t_max != other.t_max:
            raise ValueError("t truncations differ")
        u = self.u_max + other.u_max
        out = [[QZERO] * (self.t_max + 1) for _ in range(u + 1)]
        for p1, r1 in enumerate(self.rows):
            for d1, c1 in enumerate(r1):
                if not c1:
                    continue
                for p2, r2 in enumerate(other.rows):
                    for d2 in range(0, self.t_max + 1 - d1):
                        c2 = r2[d2]
                        if c2:
                            out[p1 + p2][d1 + d2] += c1 * c2
        return BiSeries(u, self.t_max, out)

    def __eq__(self, other):
        return (isinstance(other, BiSeries) and self.u_max == other.u_max
                and self.t_max == other.t_max and self.rows == other.rows)

    def __hash__(self):
        return hash((self.u_max, self.t_max, self.rows))

    def __repr__(self):
        return "BiSeries(u_max=%d, t_max=%d, %s)" % (
            self.u_max, self.t_max, [[str(c) for c in row] for row in self.rows])


def _field_inv(x):
    if isinstance(x, Cyclotomic):
        return x.inv()
    return QONE / x


def _invert_series(a, t_max):
    # 1 / (a[0] + a[1] t + ...) truncated; a[0] must be a unit
    b = [QZERO] * (t_max + 1)
    b[0] = _field_inv(a[0])
    for d in range(1, t_max + 1):
        s = QZERO
        for k in range(1, min(d, len(a) - 1) + 1):
            if a[k]:
                s = s + a[k] * b[d - k]
        b[d] = -(b[0] * s)
    return b


def det_series_factor(M, t_max, sign="plus", marker="ut", reciprocal=False):
    """Truncated expansion of det(I +- marker*M), or of 1/det(I - t*M).

    marker "ut" places the k-th elementary symmetric function at u^k t^k,
    marker "t" at t^k, marker "u" at u^k with no t-power (the exterior-power
    generating polynomial).  reciprocal=True requires sign "minus", marker "t"
    and returns the geometric-series inverse, exact to t_max.

    >>> det_series_factor(((QONE,),), 3, sign="minus", reciprocal=True, marker="t").row(0)
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))
    """
    n = len(M)
    e = elementary_symmetric(M)
    if reciprocal:
        if sign != "minus" or marker != "t":
            raise ValueError("reciprocal mode expands 1/det(I - t*M)")
        denom = [(e[k] if k % 2 == 0 else -e[k]) if k <= n else QZERO
                 for k in range(t_max + 1)]
        return BiSeries(0, t_max, [_invert_series(denom, t_max)])
    s = QONE if sign == "plus" else -QONE
    if marker == "t":
        row = [e[k] * s ** k if k <= n else QZERO for k in range(t_max + 1)]
        return BiSeries(0, t_max, [row])
    if marker == "ut":
        u = n
        out = [[QZERO] * (t_max + 1) for _ in range(u + 1)]
        for k in range(min(n, t_max) + 1):
            out[k][k] = e[k] * s ** k
        return BiSeries(u, t_max, out)
    if marker == "u":
        out = [[QZERO] * (t_max + 1) for _ in range(n + 1)]
        for k in range(n + 1):
            out[k][0] = e[k] * s ** k
        return BiSeries(n, t_max, out)
    raise ValueError("marker must be one of t, ut, u")


# integer matrices and Smith normal form ------------------------------------

class IntMatrix:
    """Dense rectangular matrix of exact integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        es = tuple(tuple(int(x) for x in row) for row in entries)
        if es and any(len(r) != len(es[0]) for r in es):
            raise ValueError("ragged rows")
        self.entries = es
        self.rows = len(es)
        self.cols = len(es[0]) if es else 0

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "IntMatrix(%s)" % (list(map(list, self.entries)),)


def smith_normal_form(M):
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.

    Ordinary elementary row/column operations, pivoting on the least nonzero
    absolute value; the matrices here are tiny so no modular tricks.

    >>> smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    (2, 2, 156)
    """
    entries = M.entries if isinstance(M, IntMatrix) else M
    A = [list(map(int, row)) for row in entries]
    R = len(A)
    C = len(A[0]) if A else 0
    factors = []
    t = 0
    while t < min(R, C):
        best = None
        for i in range(t, R):
            for j in range(t, C):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        A[t], A[bi] = A[bi], A[t]
        for row in A:
            row[t], row[bj] = row[bj], row[t]
        while True:
            if A[t][t] < 0:
                A[t] = [-x for x in A[t]]
            piv = A[t][t]
            moved = False
            for i in range(t + 1, R):
                if A[i][t]:
                    q = A[i][t] // piv
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, C):
                if A[t][j]:
                    q = A[t][j] // piv
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if moved:
                continue
            # pivot must divide the trailing block for d_i | d_{i+1}
            off = None
            for i in range(t + 1, R):
                for j in range(t + 1, C):
                    if A[i][j] % piv:
                        off = i
                        break
                if off is not None:
                    break
            if off is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[off])]
        factors.append(A[t][t])
        t += 1
    return tuple(factors)
