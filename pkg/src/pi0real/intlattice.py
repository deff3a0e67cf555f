"""Exact arithmetic on integer and rational lattices.

A lattice here is the row span over ZZ of an integer basis matrix, scaled
by a single positive denominator: L = (1/denom) * rowspan(basis).  The
constructor canonicalizes (Hermite form, reduced denominator), so equal
point sets compare equal as Python objects.

Everything is exact.  Matrices are tuples of tuples of Python ints,
vectors are tuples of ints or fractions.Fraction; no floating point
anywhere.  Quotient structure is computed two independent ways: through
Smith normal form (quotient_structure) and through explicit coset
enumeration (brute_force_quotient), so each can serve as an oracle for
the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

IntMatrix = tuple[tuple[int, ...], ...]
Vector = tuple[Fraction, ...]


class LatticeError(ValueError):
    """Base error for lattice arithmetic."""


class DimensionMismatch(LatticeError):
    """Operands live in different ambient spaces."""


class NotASublattice(LatticeError):
    """A claimed sublattice containment does not hold."""


class InfiniteIndex(LatticeError):
    """Coset enumeration was requested for an infinite quotient."""


class BoundExceeded(LatticeError):
    """Coset enumeration ran past its configured bound."""


# ---------------------------------------------------------------------------
# integer matrix plumbing


def as_int_matrix(rows, ncols: int | None = None) -> IntMatrix:
    """Freeze rows into a rectangular integer matrix, validating entries."""
    out = []
    width = ncols
    for row in rows:
        t = tuple(row)
        if width is None:
            width = len(t)
        if len(t) != width:
            raise LatticeError("ragged matrix")
        for x in t:
            if not isinstance(x, int):
                raise LatticeError(f"non-integer matrix entry {x!r}")
        out.append(t)
    return tuple(out)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m) -> tuple[tuple, ...]:
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b):
    """Matrix product; entries may be ints or Fractions."""
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    """Apply the matrix a to a column vector, returned as a tuple."""
    if a and len(v) != len(a[0]):
        raise DimensionMismatch("matrix/vector size mismatch")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c):
    return tuple(tuple(c * x for x in row) for row in a)


def block_diag(a, b):
    """Block-diagonal join of two square matrices."""
    n, m = len(a), len(b)
    top = tuple(tuple(row) + (0,) * m for row in a)
    bot = tuple((0,) * n + tuple(row) for row in b)
    return top + bot


def det(m) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def vec_frac(v) -> Vector:
    return tuple(Fraction(x) for x in v)


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(v, c):
    return tuple(c * x for x in v)


# ---------------------------------------------------------------------------
# Hermite normal form


def _row_sub(r, s, q):
    for j in range(len(r)):
        r[j] -= q * s[j]


def _hermite(rows: list[list[int]], track: bool):
    """In-place row Hermite reduction.

    Returns (rows, u, rank) where rows is in echelon form with positive
    pivots, entries above each pivot reduced into [0, pivot), and all
    zero rows collected at the bottom.  When track is true, u is a
    unimodular matrix with u * input = rows.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if track else None
    piv = 0
    for col in range(ncols):
        if piv == nrows:
            break
        if all(rows[i][col] == 0 for i in range(piv, nrows)):
            continue
        while True:
            best = min(
                (i for i in range(piv, nrows) if rows[i][col] != 0),
                key=lambda i: abs(rows[i][col]),
            )
            if best != piv:
                rows[piv], rows[best] = rows[best], rows[piv]
                if track:
                    u[piv], u[best] = u[best], u[piv]
            p = rows[piv][col]
            dirty = False
            for i in range(piv + 1, nrows):
                if rows[i][col]:
                    q = rows[i][col] // p
                    if q:
                        _row_sub(rows[i], rows[piv], q)
                        if track:
                            _row_sub(u[i], u[piv], q)
                    if rows[i][col]:
                        dirty = True
            if not dirty:
                break
        if rows[piv][col] < 0:
            rows[piv][:] = [-x for x in rows[piv]]
            if track:
                u[piv][:] = [-x for x in u[piv]]
        p = rows[piv][col]
        for i in range(piv):
            q = rows[i][col] // p
            if q:
                _row_sub(rows[i], rows[piv], q)
                if track:
                    _row_sub(u[i], u[piv], q)
        piv += 1
    return rows, u, piv


def hnf(m, ncols: int | None = None) -> IntMatrix:
    """Canonical row Hermite normal form, zero rows removed.

    The row span is preserved exactly; no content is extracted, so a
    single row stays itself up to sign normalization.
    """
    mat = as_int_matrix(m, ncols)
    rows = [list(r) for r in mat]
    rows, _, piv = _hermite(rows, track=False)
    return tuple(tuple(r) for r in rows[:piv])


def hnf_with_transform(m, ncols: int | None = None):
    """Hermite form keeping zero rows, plus the unimodular row transform.

    Returns (h, u, rank) with u * m == h; the rows of u below rank form a
    basis of the integer left kernel of m.
    """
    mat = as_int_matrix(m, ncols)
    rows = [list(r) for r in mat]
    rows, u, piv = _hermite(rows, track=True)
    return (
        tuple(tuple(r) for r in rows),
        tuple(tuple(r) for r in u),
        piv,
    )


def left_kernel_basis(m, ncols: int | None = None) -> IntMatrix:
    """Basis of {x integer row : x * m == 0}."""
    _, u, rank = hnf_with_transform(m, ncols)
    return u[rank:]


# ---------------------------------------------------------------------------
# Smith normal form


def _smith(mat: IntMatrix, nrows: int, ncols: int):
    a = [list(r) for r in mat]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    vinv = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_sub(i, j, q):
        _row_sub(a[i], a[j], q)
        _row_sub(u[i], u[j], q)

    def col_sub(j, i, q):
        # column j -= q * column i; inverse transform tracked on rows
        for t in range(nrows):
            a[t][j] -= q * a[t][i]
        for t in range(ncols):
            v[t][j] -= q * v[t][i]
        for t in range(ncols):
            vinv[i][t] += q * vinv[j][t]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for t in range(nrows):
            a[t][i], a[t][j] = a[t][j], a[t][i]
        for t in range(ncols):
            v[t][i], v[t][j] = v[t][j], v[t][i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def row_neg(i):
        a[i][:] = [-x for x in a[i]]
        u[i][:] = [-x for x in u[i]]

    s = 0
    m = min(nrows, ncols)
    while s < m:
        pos = None
        for i in range(s, nrows):
            for j in range(s, ncols):
                if a[i][j] and (pos is None or abs(a[i][j]) < abs(a[pos[0]][pos[1]])):
                    pos = (i, j)
        if pos is None:
            break
        if pos[0] != s:
            row_swap(s, pos[0])
        if pos[1] != s:
            col_swap(s, pos[1])
        dirty = False
        for i in range(s + 1, nrows):
            if a[i][s]:
                row_sub(i, s, a[i][s] // a[s][s])
                if a[i][s]:
                    dirty = True
        for j in range(s + 1, ncols):
            if a[s][j]:
                col_sub(j, s, a[s][j] // a[s][s])
                if a[s][j]:
                    dirty = True
        if dirty:
            continue
        offender = None
        for i in range(s + 1, nrows):
            for j in range(s + 1, ncols):
                if a[i][j] % a[s][s]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_sub(s, offender, -1)
            continue
        if a[s][s] < 0:
            row_neg(s)
        s += 1
    d = tuple(a[i][i] for i in range(m))
    return d, u, v, vinv


def snf(m, ncols: int | None = None):
    """Smith normal form with transforms.

    Returns (d, u, v) where u * m * v == diag(d), u and v are unimodular,
    and d is a divisibility chain d[0] | d[1] | ... with nonnegative
    entries and trailing zeros for rank defects.
    """
    mat = as_int_matrix(m, ncols)
    nr = len(mat)
    nc = len(mat[0]) if mat else (ncols or 0)
    d, u, v, _ = _smith(mat, nr, nc)
    return d, tuple(tuple(r) for r in u), tuple(tuple(r) for r in v)


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class Lattice:
    """(1/denom) * rowspan_ZZ(basis), canonicalized on construction.

    The basis is stored in Hermite form with zero rows removed, and the
    denominator is reduced against the gcd of the basis entries, which
    makes representation unique: two Lattice objects are equal exactly
    when they describe the same set of points.
    """

    ambient_dim: int
    basis: IntMatrix = ()
    denom: int = 1

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise LatticeError("negative ambient dimension")
        if not isinstance(self.denom, int) or self.denom <= 0:
            raise LatticeError("denominator must be a positive integer")
        h = hnf(self.basis, self.ambient_dim)
        d = self.denom
        if h:
            g = gcd(d, *(x for row in h for x in row))
            if g > 1:
                h = tuple(tuple(x // g for x in row) for row in h)
                d //= g
        else:
            d = 1
        object.__setattr__(self, "basis", h)
        object.__setattr__(self, "denom", d)

    @classmethod
    def standard(cls, n: int) -> "Lattice":
        """The full integer lattice ZZ^n."""
        return cls(n, identity_matrix(n))

    @classmethod
    def zero(cls, n: int) -> "Lattice":
        return cls(n, ())

    @classmethod
    def from_vectors(cls, n: int, vectors) -> "Lattice":
        """Lattice spanned by rational row vectors."""
        rows = [vec_frac(v) for v in vectors]
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch("generator has wrong length")
        d = 1
        for r in rows:
            for x in r:
                d = lcm(d, x.denominator)
        int_rows = [[int(x * d) for x in r] for r in rows]
        return cls(n, as_int_matrix(int_rows, n), d)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def vectors(self) -> tuple[Vector, ...]:
        """Basis as exact rational row vectors."""
        d = self.denom
        return tuple(tuple(Fraction(x, d) for x in row) for row in self.basis)

    def scale(self, c) -> "Lattice":
        """The scaled lattice c * L for a rational scalar c."""
        c = Fraction(c)
        rows = mat_scale(self.basis, c.numerator)
        return Lattice(self.ambient_dim, rows, self.denom * c.denominator)

    def __contains__(self, v) -> bool:
        return membership(v, self)


def _same_ambient(a: Lattice, b: Lattice):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )


def coords_in_lattice(v, lat: Lattice):
    """Integer coordinates of v in lat's basis, or None when v is not in lat."""
    if len(v) != lat.ambient_dim:
        raise DimensionMismatch("vector length does not match ambient dimension")
    w = [Fraction(x) * lat.denom for x in v]
    if any(x.denominator != 1 for x in w):
        return None
    w = [int(x) for x in w]
    coeffs = []
    for row in lat.basis:
        j = next(k for k, x in enumerate(row) if x)
        q, rem = divmod(w[j], row[j])
        if rem:
            return None
        if q:
            _row_sub(w, list(row), q)
        coeffs.append(q)
    if any(w):
        return None
    return tuple(coeffs)


def membership(v, lat: Lattice) -> bool:
    """Exact test for v in lat."""
    return coords_in_lattice(v, lat) is not None


def reduce_mod(v, sub: Lattice) -> Vector:
    """Canonical representative of v modulo sub.

    Digits along sub's Hermite pivots are reduced into [0, pivot), which
    picks the same representative for every member of a coset.
    """
    if len(v) != sub.ambient_dim:
        raise DimensionMismatch("vector length does not match ambient dimension")
    fracs = vec_frac(v)
    d = sub.denom
    for x in fracs:
        d = lcm(d, x.denominator)
    w = [int(x * d) for x in fracs]
    mult = d // sub.denom
    for row in sub.basis:
        j = next(k for k, x in enumerate(row) if x)
        p = row[j] * mult
        q = w[j] // p
        if q:
            _row_sub(w, [x * mult for x in row], q)
    return tuple(Fraction(x, d) for x in w)


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    """Smallest lattice containing both summands."""
    _same_ambient(a, b)
    d = lcm(a.denom, b.denom)
    rows = [
        [x * (d // a.denom) for x in row] for row in a.basis
    ] + [
        [x * (d // b.denom) for x in row] for row in b.basis
    ]
    return Lattice(a.ambient_dim, as_int_matrix(rows, a.ambient_dim), d)


def lattice_intersect(a: Lattice, b: Lattice) -> Lattice:
    """Intersection, via the integer kernel of the stacked basis matrices."""
    _same_ambient(a, b)
    if a.is_zero or b.is_zero:
        return Lattice.zero(a.ambient_dim)
    d = lcm(a.denom, b.denom)
    ra = [[x * (d // a.denom) for x in row] for row in a.basis]
    rb = [[-x * (d // b.denom) for x in row] for row in b.basis]
    stacked = as_int_matrix(ra + rb, a.ambient_dim)
    kernel = left_kernel_basis(stacked, a.ambient_dim)
    na = len(ra)
    gens = [mat_vec(transpose(ra), k[:na]) for k in kernel]
    return Lattice(a.ambient_dim, as_int_matrix(gens, a.ambient_dim), d)


def kernel_lattice(lat: Lattice, a) -> Lattice:
    """{v in lat : a(v) == 0} for an integer matrix a acting on columns."""
    mat = as_int_matrix(a)
    if mat and len(mat) != lat.ambient_dim:
        raise DimensionMismatch("matrix does not act on the ambient space")
    cond = mat_mul(lat.basis, transpose(mat))
    kernel = left_kernel_basis(cond, lat.ambient_dim if not mat else len(mat))
    gens = mat_mul(kernel, lat.basis)
    return Lattice(lat.ambient_dim, as_int_matrix(gens, lat.ambient_dim), lat.denom)


def image_lattice(lat: Lattice, a) -> Lattice:
    """a(lat) for a rational square matrix a acting on columns."""
    rows = [vec_frac(r) for r in a]
    if len(rows) != lat.ambient_dim or any(len(r) != lat.ambient_dim for r in rows):
        raise DimensionMismatch("matrix does not act on the ambient space")
    q = 1
    for r in rows:
        for x in r:
            q = lcm(q, x.denominator)
    ai = [[int(x * q) for x in r] for r in rows]
    gens = mat_mul(lat.basis, transpose(ai))
    return Lattice(lat.ambient_dim, as_int_matrix(gens, lat.ambient_dim), lat.denom * q)


# ---------------------------------------------------------------------------
# quotients


@dataclass(frozen=True)
class QuotientStructure:
    """Isomorphism data for sup/sub.

    invariant_factors lists the torsion invariant factors (each >= 2, in
    a divisibility chain); free_rank counts infinite cyclic summands.
    Generators are coset representatives in the super-lattice, reduced to
    the canonical residue modulo the sub-lattice.
    """

    invariant_factors: tuple[int, ...]
    free_rank: int
    generators: tuple[Vector, ...]
    free_generators: tuple[Vector, ...] = ()

    @property
    def order(self) -> int | None:
        """Number of cosets, or None when the quotient is infinite."""
        if self.free_rank:
            return None
        return prod(self.invariant_factors)


def quotient_structure(sub: Lattice, sup: Lattice) -> QuotientStructure:
    """Structure of sup/sub through Smith normal form.

    Each sub generator is rewritten in sup's basis (raising
    NotASublattice when that fails); the Smith form of the resulting
    relation matrix gives invariant factors and generator coordinates.
    """
    _same_ambient(sub, sup)
    relation = []
    for v in sub.vectors():
        coords = coords_in_lattice(v, sup)
        if coords is None:
            raise NotASublattice(f"generator {v} is not in the super-lattice")
        relation.append(coords)
    rp = sup.rank
    d, _, _, vinv = _smith(as_int_matrix(relation, rp), len(relation), rp)
    sup_vectors = sup.vectors()

    def coset_vector(coords):
        out = (Fraction(0),) * sup.ambient_dim
        for c, vec in zip(coords, sup_vectors):
            if c:
                out = vec_add(out, vec_scale(vec, c))
        return out

    factors = []
    gens = []
    free_gens = []
    for i in range(rp):
        di = d[i] if i < len(d) else 0
        if di == 1:
            continue
        g = reduce_mod(coset_vector(vinv[i]), sub)
        if di == 0:
            free_gens.append(g)
        else:
            factors.append(di)
            gens.append(g)
    return QuotientStructure(
        tuple(factors), len(free_gens), tuple(gens), tuple(free_gens)
    )


def lattice_index(sub: Lattice, sup: Lattice) -> int | None:
    """[sup : sub], or None when infinite."""
    return quotient_structure(sub, sup).order


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _exact_log(p: int, m: int) -> int:
    s = 0
    while p**s < m:
        s += 1
    if p**s != m:
        raise AssertionError("coset count is not a prime power")
    return s


def _invariant_factors_from_orders(cosets, sub: Lattice, n: int) -> tuple[int, ...]:
    """Invariant factors of a finite coset group from element orders.

    For each prime p dividing the group order, every coset is repeatedly
    multiplied by p (doubling, for p = 2); counting how many land in the
    sub-lattice after k steps measures the number of elements killed by
    p**k, which reconstructs the p-primary invariant structure.
    """
    per_prime: dict[int, list[int]] = {}
    for p, valuation in _factorize(n).items():
        target = p**valuation
        ys = list(cosets)
        counts = [sum(1 for y in ys if membership(y, sub))]
        while counts[-1] < target:
            ys = [vec_scale(y, p) for y in ys]
            counts.append(sum(1 for y in ys if membership(y, sub)))
            if len(counts) > 200:
                raise AssertionError("runaway order computation")
        logs = [_exact_log(p, m) for m in counts]
        top = len(counts) - 1
        counts_ge = [logs[k] - logs[k - 1] for k in range(1, top + 1)]
        exponents: list[int] = []
        for k in range(1, top + 1):
            nxt = counts_ge[k] if k < top else 0
            exponents.extend([k] * (counts_ge[k - 1] - nxt))
        per_prime[p] = sorted(exponents, reverse=True)
    width = max((len(v) for v in per_prime.values()), default=0)
    chain = []
    for j in range(width):
        f = 1
        for p, exps in per_prime.items():
            if j < len(exps):
                f *= p ** exps[j]
        chain.append(f)
    chain.reverse()
    if prod(chain) != n:
        raise AssertionError("invariant factor product does not match coset count")
    return tuple(chain)


def brute_force_quotient(sub: Lattice, sup: Lattice, bound: int = 4096) -> QuotientStructure:
    """Quotient structure by explicit coset enumeration.

    Breadth-first search over sums of super-lattice generators, with
    cosets identified by their canonical residue modulo sub.  Element
    orders are then measured directly, giving invariant factors by a
    route fully independent of Smith normal form.

    Raises InfiniteIndex when ranks show the quotient is infinite, and
    BoundExceeded when more than `bound` cosets appear.
    """
    _same_ambient(sub, sup)
    for v in sub.vectors():
        if not membership(v, sup):
            raise NotASublattice(f"generator {v} is not in the super-lattice")
    if sub.rank < sup.rank:
        raise InfiniteIndex("sub-lattice has lower rank; quotient is infinite")
    zero = reduce_mod((Fraction(0),) * sup.ambient_dim, sub)
    steps = []
    for g in sup.vectors():
        steps.append(g)
        steps.append(vec_scale(g, -1))
    found = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in steps:
                y = reduce_mod(vec_add(x, g), sub)
                if y not in found:
                    if len(found) >= bound:
                        raise BoundExceeded(f"more than {bound} cosets")
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    n = len(found)
    if n == 1:
        return QuotientStructure((), 0, ())
    factors = _invariant_factors_from_orders(found, sub, n)

    def closure(gens):
        span = {zero}
        queue = [zero]
        while queue:
            x = queue.pop()
            for g in gens:
                y = reduce_mod(vec_add(x, g), sub)
                if y not in span:
                    span.add(y)
                    queue.append(y)
        return span

    chosen: list[Vector] = []
    span = {zero}
    for x in sorted(found):
        if x in span:
            continue
        chosen.append(x)
        span = closure(chosen)
        if len(span) == n:
            break
    return QuotientStructure(factors, 0, tuple(chosen))


# ---------------------------------------------------------------------------
# rational linear algebra (used for eigenspace input and basis changes)


def rat_inverse(m):
    """Exact inverse of a square rational matrix; raises when singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    if any(len(row) != 2 * n for row in a):
        raise DimensionMismatch("matrix is not square")
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise LatticeError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def rat_rank(rows) -> int:
    """Rank of a rational matrix given as an iterable of rows."""
    a = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        a[rank] = [x / a[rank][col] for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def rational_right_kernel(rows, ncols: int) -> tuple[Vector, ...]:
    """Basis of {x rational : row . x == 0 for every row}."""
    a = [[Fraction(x) for x in row] for row in rows]
    for row in a:
        if len(row) != ncols:
            raise DimensionMismatch("constraint row has wrong length")
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        a[rank] = [x / a[rank][col] for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -a[r][fc]
        basis.append(tuple(vec))
    return tuple(basis)
