"""Exact linear algebra over the integers.

Dense matrices of Python ints, so every computation is arbitrary precision
and exact.  The two normal forms here use fixed pivoting rules and return
canonical output:

* ``hnf`` puts a matrix in row-style Hermite normal form.  The nonzero rows
  are the unique echelon basis (positive pivots, entries above each pivot
  reduced into ``[0, pivot)``) of the row lattice, so two generating sets
  span the same lattice exactly when their forms agree.
* ``snf`` computes the Smith normal form ``U * A * V = S`` with unimodular
  ``U, V`` and a nonnegative diagonal ``d_1 | d_2 | ...``.

Conventions used throughout the package: lattice bases are stored as matrix
*rows*, linear maps act on *column* vectors, and ``dot`` is the standard
pairing of a covector row with a vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def dot(u, v):
    if len(u) != len(v):
        raise ValueError("length mismatch in dot product")
    return sum(a * b for a, b in zip(u, v))


class IntMatrix:
    """Immutable dense matrix of Python ints.

    A matrix may have zero rows or zero columns; the column count of an
    empty matrix must be supplied explicitly so shapes stay meaningful.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        packed = []
        for row in entries:
            r = tuple(row)
            for x in r:
                if not isinstance(x, int):
                    raise TypeError(f"matrix entries must be ints, got {type(x).__name__}")
            packed.append(r)
        if packed:
            ncols = len(packed[0])
            if any(len(r) != ncols for r in packed):
                raise ValueError("ragged rows")
            if cols is not None and cols != ncols:
                raise ValueError("explicit column count disagrees with rows")
        else:
            if cols is None:
                raise ValueError("a matrix with no rows needs an explicit column count")
            if cols < 0:
                raise ValueError("negative column count")
            ncols = cols
        self.entries = tuple(packed)
        self.rows = len(packed)
        self.cols = ncols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)], cols=n)

    def row(self, i: int):
        return self.entries[i]

    def column(self, j: int):
        return tuple(r[j] for r in self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            [[dot(r, c) for c in cols] for r in self.entries],
            cols=other.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self.entries], cols=self.cols)

    def mul_vec(self, v):
        """Matrix times column vector, returned as a tuple."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(dot(r, v) for r in self.entries)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def tolist(self):
        return [list(r) for r in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def det(self) -> int:
        """Determinant by the Bareiss fraction-free algorithm."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    # exact division is a Bareiss invariant
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r}, cols={self.cols})"


def vstack(blocks, cols: int | None = None) -> IntMatrix:
    """Stack matrices vertically.  ``cols`` is needed when ``blocks`` is empty."""
    rows = []
    width = cols
    for b in blocks:
        if width is None:
            width = b.cols
        elif b.cols != width:
            raise ValueError("column count mismatch in vstack")
        rows.extend(b.entries)
    if width is None:
        raise ValueError("vstack of no blocks needs an explicit column count")
    return IntMatrix(rows, cols=width)


def _row_sub(m, i, j, q):
    """m[i] -= q * m[j] in place."""
    mi, mj = m[i], m[j]
    for c in range(len(mi)):
        mi[c] -= q * mj[c]


def _row_neg(m, i):
    m[i] = [-x for x in m[i]]


def hnf(a: IntMatrix):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U * A = H``.  ``H`` is in
    echelon form with positive pivots, every entry above a pivot reduced into
    ``[0, pivot)``, and zero rows collected at the bottom.  The nonzero rows
    of ``H`` are the canonical basis of the row lattice of ``A``.

    Columns are processed left to right.  Within a column the remaining row
    with the smallest nonzero absolute value is swapped up and the others are
    reduced modulo it until the column is clear; this is just the Euclidean
    algorithm run on the column, so it terminates.
    """
    m, n = a.rows, a.cols
    w = [list(r) for r in a.entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        if all(w[i][c] == 0 for i in range(r, m)):
            continue
        while True:
            i0 = min(
                (i for i in range(r, m) if w[i][c] != 0),
                key=lambda i: (abs(w[i][c]), i),
            )
            if i0 != r:
                w[r], w[i0] = w[i0], w[r]
                u[r], u[i0] = u[i0], u[r]
            if w[r][c] < 0:
                _row_neg(w, r)
                _row_neg(u, r)
            clear = True
            for i in range(r + 1, m):
                if w[i][c] != 0:
                    q = w[i][c] // w[r][c]
                    _row_sub(w, i, r, q)
                    _row_sub(u, i, r, q)
                    if w[i][c] != 0:
                        clear = False
            if clear:
                break
        for i in range(r):
            q = w[i][c] // w[r][c]
            if q:
                _row_sub(w, i, r, q)
                _row_sub(u, i, r, q)
        r += 1
    return IntMatrix(w, cols=n), IntMatrix(u, cols=m)


def hnf_basis(a: IntMatrix) -> IntMatrix:
    """Canonical basis of the row lattice of ``a``: nonzero rows of its HNF."""
    h, _ = hnf(a)
    keep = [r for r in h.entries if any(x != 0 for x in r)]
    return IntMatrix(keep, cols=a.cols)


@dataclass(frozen=True)
class SNFResult:
    """Smith decomposition ``U * A * V = S``."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    def diagonal(self):
        n = min(self.S.rows, self.S.cols)
        return tuple(self.S[i, i] for i in range(n))

    def nonzero_divisors(self):
        return tuple(d for d in self.diagonal() if d != 0)


def snf(a: IntMatrix) -> SNFResult:
    """Smith normal form with transformation matrices.

    Returns ``SNFResult(U, S, V)`` where ``U`` (``m x m``) and ``V``
    (``n x n``) are unimodular, ``S = U * A * V`` is diagonal, the diagonal
    is nonnegative and each entry divides the next.

    The pivot for each stage is the entry of smallest nonzero absolute value
    in the remaining block (first position in row-major order on ties), which
    makes the computation deterministic.  After the pivot's row and column
    are cleared, any entry of the remaining block not divisible by the pivot
    has its row added to the pivot row and the stage restarts; each restart
    strictly shrinks the pivot, so the loop terminates.
    """
    m, n = a.rows, a.cols
    s = [list(r) for r in a.entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_sub(mat, j, t, q):
        for row in mat:
            row[j] -= q * row[t]

    def col_swap(mat, j, t):
        for row in mat:
            row[j], row[t] = row[t], row[j]

    t = 0
    limit = min(m, n)
    while t < limit:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = s[i][j]
                if x != 0 and (best is None or abs(x) < abs(best[2])):
                    best = (i, j, x)
        if best is None:
            break
        i0, j0, _ = best
        if i0 != t:
            s[t], s[i0] = s[i0], s[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            col_swap(s, j0, t)
            col_swap(v, j0, t)
        while True:
            if s[t][t] < 0:
                _row_neg(s, t)
                _row_neg(u, t)
            p = s[t][t]
            restart = False
            for i in range(m):
                if i != t and s[i][t] != 0:
                    q = s[i][t] // p
                    _row_sub(s, i, t, q)
                    _row_sub(u, i, t, q)
                    if s[i][t] != 0:
                        # remainder is a smaller pivot candidate
                        s[t], s[i] = s[i], s[t]
                        u[t], u[i] = u[i], u[t]
                        restart = True
                        break
            if restart:
                continue
            for j in range(n):
                if j != t and s[t][j] != 0:
                    q = s[t][j] // p
                    col_sub(s, j, t, q)
                    col_sub(v, j, t, q)
                    if s[t][j] != 0:
                        col_swap(s, j, t)
                        col_swap(v, j, t)
                        restart = True
                        break
            if restart:
                continue
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if s[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_sub(s, t, offender, -1)
            _row_sub(u, t, offender, -1)
        t += 1
    return SNFResult(IntMatrix(u, cols=m), IntMatrix(s, cols=n), IntMatrix(v, cols=n))


def rank(a: IntMatrix) -> int:
    return hnf_basis(a).rows


def kernel_lattice(a: IntMatrix) -> IntMatrix:
    """Canonical basis of ``{x : A x = 0}`` as matrix rows.

    The kernel of the column action is read off a Hermite form of the
    transpose: rows of the transformation matrix that map to zero rows span
    the kernel, and the lattice they span is automatically saturated.  The
    result is put in Hermite form, so equal kernels give identical bases.
    """
    h, u = hnf(a.transpose())
    ker = [u.row(i) for i in range(h.rows) if all(x == 0 for x in h.row(i))]
    if not ker:
        return IntMatrix([], cols=a.cols)
    return hnf_basis(IntMatrix(ker, cols=a.cols))


def saturate(basis: IntMatrix) -> IntMatrix:
    """Canonical basis of the saturation ``span_Q(L) ∩ Z^n`` of a row lattice.

    Double kernel: the saturation is exactly the set of integer vectors
    annihilated by everything that annihilates the generators.
    """
    return kernel_lattice(kernel_lattice(basis))


def in_row_lattice(basis: IntMatrix, v) -> bool:
    """Is ``v`` an integer combination of the rows of ``basis``?"""
    return solve_left(basis, IntMatrix([v], cols=basis.cols)) is not None


def solve_left(a: IntMatrix, b: IntMatrix):
    """Solve ``X * A = B`` over the integers.

    Returns ``X`` (``b.rows x a.rows``) or ``None`` if some row of ``B`` is
    not in the row lattice of ``A``.  Rows of ``B`` are reduced against the
    Hermite form top-down; each pivot must divide the current coordinate
    exactly, and the transformation matrix converts the quotients back to
    coefficients on the original rows.
    """
    if a.cols != b.cols:
        raise ValueError("column count mismatch in solve_left")
    h, u = hnf(a)
    pivots = []
    for i in range(h.rows):
        row = h.row(i)
        j = next((c for c in range(h.cols) if row[c] != 0), None)
        if j is None:
            break
        pivots.append((i, j))
    xs = []
    for brow in b.entries:
        w = list(brow)
        y = [0] * a.rows
        for i, j in pivots:
            p = h[i, j]
            q, r = divmod(w[j], p)
            if r != 0:
                return None
            if q:
                hrow = h.row(i)
                for c in range(len(w)):
                    w[c] -= q * hrow[c]
                y[i] = q
        if any(x != 0 for x in w):
            return None
        xs.append(tuple(dot(y, u.column(j)) for j in range(u.cols)))
    return IntMatrix(xs, cols=a.rows)


def lattices_equal(a: IntMatrix, b: IntMatrix) -> bool:
    """Do two row-generating sets span the same integer lattice?"""
    if a.cols != b.cols:
        raise ValueError("ambient rank mismatch")
    return hnf_basis(a) == hnf_basis(b)


def unimodular_inverse(v: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix, via ``U * V = HNF(V) = I``."""
    h, u = hnf(v)
    if h != IntMatrix.identity(v.rows):
        raise ValueError("matrix is not unimodular")
    return u


def complement_projection(k: IntMatrix):
    """Split ``Z^n -> Z^n / L`` for a saturated row lattice ``L``.

    Returns ``(Q, S)`` where ``Q`` (``d x n``, ``d = n - rank L``) is a
    surjection with kernel exactly ``L`` and ``S`` (``n x d``) is a section,
    ``Q * S = I``.  Both come from one Smith decomposition of the basis, so
    equal lattices always produce the same pair.
    """
    n = k.cols
    r = k.rows
    res = snf(k)
    if any(d != 1 for d in res.nonzero_divisors()) or len(res.nonzero_divisors()) != r:
        raise ValueError("basis does not span a saturated lattice of full row rank")
    d = n - r
    v = res.V
    vinv = unimodular_inverse(v)
    q = IntMatrix([[v[i, r + j] for i in range(n)] for j in range(d)], cols=n)
    s = IntMatrix([[vinv[r + j, i] for j in range(d)] for i in range(n)], cols=d)
    prod = q * s
    assert prod == IntMatrix.identity(d)
    return q, s


def primitive(v):
    """Divide an integer vector by the gcd of its entries, keeping direction."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in v)
