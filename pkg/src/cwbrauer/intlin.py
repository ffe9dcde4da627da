"""Exact linear algebra over the integers.

Everything here works with arbitrary-precision Python ints held in
numpy object-dtype arrays; nothing is ever converted to floats.  The
central routine is `smith_normal_form`, which returns the full
transform pair (U, V) so that U @ A @ V = S with U, V unimodular and
the diagonal of S a divisibility chain d1 | d2 | ... | dk followed by
zeros.  Kernels, integral solving, and cokernel presentations are all
derived from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SemanticError


def _as_object_array(entries) -> np.ndarray:
    """Coerce nested sequences (or an ndarray) to a 2-d object array of ints."""
    if isinstance(entries, np.ndarray) and entries.dtype == object and entries.ndim == 2:
        arr = entries.copy()
    else:
        rows = [list(r) for r in entries]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise SemanticError("ragged matrix literal")
        arr = np.empty((len(rows), ncols), dtype=object)
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                arr[i, j] = int(x)
    for x in arr.flat:
        if not isinstance(x, int):
            raise SemanticError(f"matrix entry {x!r} is not an integer")
    return arr


class IntMatrix:
    """Immutable integer matrix.

    Thin wrapper around a read-only numpy object array.  Supports @, ==,
    hashing, transpose, and row/column access.  Shapes with zero rows or
    columns are legal and behave like the corresponding empty maps.
    """

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = _as_object_array(entries)
        a.setflags(write=False)
        object.__setattr__(self, "_a", a)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _wrap(cls, a: np.ndarray) -> "IntMatrix":
        a.setflags(write=False)
        m = cls.__new__(cls)
        object.__setattr__(m, "_a", a)
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        a = np.empty((rows, cols), dtype=object)
        for idx in np.ndindex(a.shape):
            a[idx] = 0
        return cls._wrap(a)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        a = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                a[i, j] = 1 if i == j else 0
        return cls._wrap(a)

    @classmethod
    def column(cls, entries) -> "IntMatrix":
        return cls([[int(x)] for x in entries])

    @classmethod
    def diagonal(cls, entries) -> "IntMatrix":
        entries = [int(x) for x in entries]
        n = len(entries)
        a = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                a[i, j] = entries[i] if i == j else 0
        return cls._wrap(a)

    # -- basic accessors ------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    def __getitem__(self, ij):
        i, j = ij
        return self._a[i, j]

    def row_tuple(self, i: int) -> tuple[int, ...]:
        return tuple(self._a[i, :])

    def col_tuple(self, j: int) -> tuple[int, ...]:
        return tuple(self._a[:, j])

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._a]

    def array(self) -> np.ndarray:
        """A writable copy of the underlying object array."""
        return self._a.copy()

    # -- algebra ---------------------------------------------------------------

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise SemanticError(
                    f"shape mismatch in product: {self.shape} @ {other.shape}")
            return IntMatrix(self._a @ other._a)
        # vector (sequence of ints) -> tuple
        vec = np.array([int(x) for x in other], dtype=object)
        if self.cols != vec.shape[0]:
            raise SemanticError("shape mismatch in matrix-vector product")
        return tuple(self._a @ vec)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self._a.T)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise SemanticError("hstack row mismatch")
        return IntMatrix(np.hstack([self._a, other._a]))

    def submatrix(self, row_idx, col_idx) -> "IntMatrix":
        a = self._a[np.ix_(list(row_idx), list(col_idx))]
        return IntMatrix(a)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._a.flat)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self._a.flat, other._a.flat))

    def __hash__(self):
        return hash((self.shape, tuple(self._a.flat)))

    def __repr__(self):
        return f"IntMatrix({self.to_lists()!r})"


@dataclass(frozen=True)
class SmithForm:
    """Result of `smith_normal_form`: u @ a @ v = s.

    diagonal holds min(rows, cols) nonnegative integers with the nonzero
    entries first, each dividing the next, then zeros.  rank is the count
    of nonzero diagonal entries.
    """

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _pivot(S, t, rows, cols):
    """Position of a nonzero entry of minimal absolute value in S[t:, t:]."""
    best = None
    best_pos = None
    for i in range(t, rows):
        for j in range(t, cols):
            x = S[i][j]
            if x != 0 and (best is None or abs(x) < best):
                best = abs(x)
                best_pos = (i, j)
                if best == 1:
                    return best_pos
    return best_pos


def smith_normal_form(a: IntMatrix | list) -> SmithForm:
    """Smith normal form with unimodular transforms.

    Strategy: repeatedly move a nonzero entry of minimal absolute value
    to the working diagonal slot, then clear its row and column by
    division-with-remainder; when a remainder survives it becomes the
    new (smaller) pivot, so the loop terminates.  Once row and column
    are clear, any entry of the remaining submatrix not divisible by the
    pivot gets its row added to the pivot row and the clearing restarts;
    that enforces the divisibility chain.
    """
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    rows, cols = a.rows, a.cols
    S = a.to_lists()
    U = IntMatrix.identity(rows).to_lists()
    V = IntMatrix.identity(cols).to_lists()

    def row_op(i, k, q):  # row i -= q * row k   (on S and U)
        S[i] = [x - q * y for x, y in zip(S[i], S[k])]
        U[i] = [x - q * y for x, y in zip(U[i], U[k])]

    def col_op(j, k, q):  # col j -= q * col k   (on S and V)
        for r in range(rows):
            S[r][j] -= q * S[r][k]
        for r in range(cols):
            V[r][j] -= q * V[r][k]

    def swap_rows(i, k):
        S[i], S[k] = S[k], S[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in range(rows):
            S[r][j], S[r][k] = S[r][k], S[r][j]
        for r in range(cols):
            V[r][j], V[r][k] = V[r][k], V[r][j]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        pos = _pivot(S, t, rows, cols)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            # clear column t below and row t to the right, smallest-first
            dirty = False
            for i in range(t + 1, rows):
                if S[i][t] != 0:
                    q = S[i][t] // S[t][t]
                    row_op(i, t, q)
                    if S[i][t] != 0:
                        dirty = True
            for j in range(t + 1, cols):
                if S[t][j] != 0:
                    q = S[t][j] // S[t][t]
                    col_op(j, t, q)
                    if S[t][j] != 0:
                        dirty = True
            if dirty:
                pos = _pivot(S, t, rows, cols)
                swap_rows(t, pos[0])
                swap_cols(t, pos[1])
                continue
            # row and column are clear; enforce divisibility into the rest
            d = S[t][t]
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if S[i][j] % d != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # add offending row to pivot row
        t += 1

    # normalize signs
    for i in range(min(rows, cols)):
        if S[i][i] < 0:
            S[i] = [-x for x in S[i]]
            U[i] = [-x for x in U[i]]

    u, s, v = IntMatrix(U), IntMatrix(S), IntMatrix(V)
    diag = tuple(s[i, i] for i in range(min(rows, cols)))
    return SmithForm(u=u, s=s, v=v, diagonal=diag)


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Basis of {x : a @ x = 0} as the columns of a cols x nullity matrix.

    The kernel of an integer matrix is a saturated sublattice, and the
    trailing columns of the Smith V matrix form a basis of it, so every
    integer kernel vector is an integer combination of the returned
    columns.
    """
    sf = smith_normal_form(a)
    r = sf.rank
    return sf.v.submatrix(range(a.cols), range(r, a.cols))


def cokernel_structure(a: IntMatrix):
    """Z^rows / column-span(a) in invariant-factor form (an FgAbGroup)."""
    from .abgroup import FgAbGroup  # local import: abgroup builds on intlin

    sf = smith_normal_form(a)
    invariant = tuple(d for d in sf.diagonal if d >= 2)
    free = a.rows - sf.rank
    return FgAbGroup(free_rank=free, invariant_factors=invariant)


def solve_integral(a: IntMatrix, b) -> tuple[int, ...] | None:
    """Some integer solution x of a @ x = b, or None when none exists."""
    b = [int(x) for x in b]
    if len(b) != a.rows:
        raise SemanticError(
            f"solve_integral: got {len(b)} entries for {a.rows} equations")
    sf = smith_normal_form(a)
    c = sf.u @ b
    y = [0] * a.cols
    k = len(sf.diagonal)
    for i in range(a.rows):
        d = sf.diagonal[i] if i < k else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            if i < a.cols:
                y[i] = c[i] // d
    return sf.v @ y


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise SemanticError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    M = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a matrix with determinant +-1 (exact, via Fractions)."""
    if m.rows != m.cols:
        raise SemanticError("inverse of a non-square matrix")
    n = m.rows
    work = [[Fraction(m[i, j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != 0), None)
        if piv is None:
            raise SemanticError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    inv = [[work[i][n + j] for j in range(n)] for i in range(n)]
    for row in inv:
        for x in row:
            if x.denominator != 1:
                raise SemanticError("matrix is not unimodular over Z")
    return IntMatrix([[int(x) for x in row] for row in inv])
