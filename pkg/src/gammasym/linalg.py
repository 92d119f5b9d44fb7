"""Exact linear algebra over the rationals.

Everything here works with ``fractions.Fraction`` entries, so results are
exact and reproducible.  Dense matrices are lists of lists; large sparse
systems (the invariance constraints) are handled as dict rows mapping
column -> coefficient.

The reduced row echelon form of a matrix is unique, which makes every
derived object (nullspace bases, row-space bases) canonical: independent
of the order in which rows are fed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = list[Fraction]
Matrix = list[list[Fraction]]
SparseRow = dict[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[frac(x) for x in row] for row in rows]


def zeros(n: int) -> Vector:
    return [ZERO] * n


def mat_identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def mat_trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), ZERO)


# ---------------------------------------------------------------------------
# Reduced row echelon form, kept fully reduced while rows are inserted.
# ---------------------------------------------------------------------------


class RowReducer:
    """Incremental RREF over sparse rational rows.

    ``pivots`` maps pivot column -> normalized, fully reduced row.  Because
    the RREF of a row space is unique, the final state does not depend on
    insertion order.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, SparseRow] = {}
        # column -> pivot columns whose rows touch it, for cheap back-substitution
        self._colmap: dict[int, set[int]] = {}
        self._seen: set[tuple] = set()

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _subtract(self, row: SparseRow, f: Fraction, piv: SparseRow, skip: int) -> None:
        for cc, vv in piv.items():
            if cc == skip:
                continue
            nv = row.get(cc, ZERO) - f * vv
            if nv:
                row[cc] = nv
            else:
                row.pop(cc, None)

    def insert(self, row: SparseRow) -> int | None:
        """Reduce ``row`` against the current pivots; returns the new pivot
        column, or None if the row was dependent."""
        row = {c: v for c, v in row.items() if v}
        key = tuple(sorted(row.items()))
        if key in self._seen:
            return None
        self._seen.add(key)
        # strip pivot columns off the front
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                break
            self._subtract(row, row.pop(c), piv, c)
        if not row:
            return None
        c = min(row)
        # eliminate the remaining pivot columns (all to the right of c);
        # pivot rows touch no other pivot column, so one pass suffices
        for c2 in [k for k in sorted(row) if k in self.pivots]:
            self._subtract(row, row.pop(c2), self.pivots[c2], c2)
        inv = ONE / row[c]
        if inv != ONE:
            row = {cc: vv * inv for cc, vv in row.items()}
        # back-substitute so existing pivot rows stay reduced
        for p in list(self._colmap.get(c, ())):
            prow = self.pivots[p]
            f = prow[c]
            for cc, vv in row.items():
                nv = prow.get(cc, ZERO) - f * vv
                if nv:
                    prow[cc] = nv
                    self._colmap.setdefault(cc, set()).add(p)
                else:
                    prow.pop(cc, None)
                    self._colmap[cc].discard(p)
        self.pivots[c] = row
        for cc in row:
            self._colmap.setdefault(cc, set()).add(c)
        return c

    def extend(self, rows: Iterable[SparseRow]) -> None:
        for row in rows:
            self.insert(row)

    def rref_rows(self) -> list[SparseRow]:
        return [self.pivots[c] for c in sorted(self.pivots)]

    def nullspace_basis(self) -> list[Vector]:
        """Canonical basis of the solution set, one vector per free column."""
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for f in free:
            v = zeros(self.ncols)
            v[f] = ONE
            for p, row in self.pivots.items():
                coef = row.get(f)
                if coef:
                    v[p] = -coef
            basis.append(v)
        return basis


def _dense_to_sparse(rows: Sequence[Sequence]) -> tuple[list[SparseRow], int]:
    ncols = len(rows[0]) if rows else 0
    out = []
    for row in rows:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        out.append({j: frac(x) for j, x in enumerate(row) if x})
    return out, ncols


def nullspace(matrix: Sequence[Sequence]) -> list[Vector]:
    """Canonical rational basis of ``{v : matrix @ v = 0}``.

    Deterministic: pivots are the leftmost independent columns, and each
    basis vector has a 1 in one free column and 0 in the others.
    """
    sparse, ncols = _dense_to_sparse(matrix)
    red = RowReducer(ncols)
    red.extend(sparse)
    return red.nullspace_basis()


def row_space_basis(vectors: Sequence[Sequence]) -> list[Vector]:
    """Canonical (RREF) basis of the span of the given vectors."""
    if not vectors:
        return []
    sparse, ncols = _dense_to_sparse(vectors)
    red = RowReducer(ncols)
    red.extend(sparse)
    out = []
    for row in red.rref_rows():
        v = zeros(ncols)
        for c, val in row.items():
            v[c] = val
        out.append(v)
    return out


def rank(matrix: Sequence[Sequence]) -> int:
    sparse, ncols = _dense_to_sparse(matrix)
    red = RowReducer(ncols)
    red.extend(sparse)
    return red.rank


# ---------------------------------------------------------------------------
# Symmetric forms and Sylvester signatures.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetricForm:
    """A symmetric bilinear form given by its exact Gram matrix."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i},{j})")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "SymmetricForm":
        return SymmetricForm(tuple(tuple(frac(x) for x in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "SymmetricForm":
        return SymmetricForm.from_rows(mat_identity(n))

    @staticmethod
    def zero(n: int) -> "SymmetricForm":
        return SymmetricForm.from_rows([[ZERO] * n for _ in range(n)])

    @staticmethod
    def diagonal(values: Sequence) -> "SymmetricForm":
        n = len(values)
        rows = [[frac(values[i]) if i == j else ZERO for j in range(n)] for i in range(n)]
        return SymmetricForm.from_rows(rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def apply(self, x: Sequence, y: Sequence) -> Fraction:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match form dimension")
        total = ZERO
        for i, xi in enumerate(x):
            if xi:
                row = self.entries[i]
                for j, yj in enumerate(y):
                    if yj:
                        total += frac(xi) * row[j] * frac(yj)
        return total

    def restrict(self, indices: Sequence[int]) -> "SymmetricForm":
        return SymmetricForm.from_rows(
            [[self.entries[i][j] for j in indices] for i in indices]
        )

    def is_identity(self) -> bool:
        return self.entries == SymmetricForm.identity(self.dim).entries

    def inertia(self) -> tuple[int, int, int]:
        return congruence_signature(self)


def congruence_signature(form) -> tuple[int, int, int]:
    """Sylvester inertia (positive, negative, zero) of a symmetric form.

    Exact symmetric elimination: diagonal pivots split off one square each;
    a zero diagonal with a nonzero off-diagonal entry is a hyperbolic pair
    contributing (1, 1).  No eigenvalues, no floats.
    """
    if isinstance(form, SymmetricForm):
        work = form.rows()
    else:
        work = to_matrix(form)
        n = len(work)
        for i in range(n):
            if len(work[i]) != n:
                raise ValueError("Gram matrix must be square")
            for j in range(i):
                if work[i][j] != work[j][i]:
                    raise ValueError("Gram matrix not symmetric")
    idx = list(range(len(work)))
    pos = neg = zero = 0
    while idx:
        # prefer a diagonal pivot
        k = next((i for i in idx if work[i][i]), None)
        if k is not None:
            p = work[k][k]
            if p > 0:
                pos += 1
            else:
                neg += 1
            idx.remove(k)
            col = {i: work[i][k] for i in idx}
            for i in idx:
                ci = col[i]
                if not ci:
                    continue
                wi = work[i]
                for j in idx:
                    if col[j]:
                        wi[j] -= ci * col[j] / p
            continue
        h = idx[0]
        k = next((j for j in idx[1:] if work[h][j]), None)
        if k is None:
            # row h is zero on the remaining block
            zero += 1
            idx.remove(h)
            continue
        # hyperbolic pair on (h, k): both diagonal entries vanish here
        p = work[h][k]
        pos += 1
        neg += 1
        idx.remove(h)
        idx.remove(k)
        ch = {i: work[i][h] for i in idx}
        ck = {i: work[i][k] for i in idx}
        for i in idx:
            wi = work[i]
            for j in idx:
                corr = ch[i] * ck[j] + ck[i] * ch[j]
                if corr:
                    wi[j] -= corr / p
    return pos, neg, zero


# ---------------------------------------------------------------------------
# Exact solving and characteristic polynomials.
# ---------------------------------------------------------------------------


def solve_matrix(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    """Exact solution X of A X = B for invertible A (Gauss-Jordan)."""
    n = len(a)
    aug = [list(frac(x) for x in a[i]) + list(frac(x) for x in b[i]) for i in range(n)]
    width = len(aug[0])
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = ONE / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col]:
                f = aug[r][col]
                arow, prow = aug[r], aug[row]
                for c in range(col, width):
                    arow[c] -= f * prow[c]
        row += 1
    return [r[n:] for r in aug]


def char_poly(m: Sequence[Sequence]) -> list[Fraction]:
    """Monic characteristic polynomial of a square matrix, exactly.

    Returns coefficients [1, a_1, ..., a_n] of
    det(x I - M) = x^n + a_1 x^{n-1} + ... + a_n
    via the Faddeev-LeVerrier recursion.
    """
    mm = to_matrix(m)
    n = len(mm)
    coeffs = [ONE]
    nk = [[ZERO] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            nk[i][i] += coeffs[-1]
        mk = mat_mul(mm, nk)
        ak = -mat_trace(mk) / k
        coeffs.append(ak)
        nk = mk
    return coeffs
