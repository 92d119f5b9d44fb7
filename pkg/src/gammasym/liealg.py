"""The orthogonal Lie algebras so(n) with exact structure constants.

Basis: E_ij = unit(i,j) - unit(j,i) for 0 <= i < j < n, listed in
lexicographic order of (i, j).  Structure constants are computed from the
matrix commutators E_ij E_kl - E_kl E_ij and stored sparsely; for this
basis a bracket of two basis elements has at most one nonzero term.

Elements of the algebra are coefficient vectors over this basis (exact
rationals), with conversion to and from skew-symmetric n x n matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import Matrix, SymmetricForm, Vector, ZERO, frac, zeros

# sparse n x n matrix: (row, col) -> coefficient
SparseMat = dict[tuple[int, int], Fraction]

BracketTerms = tuple[tuple[int, Fraction], ...]


def _sparse_commutator(a: SparseMat, b: SparseMat) -> SparseMat:
    out: SparseMat = {}
    rows_b: dict[int, list[tuple[int, Fraction]]] = {}
    for (r, c), v in b.items():
        rows_b.setdefault(r, []).append((c, v))
    rows_a: dict[int, list[tuple[int, Fraction]]] = {}
    for (r, c), v in a.items():
        rows_a.setdefault(r, []).append((c, v))
    for (r, c), v in a.items():
        for c2, v2 in rows_b.get(c, ()):
            key = (r, c2)
            out[key] = out.get(key, ZERO) + v * v2
    for (r, c), v in b.items():
        for c2, v2 in rows_a.get(c, ()):
            key = (r, c2)
            out[key] = out.get(key, ZERO) - v * v2
    return {k: v for k, v in out.items() if v}


class LieAlgebra:
    """so(n) with cached sparse structure constants.  Use ``build_so``."""

    def __init__(self, n: int):
        if n < 3:
            raise ValueError(f"need n >= 3, got {n}")
        self.n = n
        self.pairs: list[tuple[int, int]] = [
            (i, j) for i in range(n) for j in range(i + 1, n)
        ]
        self.dim = len(self.pairs)
        self.pair_index: dict[tuple[int, int], int] = {
            p: k for k, p in enumerate(self.pairs)
        }
        self._table: dict[tuple[int, int], BracketTerms] = {}
        self._build_table()
        self._killing: SymmetricForm | None = None

    # -- construction -------------------------------------------------

    def _basis_sparse(self, k: int) -> SparseMat:
        i, j = self.pairs[k]
        return {(i, j): Fraction(1), (j, i): Fraction(-1)}

    def _decompose_sparse(self, m: SparseMat) -> BracketTerms:
        terms = []
        for (i, j), v in sorted(m.items()):
            if i < j:
                if m.get((j, i), ZERO) != -v:
                    raise ValueError("matrix is not skew-symmetric")
                terms.append((self.pair_index[(i, j)], v))
            elif i == j and v:
                raise ValueError("matrix has nonzero diagonal")
        return tuple(terms)

    def _build_table(self) -> None:
        mats = [self._basis_sparse(k) for k in range(self.dim)]
        for p in range(self.dim):
            for q in range(p + 1, self.dim):
                terms = self._decompose_sparse(_sparse_commutator(mats[p], mats[q]))
                if terms:
                    self._table[(p, q)] = terms

    # -- basic data ----------------------------------------------------

    def basis_label(self, k: int) -> str:
        i, j = self.pairs[k]
        return f"E{i + 1}_{j + 1}" if self.n > 9 else f"E{i + 1}{j + 1}"

    def basis_matrix(self, k: int) -> Matrix:
        m = [[ZERO] * self.n for _ in range(self.n)]
        i, j = self.pairs[k]
        m[i][j] = Fraction(1)
        m[j][i] = Fraction(-1)
        return m

    def basis_vector(self, k: int) -> Vector:
        v = zeros(self.dim)
        v[k] = Fraction(1)
        return v

    def bracket_basis(self, p: int, q: int) -> BracketTerms:
        """[E_p, E_q] as sparse terms over the basis."""
        if p == q:
            return ()
        if p < q:
            return self._table.get((p, q), ())
        return tuple((k, -c) for k, c in self._table.get((q, p), ()))

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        """Bracket of two coefficient vectors, exactly."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("coefficient vector has wrong length")
        out = zeros(self.dim)
        nx = [(k, frac(c)) for k, c in enumerate(x) if c]
        ny = [(k, frac(c)) for k, c in enumerate(y) if c]
        for p, cx in nx:
            for q, cy in ny:
                c = cx * cy
                for k, s in self.bracket_basis(p, q):
                    out[k] += c * s
        return out

    def structure_constants(self) -> dict[tuple[int, int], BracketTerms]:
        """Sparse map (p, q) -> terms of [E_p, E_q], for p < q."""
        return dict(self._table)

    # -- matrix conversions --------------------------------------------

    def vector_to_matrix(self, x: Sequence) -> Matrix:
        m = [[ZERO] * self.n for _ in range(self.n)]
        for k, c in enumerate(x):
            if c:
                i, j = self.pairs[k]
                m[i][j] = frac(c)
                m[j][i] = -frac(c)
        return m

    def matrix_to_vector(self, m: Sequence[Sequence]) -> Vector:
        if len(m) != self.n or any(len(r) != self.n for r in m):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        for i in range(self.n):
            if m[i][i]:
                raise ValueError("matrix has nonzero diagonal")
            for j in range(i + 1, self.n):
                if frac(m[i][j]) != -frac(m[j][i]):
                    raise ValueError("matrix is not skew-symmetric")
        v = zeros(self.dim)
        for k, (i, j) in enumerate(self.pairs):
            v[k] = frac(m[i][j])
        return v

    # -- adjoint maps and the Killing form -----------------------------

    def ad_map(self, p: int) -> dict[int, BracketTerms]:
        """ad(E_p) as a sparse map basis index -> terms of [E_p, E_k]."""
        out = {}
        for k in range(self.dim):
            terms = self.bracket_basis(p, k)
            if terms:
                out[k] = terms
        return out

    def killing_form(self) -> SymmetricForm:
        """K(X, Y) = trace(ad X . ad Y), computed from the sparse ad maps."""
        if self._killing is None:
            ads = [self.ad_map(p) for p in range(self.dim)]
            rows = [[ZERO] * self.dim for _ in range(self.dim)]
            for p in range(self.dim):
                for q in range(p, self.dim):
                    total = ZERO
                    for k, terms_q in ads[q].items():
                        for r, cq in terms_q:
                            for s, cp in ads[p].get(r, ()):
                                if s == k:
                                    total += cq * cp
                    rows[p][q] = total
                    rows[q][p] = total
            self._killing = SymmetricForm.from_rows(rows)
        return self._killing


_cache: dict[int, LieAlgebra] = {}


def build_so(n: int) -> LieAlgebra:
    """Construct (and cache) so(n) with its structure constants."""
    if n not in _cache:
        _cache[n] = LieAlgebra(n)
    return _cache[n]


def bracket(algebra: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """Module-level alias for ``algebra.bracket``."""
    return algebra.bracket(x, y)


def killing_form(algebra: LieAlgebra) -> SymmetricForm:
    """Module-level alias for ``algebra.killing_form``."""
    return algebra.killing_form()
