"""Gradings of so(n) over (Z_2)^k, and the block gradings in particular.

A grading assigns a group element to every basis vector E_ij such that
brackets are additive: [g_x, g_y] lands in g_{xy}.  The block gradings
come from a partition of {1..n} into four consecutive blocks; E_ij picks
up the product of the labels of the blocks containing i and j.  The
identity component g_e (same-block pairs) is the fixed subalgebra, and
the tangent complement m is the sum of the other components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groups import GroupElement, enumerate_group, identity
from .liealg import LieAlgebra, build_so
from .linalg import Vector, row_space_basis, zeros

# sub-block names for the rank-2 block gradings, keyed by the pair of
# block numbers; same-block pairs sit inside g_e and carry no name.
_SUBBLOCK = {
    (0, 1): "A1",
    (2, 3): "A2",
    (0, 2): "B1",
    (1, 3): "B2",
    (0, 3): "C1",
    (1, 2): "C2",
}


@dataclass(frozen=True)
class ComponentView:
    """One homogeneous component: its label and basis indices."""

    label: str
    indices: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class GradingViolation:
    """First basis pair whose bracket leaves the expected component."""

    p: int
    q: int
    term: int
    expected: str
    found: str


@dataclass(frozen=True)
class Grading:
    """A group-valued degree assignment on the basis of an algebra."""

    algebra: LieAlgebra
    rank: int
    assignment: tuple[GroupElement, ...]
    partition: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.assignment) != self.algebra.dim:
            raise ValueError("assignment length does not match algebra dimension")

    def degree(self, k: int) -> GroupElement:
        return self.assignment[k]

    def component(self, gamma: GroupElement) -> ComponentView:
        if gamma.rank != self.rank:
            raise ValueError(f"group element of rank {gamma.rank} in rank-{self.rank} grading")
        idx = tuple(k for k, g in enumerate(self.assignment) if g == gamma)
        return ComponentView(gamma.label, idx)

    def components(self) -> list[ComponentView]:
        return [self.component(g) for g in enumerate_group(self.rank)]

    @property
    def fixed_indices(self) -> tuple[int, ...]:
        return self.component(identity(self.rank)).indices

    @property
    def complement_indices(self) -> tuple[int, ...]:
        """Basis indices of m, ordered component by component."""
        out: list[int] = []
        for g in enumerate_group(self.rank)[1:]:
            out.extend(self.component(g).indices)
        return tuple(out)

    def subblock(self, k: int) -> str | None:
        """Name of the rectangular sub-block holding basis vector k, if any."""
        if self.partition is None or self.rank != 2:
            return None
        i, j = self.algebra.pairs[k]
        bi, bj = self._block_of(i), self._block_of(j)
        return _SUBBLOCK.get((min(bi, bj), max(bi, bj)))

    def _block_of(self, i: int) -> int:
        assert self.partition is not None
        stop = 0
        for b, r in enumerate(self.partition):
            stop += r
            if i < stop:
                return b
        raise ValueError(f"index {i} outside partition {self.partition}")

    # -- projections ----------------------------------------------------

    def project_fixed(self, x: Sequence) -> Vector:
        keep = set(self.fixed_indices)
        return [Fraction(c) if k in keep else Fraction(0) for k, c in enumerate(x)]

    def project_complement(self, x: Sequence) -> Vector:
        keep = set(self.complement_indices)
        return [Fraction(c) if k in keep else Fraction(0) for k, c in enumerate(x)]

    def in_complement(self, x: Sequence) -> bool:
        fixed = set(self.fixed_indices)
        return not any(c and k in fixed for k, c in enumerate(x))


def block_grading(
    n: int, partition: Sequence[int], algebra: LieAlgebra | None = None
) -> Grading:
    """The (Z_2)^2 grading of so(n) defined by four consecutive blocks.

    ``partition`` are four nonnegative block sizes summing to n.  Blocks
    are labeled e, a, b, c in order; the degree of E_ij is the product of
    the labels of the blocks containing i and j, which makes the bracket
    additivity automatic.
    """
    part = tuple(int(r) for r in partition)
    if len(part) != 4:
        raise ValueError(f"partition must have 4 parts, got {len(part)}")
    if any(r < 0 for r in part):
        raise ValueError(f"partition parts must be >= 0: {part}")
    if sum(part) != n:
        raise ValueError(f"partition {part} does not sum to n = {n}")
    alg = algebra if algebra is not None else build_so(n)
    if alg.n != n:
        raise ValueError("algebra size does not match n")
    labels = enumerate_group(2)
    block = []
    for b, r in enumerate(part):
        block.extend([b] * r)
    assignment = tuple(
        labels[block[i]] * labels[block[j]] for (i, j) in alg.pairs
    )
    return Grading(alg, 2, assignment, part)


def verify_grading(grading: Grading) -> GradingViolation | None:
    """Check bracket additivity on every basis pair.

    Returns None when every structure constant respects the grading, or
    the first (p, q, term) triple that does not.
    """
    alg = grading.algebra
    assign = grading.assignment
    for p in range(alg.dim):
        for q in range(p + 1, alg.dim):
            expected = assign[p] * assign[q]
            for k, _ in alg.bracket_basis(p, q):
                if assign[k] != expected:
                    return GradingViolation(
                        p, q, k, expected.label, assign[k].label
                    )
    return None


def component(grading: Grading, gamma: GroupElement) -> ComponentView:
    """Module-level alias for ``grading.component``."""
    return grading.component(gamma)


@dataclass(frozen=True)
class HolonomySpan:
    """Span of the brackets [g_x, g_x] inside g_e, per component and total.

    Vectors are in local coordinates over the g_e basis (one entry per
    index in ``fixed_indices``).
    """

    fixed_indices: tuple[int, ...]
    by_component: dict[str, list[Vector]]
    total: list[Vector]

    @property
    def total_dim(self) -> int:
        return len(self.total)

    def spans_fixed_part(self) -> bool:
        return self.total_dim == len(self.fixed_indices)


def holonomy_span(grading: Grading) -> HolonomySpan:
    """Exact span of all [X, Y] with X, Y in one non-identity component.

    For a verified grading these brackets lie in g_e; the function returns
    canonical bases for each component's contribution and for their sum.
    """
    alg = grading.algebra
    fixed = grading.fixed_indices
    local = {k: t for t, k in enumerate(fixed)}
    per: dict[str, list[Vector]] = {}
    pooled: list[Vector] = []
    for g in enumerate_group(grading.rank)[1:]:
        comp = grading.component(g)
        vecs = []
        for a in range(comp.dim):
            for b in range(a + 1, comp.dim):
                terms = alg.bracket_basis(comp.indices[a], comp.indices[b])
                if not terms:
                    continue
                v = zeros(len(fixed))
                for k, c in terms:
                    if k not in local:
                        raise ValueError(
                            f"bracket of component {g.label} leaves g_e; "
                            "grading does not verify"
                        )
                    v[local[k]] = c
                vecs.append(v)
        basis = row_space_basis(vecs)
        per[g.label] = basis
        pooled.extend(basis)
    return HolonomySpan(fixed, per, row_space_basis(pooled))
