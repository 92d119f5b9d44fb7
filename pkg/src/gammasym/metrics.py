"""Invariant inner products on the tangent complement of a graded so(n).

``invariant_family`` solves, exactly, for all symmetric bilinear forms B
on m = sum of the non-identity components such that

    B([Z, X], Y) + B(X, [Z, Y]) = 0   for all Z in g_e,

with distinct components B-orthogonal.  The solution set is a finite
dimensional rational vector space; its canonical basis is returned with
readable parameter names (t_* for directions touching the diagonal, u_*
for purely off-diagonal ones).

``naturally_reductive_subfamily`` cuts the family down by the algebraic
condition B([X, Y]_m, Z) + B([X, Z]_m, Y) = 0 on all of m, which is
exactly the condition for the torsion-free canonical connection to be
the Levi-Civita connection of the metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Iterator, Sequence

from .grading import Grading, verify_grading
from .groups import GroupElement, enumerate_group
from .linalg import (
    ONE,
    RowReducer,
    SymmetricForm,
    Vector,
    ZERO,
    congruence_signature,
    char_poly,
    frac,
    solve_matrix,
    zeros,
)

_SUBBLOCK_ORDER = {"A1": 0, "A2": 1, "B1": 2, "B2": 3, "C1": 4, "C2": 5}


@dataclass
class FormFamily:
    """A basis of invariant symmetric forms on m, in carrier coordinates.

    ``carrier`` lists the algebra basis indices of m, component by
    component; every SymmetricForm in ``basis`` lives on these
    coordinates.  ``parent_coords`` is set on refined families and gives
    each basis form as a coefficient vector over the parent's basis.
    """

    grading: Grading
    carrier: tuple[int, ...]
    names: list[str]
    supports: list[str]
    basis: list[SymmetricForm]
    parent: "FormFamily | None" = None
    parent_coords: list[Vector] | None = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def block_slices(self) -> dict[str, tuple[int, int]]:
        """Carrier index range of each non-identity component."""
        out = {}
        start = 0
        for g in enumerate_group(self.grading.rank)[1:]:
            d = self.grading.component(g).dim
            out[g.label] = (start, start + d)
            start += d
        return out

    def diagonal_parameters(self) -> list[int]:
        """Positions of the basis forms with diagonal support."""
        return [k for k, s in enumerate(self.supports) if ":diag:" in s]


def _component_ad_maps(grading: Grading, comp_indices: Sequence[int]):
    """ad(Z) for each fixed-part basis Z, in component-local coordinates."""
    alg = grading.algebra
    local = {k: t for t, k in enumerate(comp_indices)}
    maps = []
    for z in grading.fixed_indices:
        m: dict[int, list[tuple[int, Fraction]]] = {}
        for t, k in enumerate(comp_indices):
            terms = []
            for r, c in alg.bracket_basis(z, k):
                if r not in local:
                    raise ValueError("grading does not verify: ad(g_e) leaves a component")
                terms.append((local[r], c))
            if terms:
                m[t] = terms
        maps.append(m)
    return maps


def _classify(form: SymmetricForm, grading: Grading, carrier: Sequence[int]):
    """(component position, sub-block ordinal, diag flag, support string)."""
    order = {g.label: p for p, g in enumerate(enumerate_group(grading.rank))}
    first = None
    has_diag = False
    for i in range(form.dim):
        for j in range(i, form.dim):
            if form.entry(i, j):
                if first is None:
                    first = i
                if i == j:
                    has_diag = True
    if first is None:
        raise ValueError("zero form in family basis")
    label = grading.degree(carrier[first]).label
    sub = grading.subblock(carrier[first]) or label
    kind = "diag" if has_diag else "offdiag"
    return (
        order[label],
        _SUBBLOCK_ORDER.get(sub, 0),
        0 if has_diag else 1,
        f"{label}:{kind}:{sub}",
        sub,
    )


def invariant_family(grading: Grading) -> FormFamily:
    """All ad(g_e)-invariant symmetric forms on m, components orthogonal.

    Per component the unknowns are the entries B(x, y), x <= y; each
    invariance constraint couples at most two of them, so the system is
    solved as one sparse exact elimination.  The basis is canonical
    (RREF nullspace) and presented in component / sub-block order.
    """
    bad = verify_grading(grading)
    if bad is not None:
        raise ValueError(f"not a grading: bracket ({bad.p},{bad.q}) lands in {bad.found}")
    comps = [grading.component(g) for g in enumerate_group(grading.rank)[1:]]
    carrier = grading.complement_indices
    m_dim = len(carrier)

    # global unknown numbering: (component, local pair x <= y)
    offsets = []
    total = 0
    for comp in comps:
        offsets.append(total)
        total += comp.dim * (comp.dim + 1) // 2

    def unknown(off: int, d: int, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        return off + x * d - x * (x - 1) // 2 + (y - x)

    reducer = RowReducer(total)
    for comp, off in zip(comps, offsets):
        d = comp.dim
        for admap in _component_ad_maps(grading, comp.indices):
            for x in range(d):
                ax = admap.get(x, ())
                for y in range(x, d):
                    ay = admap.get(y, ())
                    if not ax and not ay:
                        continue
                    row: dict[int, Fraction] = {}
                    for r, c in ax:
                        col = unknown(off, d, r, y)
                        row[col] = row.get(col, ZERO) + c
                    for r, c in ay:
                        col = unknown(off, d, x, r)
                        row[col] = row.get(col, ZERO) + c
                    if row:
                        reducer.insert(row)
    solutions = reducer.nullspace_basis()

    comp_start = {}
    start = 0
    for comp in comps:
        comp_start[comp.label] = start
        start += comp.dim

    forms = []
    for sol in solutions:
        rows = [[ZERO] * m_dim for _ in range(m_dim)]
        for comp, off in zip(comps, offsets):
            d = comp.dim
            base = comp_start[comp.label]
            u = off
            for x in range(d):
                for y in range(x, d):
                    v = sol[u]
                    u += 1
                    if v:
                        rows[base + x][base + y] = v
                        rows[base + y][base + x] = v
        forms.append(SymmetricForm.from_rows(rows))

    keyed = []
    for pos, f in enumerate(forms):
        cpos, sbord, dflag, support, sub = _classify(f, grading, carrier)
        keyed.append(((cpos, sbord, dflag, pos), f, support, sub, dflag))
    keyed.sort(key=lambda item: item[0])

    names: list[str] = []
    supports: list[str] = []
    basis: list[SymmetricForm] = []
    used: dict[str, int] = {}
    for _, f, support, sub, dflag in keyed:
        stem = ("t_" if dflag == 0 else "u_") + sub
        used[stem] = used.get(stem, 0) + 1
        names.append(stem if used[stem] == 1 else f"{stem}_{used[stem]}")
        supports.append(support)
        basis.append(f)
    return FormFamily(grading, carrier, names, supports, basis)


def evaluate_family(family: FormFamily, values: Sequence) -> SymmetricForm:
    """The member of the family at the given rational parameter values."""
    if len(values) != family.dimension:
        raise ValueError(
            f"expected {family.dimension} parameter values, got {len(values)}"
        )
    d = len(family.carrier)
    rows = [[ZERO] * d for _ in range(d)]
    for v, f in zip(values, family.basis):
        fv = frac(v)
        if not fv:
            continue
        for i in range(d):
            for j in range(d):
                e = f.entry(i, j)
                if e:
                    rows[i][j] += fv * e
    return SymmetricForm.from_rows(rows)


def _complement_brackets(family: FormFamily):
    """[E_x, E_y]_m in carrier-local sparse form, for x < y."""
    grading = family.grading
    alg = grading.algebra
    carrier = family.carrier
    local = {k: t for t, k in enumerate(carrier)}
    pairs: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
    for x in range(len(carrier)):
        for y in range(x + 1, len(carrier)):
            terms = tuple(
                (local[r], c)
                for r, c in alg.bracket_basis(carrier[x], carrier[y])
                if r in local
            )
            if terms:
                pairs[(x, y)] = terms
    return pairs


def _pair_m(pairs, x: int, y: int):
    if x == y:
        return ()
    if x < y:
        return pairs.get((x, y), ())
    return tuple((l, -c) for l, c in pairs.get((y, x), ()))


def naturally_reductive_subfamily(family: FormFamily) -> FormFamily:
    """Members whose torsion-free canonical connection is metric-derived.

    Imposes B([X,Y]_m, Z) + B([X,Z]_m, Y) = 0 over all basis triples of m;
    linear in the family parameters.  The result carries ``parent_coords``:
    each refined basis form as a coefficient vector over the parent basis.
    """
    pairs = _complement_brackets(family)
    nf = family.dimension
    m_dim = len(family.carrier)
    # sparse rows of each basis form, for cheap lookups
    sparse_forms = [
        [
            {j: f.entry(i, j) for j in range(m_dim) if f.entry(i, j)}
            for i in range(m_dim)
        ]
        for f in family.basis
    ]
    reducer = RowReducer(nf)
    for x in range(m_dim):
        for y in range(m_dim):
            bxy = _pair_m(pairs, x, y)
            for z in range(y, m_dim):
                bxz = _pair_m(pairs, x, z)
                if not bxy and not bxz:
                    continue
                row: dict[int, Fraction] = {}
                for k in range(nf):
                    fk = sparse_forms[k]
                    val = ZERO
                    for l, c in bxy:
                        e = fk[l].get(z)
                        if e:
                            val += c * e
                    for l, c in bxz:
                        e = fk[l].get(y)
                        if e:
                            val += c * e
                    if val:
                        row[k] = val
                if row:
                    reducer.insert(row)
            if reducer.rank == nf:
                break
        if reducer.rank == nf:
            break
    coords = reducer.nullspace_basis()
    basis = [evaluate_family(family, c) for c in coords]
    names = [f"s{k + 1}" for k in range(len(basis))]
    supports = []
    for f in basis:
        _, _, _, support, _ = _classify(f, family.grading, family.carrier)
        supports.append(support)
    return FormFamily(
        family.grading,
        family.carrier,
        names,
        supports,
        basis,
        parent=family,
        parent_coords=coords,
    )


def is_adapted(form: SymmetricForm, grading: Grading) -> bool:
    """Whether the form satisfies the natural-reductivity identity on m."""
    carrier = grading.complement_indices
    if form.dim != len(carrier):
        raise ValueError("form dimension does not match the complement")
    fam = FormFamily(grading, carrier, ["B"], ["?"], [form])
    pairs = _complement_brackets(fam)
    m_dim = len(carrier)
    for x in range(m_dim):
        for y in range(m_dim):
            bxy = _pair_m(pairs, x, y)
            for z in range(y, m_dim):
                bxz = _pair_m(pairs, x, z)
                total = ZERO
                for l, c in bxy:
                    e = form.entry(l, z)
                    if e:
                        total += c * e
                for l, c in bxz:
                    e = form.entry(l, y)
                    if e:
                        total += c * e
                if total:
                    return False
    return True


@dataclass
class SignatureReport:
    """Outcome of a signature scan at concrete parameter values."""

    parameter_names: list[str]
    parameter_values: Vector
    inertia: tuple[int, int, int]
    lorentzian: bool

    def assignment(self) -> dict[str, Fraction]:
        return dict(zip(self.parameter_names, self.parameter_values))


def signature_scan(family: FormFamily) -> Iterator[SignatureReport]:
    """Inertia of every +-1 assignment on the diagonal-supported parameters.

    Off-diagonal parameters are held at 0.  Sign vectors are enumerated
    in lexicographic order with -1 before +1, so the first Lorentzian
    assignment reported by ``lorentzian_search`` is well defined.
    """
    diag = family.diagonal_parameters()
    m_dim = len(family.carrier)
    for signs in iter_product((Fraction(-1), ONE), repeat=len(diag)):
        values = zeros(family.dimension)
        for pos, s in zip(diag, signs):
            values[pos] = s
        form = evaluate_family(family, values)
        inertia = congruence_signature(form)
        yield SignatureReport(
            list(family.names),
            values,
            inertia,
            inertia == (m_dim - 1, 1, 0),
        )


def lorentzian_search(family: FormFamily) -> SignatureReport | None:
    """First Lorentzian member among the +-1 diagonal assignments, if any."""
    for report in signature_scan(family):
        if report.lorentzian:
            return report
    return None


@dataclass
class KillingMetricOperator:
    """B-vs-Killing comparison operator on one component g_gamma.

    ``matrix`` is the unique local operator with B(beta X, Y) = K(X, Y);
    it commutes with every ad(Z), Z in g_e, whenever B is invariant.
    """

    gamma: GroupElement
    matrix: list[list[Fraction]]
    char_poly: list[Fraction]
    commutes: bool

    def diagonal(self) -> list[Fraction]:
        return [self.matrix[i][i] for i in range(len(self.matrix))]


def killing_metric_operator(
    grading: Grading, form: SymmetricForm, gamma: GroupElement
) -> KillingMetricOperator:
    """Solve B_gamma . beta = K_gamma on the component of ``gamma``.

    ``form`` is a member of the invariant family in carrier coordinates.
    Degenerate restrictions are rejected; the commutation of beta with
    the restricted ad(g_e) action is checked exactly and reported.
    """
    if gamma.is_identity():
        raise ValueError("operator is defined on the non-identity components")
    comp = grading.component(gamma)
    if comp.dim == 0:
        raise ValueError(f"component {gamma.label} is zero")
    carrier = grading.complement_indices
    pos = [carrier.index(k) for k in comp.indices]
    b_rows = form.restrict(pos).rows()
    k_rows = grading.algebra.killing_form().restrict(comp.indices).rows()
    if congruence_signature(b_rows)[2] != 0:
        raise ValueError(f"form is degenerate on component {gamma.label}")
    beta = solve_matrix(b_rows, k_rows)

    d = comp.dim
    commutes = True
    for admap in _component_ad_maps(grading, comp.indices):
        # ad as a dense local matrix, column per basis vector
        a = [[ZERO] * d for _ in range(d)]
        for src, terms in admap.items():
            for dst, c in terms:
                a[dst][src] = c
        left = [[sum((a[i][k] * beta[k][j] for k in range(d)), ZERO) for j in range(d)] for i in range(d)]
        right = [[sum((beta[i][k] * a[k][j] for k in range(d)), ZERO) for j in range(d)] for i in range(d)]
        if left != right:
            commutes = False
            break
    return KillingMetricOperator(gamma, beta, char_poly(beta), commutes)
