from fractions import Fraction

import pytest

from gammasym.grading import Grading, block_grading, component, holonomy_span, verify_grading
from gammasym.groups import enumerate_group, from_label, identity
from gammasym.liealg import LieAlgebra, build_so

F = Fraction


def comp_dims(g):
    return {c.label: c.dim for c in g.components()}


def test_component_dims_block_cases():
    assert comp_dims(block_grading(5, (2, 2, 1, 0))) == {"e": 2, "a": 4, "b": 2, "c": 2}
    assert comp_dims(block_grading(5, (2, 1, 1, 1))) == {"e": 1, "a": 3, "b": 3, "c": 3}
    assert comp_dims(block_grading(5, (1, 1, 3, 0))) == {"e": 3, "a": 1, "b": 3, "c": 3}
    assert comp_dims(block_grading(7, (2, 2, 2, 1))) == {"e": 3, "a": 6, "b": 6, "c": 6}
    assert comp_dims(block_grading(13, (3, 3, 3, 4))) == {"e": 15, "a": 21, "b": 21, "c": 21}


def test_components_partition_the_basis():
    g = block_grading(7, (2, 2, 2, 1))
    seen = []
    for c in g.components():
        seen.extend(c.indices)
    assert sorted(seen) == list(range(g.algebra.dim))


def test_partition_validation():
    with pytest.raises(ValueError):
        block_grading(5, (2, 2, 2, 0))
    with pytest.raises(ValueError):
        block_grading(5, (2, 2, 1))
    with pytest.raises(ValueError):
        block_grading(5, (3, 3, -1, 0))


def test_verify_passes_on_block_gradings():
    for n, part in [(5, (2, 2, 1, 0)), (5, (1, 1, 3, 0)), (6, (3, 3, 0, 0)),
                    (7, (2, 2, 2, 1)), (13, (3, 3, 3, 4))]:
        assert verify_grading(block_grading(n, part)) is None


def test_degree_is_multiplicative_on_brackets():
    g = block_grading(6, (2, 2, 1, 1))
    alg = g.algebra
    for p in range(alg.dim):
        for q in range(p + 1, alg.dim):
            expected = g.degree(p) * g.degree(q)
            for k, _ in alg.bracket_basis(p, q):
                assert g.degree(k) == expected


def test_corruption_yields_witness():
    """Flipping one structure constant into the wrong component is caught."""
    alg = LieAlgebra(5)
    g = block_grading(5, (2, 2, 1, 0), algebra=alg)
    p = alg.pair_index[(0, 1)]    # E12, degree e
    q = alg.pair_index[(0, 2)]    # E13, degree a
    wrong = alg.pair_index[(0, 4)]  # E15, degree b
    assert verify_grading(g) is None
    alg._table[(p, q)] = ((wrong, F(-1)),)
    witness = verify_grading(g)
    assert witness is not None
    assert (witness.p, witness.q, witness.term) == (p, q, wrong)
    assert witness.expected == "a"
    assert witness.found == "b"


def test_component_accessor_and_errors():
    g = block_grading(5, (2, 2, 1, 0))
    a = component(g, from_label(2, "a"))
    assert a.dim == 4
    assert [g.algebra.basis_label(k) for k in a.indices] == ["E13", "E14", "E23", "E24"]
    with pytest.raises(ValueError):
        g.component(identity(3))


def test_complement_ordering_is_component_contiguous():
    g = block_grading(5, (2, 1, 1, 1))
    labels = [g.degree(k).label for k in g.complement_indices]
    assert labels == sorted(labels, key=["a", "b", "c"].index)
    # and fixed part is excluded
    assert set(g.complement_indices).isdisjoint(g.fixed_indices)


def test_subblock_names():
    g = block_grading(5, (2, 2, 1, 0))
    alg = g.algebra
    assert g.subblock(alg.pair_index[(0, 2)]) == "A1"   # E13
    assert g.subblock(alg.pair_index[(0, 4)]) == "B1"   # E15
    assert g.subblock(alg.pair_index[(2, 4)]) == "C2"   # E35
    assert g.subblock(alg.pair_index[(0, 1)]) is None   # E12 inside g_e


def test_projections():
    g = block_grading(5, (2, 2, 1, 0))
    v = [F(1)] * g.algebra.dim
    pm = g.project_complement(v)
    pe = g.project_fixed(v)
    assert [a + b for a, b in zip(pm, pe)] == v
    assert g.in_complement(pm)
    assert not g.in_complement(v)


# -- holonomy --------------------------------------------------------------


def test_holonomy_spans_fixed_part():
    expectations = {
        (5, (2, 2, 1, 0)): {"a": 2, "b": 1, "c": 1},
        (5, (2, 1, 1, 1)): {"a": 1, "b": 1, "c": 1},
        (7, (2, 2, 2, 1)): {"a": 3, "b": 3, "c": 3},
    }
    for (n, part), per in expectations.items():
        hs = holonomy_span(block_grading(n, part))
        assert {k: len(v) for k, v in hs.by_component.items()} == per
        assert hs.spans_fixed_part()


def test_holonomy_abelian_toy():
    # so(3) with singleton blocks: g_e = 0 and every bracket leaves m
    hs = holonomy_span(block_grading(3, (1, 1, 1, 0)))
    assert hs.fixed_indices == ()
    assert hs.total == []
    assert hs.spans_fixed_part()


def test_grading_assignment_length_checked():
    alg = build_so(4)
    with pytest.raises(ValueError):
        Grading(alg, 2, tuple(enumerate_group(2)[:3]))
