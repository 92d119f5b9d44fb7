import random

import pytest

from gammasym.groups import GroupElement, enumerate_group, from_label, identity, product


def test_klein_labels():
    assert [g.label for g in enumerate_group(2)] == ["e", "a", "b", "c"]


def test_klein_product_table():
    e, a, b, c = enumerate_group(2)
    assert a * b == c
    assert b * c == a
    assert a * c == b
    assert a * a == e
    assert e * c == c


def test_identity_and_involution():
    for rank in (1, 2, 3, 4):
        e = identity(rank)
        for g in enumerate_group(rank):
            assert product(g, g) == e
            assert product(g, e) == g


def test_enumerate_size_and_distinct():
    for rank in (1, 2, 3, 5):
        elems = enumerate_group(rank)
        assert len(elems) == 2**rank
        assert len(set(elems)) == 2**rank
        assert elems[0].is_identity()


def test_commutativity_random():
    rng = random.Random(0)
    for _ in range(50):
        rank = rng.randint(1, 5)
        x = GroupElement(rank, rng.randrange(2**rank))
        y = GroupElement(rank, rng.randrange(2**rank))
        assert product(x, y) == product(y, x)


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        product(GroupElement(2, 1), GroupElement(3, 1))


def test_bit_labels_above_rank_two():
    g = GroupElement(3, 5)
    assert g.label == "101"
    assert from_label(3, "101") == g


def test_from_label_roundtrip_klein():
    for g in enumerate_group(2):
        assert from_label(2, g.label) == g


def test_bad_construction():
    with pytest.raises(ValueError):
        GroupElement(2, 4)
    with pytest.raises(ValueError):
        GroupElement(0, 0)
    with pytest.raises(ValueError):
        from_label(2, "q")
