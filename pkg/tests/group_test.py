# group_test.py
# - FiniteGroup table validation, subgroups and quotients
# - serialization does not depend on which properties were read
# - standard constructions and abelian invariants
# - homomorphisms, right actions and isomorphism search

import pytest

from wpgl.group import (
    FiniteGroup,
    GroupHom,
    RightAction,
    are_isomorphic,
    cyclic,
    dihedral,
    direct_product,
    extend_homomorphism,
    find_isomorphism,
    quaternion,
    symmetric,
    trivial,
)
from wpgl.util.wpgl_types import GroupTableError, GroupTooLargeError, HomomorphismError
from tests.group_fixtures import alternating3, transposition


def test_invalid_tables():
    cases = [
        ([[0, 1]], "shape"),
        ([[0, 1], [1, 2]], "closure"),
        ([[1, 0], [0, 1]], "identity"),
        ([[0, 1, 2], [1, 1, 2], [2, 2, 2]], "inverse"),
        ([[0, 1, 2], [1, 0, 0], [2, 0, 0]], "associativity"),
    ]
    for table, law in cases:
        with pytest.raises(GroupTableError) as err:
            FiniteGroup(table)
        assert err.value.law == law, f"{table} should fail {law}, failed {err.value.law}"
    with pytest.raises(GroupTableError):
        FiniteGroup(cyclic(4).table, generators=[2])


def test_max_group_order(monkeypatch):
    monkeypatch.setenv("WPGL_MAX_GROUP_ORDER", "3")
    with pytest.raises(GroupTooLargeError):
        cyclic(4)
    assert cyclic(3).order == 3


def test_constructions():
    assert cyclic(6).is_abelian()
    assert cyclic(6).element_orders == [1, 6, 3, 2, 3, 6]
    d4 = dihedral(4)
    assert d4.order == 8 and not d4.is_abelian()
    assert d4.center() == [0, 2]
    s3 = symmetric(3)
    assert s3.order == 6 and not s3.is_abelian()
    assert alternating3(s3) == [0, 3, 4]
    assert s3.element_order(transposition(s3)) == 2
    q8 = quaternion()
    assert q8.center() == [0, 1]
    assert sorted(q8.element_orders) == [1, 2, 4, 4, 4, 4, 4, 4]
    product = direct_product(cyclic(2), cyclic(3))
    # (x, h) -> 3x + h
    assert product.mul(3, 1) == 4
    assert trivial().order == 1


def test_labels():
    assert trivial().label() == "1"
    assert cyclic(6).label() == "C6"
    assert direct_product(cyclic(2), cyclic(2)).label() == "C2xC2"
    assert direct_product(cyclic(2), cyclic(4)).label() == "C2xC4"
    assert direct_product(cyclic(4), cyclic(6)).label() == "C2xC12"
    assert symmetric(3).label() == "order-6 nonabelian"
    assert cyclic(12).abelian_invariants() == [12]


def test_subgroups_and_quotients():
    s3 = symmetric(3)
    a3 = alternating3(s3)
    assert s3.is_normal(a3)
    assert not s3.is_normal([0, transposition(s3)])
    sub, embedding = s3.subgroup(a3)
    assert sub.order == 3 and embedding == a3
    quotient, projection = s3.quotient(a3)
    assert quotient.order == 2
    assert [projection[x] for x in a3] == [0, 0, 0]
    with pytest.raises(GroupTableError):
        s3.quotient([0, transposition(s3)])
    with pytest.raises(GroupTableError):
        s3.subgroup([0, 3])
    assert cyclic(4).cosets([0, 2]) == [[0, 2], [1, 3]]


def test_homomorphisms():
    c2, c3, c4 = cyclic(2), cyclic(3), cyclic(4)
    f = GroupHom.checked(c4, c2, [0, 1, 0, 1])
    assert f.kernel() == [0, 2]
    assert f.image() == [0, 1]
    assert f.is_surjective() and not f.is_injective()
    assert f.compose(GroupHom.identity(c4)) == f
    with pytest.raises(HomomorphismError) as err:
        GroupHom.checked(c4, c2, [0, 1, 1, 1])
    assert err.value.witness
    with pytest.raises(HomomorphismError):
        GroupHom(c4, c2, [0, 1, 2, 1])
    with pytest.raises(HomomorphismError):
        GroupHom(c4, c2, [0, 1])
    assert extend_homomorphism(c4, c2, [1], [1]) == f
    assert extend_homomorphism(c3, c2, [1], [1]) is None
    with pytest.raises(HomomorphismError):
        extend_homomorphism(c4, c2, [2], [0])


def test_isomorphism_search():
    assert are_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3)))
    assert are_isomorphic(dihedral(3), symmetric(3))
    assert not are_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2)))
    assert not are_isomorphic(dihedral(4), quaternion())
    iso = find_isomorphism(dihedral(3), symmetric(3))
    assert iso.is_injective() and iso.is_homomorphism()


def test_right_actions():
    s3 = symmetric(3)
    assert RightAction.conjugation(s3).is_action()
    assert RightAction.trivial(cyclic(3), cyclic(2)).is_action()
    inversion = RightAction(cyclic(3), cyclic(2), [[0, 0], [1, 2], [2, 1]])
    assert inversion.is_action()
    collapsing = RightAction(cyclic(3), cyclic(2), [[0, 0], [1, 2], [2, 2]])
    law, _ = collapsing.witness()
    assert law == "composition"
    # C3 acted on through C6 -> C2
    through = RightAction.through(cyclic(3), cyclic(6), GroupHom.checked(cyclic(6), cyclic(2), [0, 1, 0, 1, 0, 1]), inversion)
    assert through.is_action()
    assert through(1, 3) == 2


def test_to_json_is_stable_under_generator_lookup():
    table = direct_product(cyclic(2), cyclic(2)).table.tolist()
    group = FiniteGroup(table)
    before = group.to_json()
    assert group.generators == (1, 2)
    assert group.to_json() == before == {"order": 4, "table": table}
    # generators passed in are kept
    c4 = cyclic(4)
    assert c4.to_json()["generators"] == [1]
    assert c4.generators == (1,)
