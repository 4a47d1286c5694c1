# crossed_module_test.py
# - check_crossed_module on the corpus and on CM1 / CM2 failures
# - pi0, pi1 and the conjugation identity on the image of the boundary
# - strict morphism checks
#
# To use:
# from tests.group_fixtures import crossed_module_corpus
# report = check_crossed_module(xm)

import pytest

from wpgl.group import CrossedModule, GroupHom, RightAction, StrictMorphism, check_crossed_module, conjugation_on_image_agrees, cyclic, pi0, pi1, symmetric, trivial
from wpgl.util.wpgl_types import Axiom, InvalidCrossedModuleError, StrictMorphismError
from tests.group_fixtures import alternating3, crossed_module_corpus, identity_morphism, strict_morphism_corpus


def test_corpus_is_valid():
    for name, xm in crossed_module_corpus():
        report = check_crossed_module(xm)
        assert report.ok, f"{name}: {report.lines()}"
        assert conjugation_on_image_agrees(xm), f"{name}: G0 conjugation on im d disagrees with the action"
        group, embedding = pi1(xm)
        assert group.is_abelian(), f"{name}: pi1 is not abelian"
        assert group.order * xm.g0.order == pi0(xm)[0].order * xm.g1.order, f"{name}: |pi1| |G0| != |pi0| |G1|"
        assert len(embedding) == group.order


def test_cm1_failure():
    # C3 onto A3 inside S3 with the trivial action: d is not equivariant under transpositions
    s3 = symmetric(3)
    xm = CrossedModule.trivial_action(cyclic(3), s3, alternating3(s3))
    report = check_crossed_module(xm)
    assert not report.ok
    assert report.axioms() == {Axiom.CM1}
    # b in {1, 2} against each of the three transpositions
    assert len(report.violations) == 6
    assert report.to_json()["valid"] is False
    with pytest.raises(InvalidCrossedModuleError):
        pi0(xm)


def test_cm2_failure():
    s3 = symmetric(3)
    xm = CrossedModule.trivial_action(s3, trivial(), [0] * 6)
    report = check_crossed_module(xm)
    assert report.axioms() == {Axiom.CM2}
    # one violation per non-commuting ordered pair: 36 - 6 * 3 conjugacy classes
    assert len(report.violations) == 18
    b, c = report.violations[0].witness
    assert s3.mul(b, c) != s3.mul(c, b)


def test_hom_and_action_failures():
    c2, c4 = cyclic(2), cyclic(4)
    bad_boundary = CrossedModule(c4, c2, GroupHom(c4, c2, [0, 1, 1, 1]), RightAction.trivial(c4, c2))
    assert check_crossed_module(bad_boundary).axioms() == {Axiom.HOM}
    bad_action = CrossedModule(c4, c2, GroupHom(c4, c2, [0, 1, 0, 1]), RightAction(c4, c2, [[0, 1], [1, 1], [2, 2], [3, 3]]))
    assert check_crossed_module(bad_action).axioms() == {Axiom.ACTION}


def test_homotopy_groups():
    corpus = dict(crossed_module_corpus())
    group, embedding = pi1(corpus["[C3 -> 1]"])
    assert group.order == 3 and embedding == [0, 1, 2]
    assert pi0(corpus["[C3 -> 1]"])[0].order == 1
    assert pi1(corpus["[C2 -> C4] central"])[0].order == 1
    quotient, projection = pi0(corpus["[C2 -> C4] central"])
    assert quotient.order == 2 and projection == [0, 1, 0, 1]
    assert pi0(corpus["[A3 -> S3] normal"])[0].order == 2
    assert pi0(corpus["[S3 -> S3] conjugation"])[0].order == 1
    assert pi1(corpus["[C2 -> C2] trivial"])[0].order == 2
    assert pi0(corpus["[C3 -> D6] normal"])[0].order == 4


def test_strict_morphisms():
    for name, morphism in strict_morphism_corpus():
        assert morphism.check() is morphism, name


def test_strict_morphism_failures():
    central = CrossedModule.trivial_action(cyclic(2), cyclic(4), [0, 2])
    collapsed = StrictMorphism(central, central, GroupHom.identity(cyclic(2)), GroupHom.trivial(cyclic(4), cyclic(4)))
    with pytest.raises(StrictMorphismError) as err:
        collapsed.check()
    assert err.value.reason == "boundaries do not commute" and err.value.witness == (1,)

    not_hom = StrictMorphism(central, central, GroupHom.identity(cyclic(2)), GroupHom(cyclic(4), cyclic(4), [0, 1, 1, 1]))
    with pytest.raises(StrictMorphismError):
        not_hom.check()

    s3_conj = CrossedModule.conjugation(symmetric(3))
    c3_conj = CrossedModule.conjugation(cyclic(3))
    with pytest.raises(StrictMorphismError):
        StrictMorphism(c3_conj, s3_conj, GroupHom.identity(cyclic(3)), GroupHom.identity(cyclic(3))).check()
    assert identity_morphism(s3_conj).check()
