# group_fixtures.py
# - small finite groups, crossed modules, strict morphisms, butterflies and central extensions
#
# To use:
# from tests.group_fixtures import c4_butterfly, crossed_module_corpus, strict_morphism_corpus

from wpgl.butterfly import Butterfly, from_strict_morphism
from wpgl.group import (
    CrossedModule,
    FiniteGroup,
    GroupHom,
    RightAction,
    StrictMorphism,
    central_extension_from_quotient,
    cyclic,
    dihedral,
    direct_product,
    extend_homomorphism,
    quaternion,
    symmetric,
    trivial,
)


def alternating3(s3: FiniteGroup) -> list[int]:
    return [x for x in s3.elements if s3.element_order(x) != 2]


def transposition(s3: FiniteGroup) -> int:
    return next(x for x in s3.elements if s3.element_order(x) == 2)


def normal_inclusion(group: FiniteGroup, normal) -> CrossedModule:
    """[N -> G] for a normal subgroup N, G acting by conjugation."""
    sub, embedding = group.subgroup(normal)
    index = {x: k for k, x in enumerate(embedding)}
    action = [[index[group.conjugate(x, a)] for a in group.elements] for x in embedding]
    return CrossedModule(sub, group, GroupHom(sub, group, embedding), RightAction(sub, group, action))


def unit_xmod(group: FiniteGroup) -> CrossedModule:
    """[1 -> G]."""
    return CrossedModule.trivial_action(trivial(), group, [0])


def abelian_to_trivial(group: FiniteGroup) -> CrossedModule:
    """[A -> 1] for an abelian group A."""
    return CrossedModule.trivial_action(group, trivial(), [0] * group.order)


def c2_trivial_xmod() -> CrossedModule:
    """[C2 -> C2] with trivial boundary and trivial action."""
    return CrossedModule.trivial_action(cyclic(2), cyclic(2), [0, 0])


def crossed_module_corpus() -> list[tuple[str, CrossedModule]]:
    s3 = symmetric(3)
    d4 = dihedral(4)
    return [
        ("[C2 -> C2] trivial", c2_trivial_xmod()),
        ("[C2 -> C4] central", CrossedModule.trivial_action(cyclic(2), cyclic(4), [0, 2])),
        ("[C3 -> 1]", abelian_to_trivial(cyclic(3))),
        ("[C2xC2 -> 1]", abelian_to_trivial(direct_product(cyclic(2), cyclic(2)))),
        ("[1 -> S3]", unit_xmod(s3)),
        ("[1 -> C6]", unit_xmod(cyclic(6))),
        ("[C3 -> C3] conjugation", CrossedModule.conjugation(cyclic(3))),
        ("[C4 -> C4] conjugation", CrossedModule.conjugation(cyclic(4))),
        ("[S3 -> S3] conjugation", CrossedModule.conjugation(s3)),
        ("[D4 -> D4] conjugation", CrossedModule.conjugation(d4)),
        ("[Q8 -> Q8] conjugation", CrossedModule.conjugation(quaternion())),
        ("[A3 -> S3] normal", normal_inclusion(s3, alternating3(s3))),
        ("[Z(D4) -> D4] normal", normal_inclusion(d4, d4.center())),
        ("[C3 -> D6] normal", normal_inclusion(dihedral(6), [2, 4, 0])),
    ]


def identity_morphism(xm: CrossedModule) -> StrictMorphism:
    return StrictMorphism(xm, xm, GroupHom.identity(xm.g1), GroupHom.identity(xm.g0))


def strict_morphism_corpus() -> list[tuple[str, StrictMorphism]]:
    s3 = symmetric(3)
    c2, c3, c4 = cyclic(2), cyclic(3), cyclic(4)
    morphisms = [(f"identity on {name}", identity_morphism(xm)) for name, xm in crossed_module_corpus()]

    a3 = normal_inclusion(s3, alternating3(s3))
    s3_conj = CrossedModule.conjugation(s3)
    morphisms.append(("[A3 -> S3] into [S3 -> S3]", StrictMorphism(a3, s3_conj, GroupHom(a3.g1, s3, alternating3(s3)), GroupHom.identity(s3))))

    tau = transposition(s3)
    morphisms.append(("[1 -> C2] into [1 -> S3]", StrictMorphism(unit_xmod(c2), unit_xmod(s3), GroupHom.trivial(trivial(), trivial()), GroupHom(c2, s3, [0, tau]))))
    rotation = extend_homomorphism(c3, s3, [1], [alternating3(s3)[1]])
    morphisms.append(("[1 -> C3] into [1 -> S3]", StrictMorphism(unit_xmod(c3), unit_xmod(s3), GroupHom.trivial(trivial(), trivial()), rotation)))

    morphisms.append(("[C3 -> 1] onto [1 -> 1]", StrictMorphism(abelian_to_trivial(c3), unit_xmod(trivial()), GroupHom.trivial(c3, trivial()), GroupHom.trivial(trivial(), trivial()))))
    c4_conj = CrossedModule.conjugation(c4)
    morphisms.append(("[C4 -> C4] onto [C4 -> 1]", StrictMorphism(c4_conj, abelian_to_trivial(c4), GroupHom.identity(c4), GroupHom.trivial(c4, trivial()))))
    return morphisms


def mutation_corpus() -> list[tuple[str, Butterfly]]:
    """Valid butterflies on which every single-entry mutation of a map is invalid.

    Changing one value of a homomorphism on a group of order >= 3 never yields a
    homomorphism, since the remaining elements still generate the group. The only
    order-2 domain is iota of the C4 butterfly: iota(1) = 1 or 3 is not a
    homomorphism, iota(1) = 0 is not injective, and changing iota(0) breaks
    iota(0) = 0 and injectivity alike.
    """
    s3 = symmetric(3)
    a3 = normal_inclusion(s3, alternating3(s3))
    s3_conj = CrossedModule.conjugation(s3)
    c3_conj = CrossedModule.conjugation(cyclic(3))
    rotation = extend_homomorphism(cyclic(3), s3, [1], [alternating3(s3)[1]])
    return [
        ("C4 butterfly", c4_butterfly()),
        ("identity on [C3 -> C3]", from_strict_morphism(identity_morphism(c3_conj))),
        ("identity on [S3 -> S3]", from_strict_morphism(identity_morphism(s3_conj))),
        ("[A3 -> S3] into [S3 -> S3]", from_strict_morphism(StrictMorphism(a3, s3_conj, GroupHom(a3.g1, s3, alternating3(s3)), GroupHom.identity(s3)))),
        ("[1 -> C3] into [1 -> S3]", from_strict_morphism(StrictMorphism(unit_xmod(cyclic(3)), unit_xmod(s3), GroupHom.trivial(trivial(), trivial()), rotation))),
    ]


def c4_butterfly() -> Butterfly:
    """H = [1 -> C2], G = [C2 -> 1], E = C4 with iota(1) = 2, sigma the reduction mod 2, kappa and rho trivial."""
    source = unit_xmod(cyclic(2))
    target = abelian_to_trivial(cyclic(2))
    return Butterfly.from_tables(source, target, cyclic(4), kappa=[0], iota=[0, 2], sigma=[0, 1, 0, 1], rho=[0, 0, 0, 0])


def c2_identity_butterfly() -> Butterfly:
    return from_strict_morphism(identity_morphism(c2_trivial_xmod()))


def extension_corpus() -> list[tuple[str, object, bool]]:
    """(name, central extension, split) for extensions with total group of order <= 16."""
    c2, c4 = cyclic(2), cyclic(4)
    c2xc2 = direct_product(c2, c2)
    c2xc4 = direct_product(c2, c4)
    c4xc4 = direct_product(c4, c4)
    d4 = dihedral(4)
    q8 = quaternion()
    s3xc2 = direct_product(symmetric(3), c2)
    return [
        ("C2 -> C4 -> C2", central_extension_from_quotient(c4, [0, 2]), False),
        ("C2 -> C2xC2 -> C2", central_extension_from_quotient(c2xc2, [0, 2]), True),
        ("C2 -> C6 -> C3", central_extension_from_quotient(cyclic(6), [0, 3]), True),
        ("C2 -> C8 -> C4", central_extension_from_quotient(cyclic(8), [0, 4]), False),
        ("C2 -> C2xC4 -> C4", central_extension_from_quotient(c2xc4, [0, 4]), True),
        ("C2 -> C2xC4 -> C2xC2", central_extension_from_quotient(c2xc4, [0, 2]), False),
        ("Z -> D4 -> C2xC2", central_extension_from_quotient(d4, d4.center()), False),
        ("Z -> Q8 -> C2xC2", central_extension_from_quotient(q8, q8.center()), False),
        ("C2 -> S3xC2 -> S3", central_extension_from_quotient(s3xc2, [0, 1]), True),
        ("C2 -> C4xC4 -> C2xC4", central_extension_from_quotient(c4xc4, [0, 8]), False),
        ("1 -> C5 -> C5", central_extension_from_quotient(cyclic(5), [0]), True),
    ]
