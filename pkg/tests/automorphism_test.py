# automorphism_test.py
# - validate: shape and weighted homogeneity of component tables
# - compose, invert and the decomposition F = u o l
# - unipotent factorization u = u_t o ... o u_2
# - randomized properties over Q and F_7
# - scalars are central, U_a is abelian and conjugation preserves the level filtration
#
# To use:
# from tests.automorphism_test import sample_automorphisms
# for ring, f in sample_automorphisms(runs=10):
#     ...

import pytest

from wpgl.structure import (
    BlockLinear,
    UnipotentElement,
    compose,
    compose_factors,
    conj,
    decompose,
    identity,
    invert,
    is_automorphism,
    is_identity,
    linear_part,
    random_automorphism,
    random_block_linear,
    random_unipotent,
    scalar,
    scalar_is_identity,
    unipotent_factorize,
    unipotent_inverse,
    validate,
)
from wpgl.algebra import Field, identity_matrix
from wpgl.util.wpgl_types import NotAnAutomorphismError, NotHomogeneousError, NotUnipotentError, ShapeMismatchError, SignatureMismatchError
from tests.structure_fixtures import PROPERTY_FIELDS, PROPERTY_RUNS, PROPERTY_SIGNATURES, coordinates, random_signature, ring_of, seeded


def sample_automorphisms(runs=PROPERTY_RUNS, offset=10):
    for n, weights in enumerate(PROPERTY_SIGNATURES):
        for field in PROPERTY_FIELDS:
            ring = ring_of(weights, field)
            rng = seeded(offset + n)
            for _ in range(runs):
                yield ring, random_automorphism(ring, rng)


def test_validate():
    ring = ring_of((1, 2))
    x, y = coordinates(ring)
    f = validate(ring, [[x], [y + 3 * x**2]])
    assert str(f) == "(x_1_1, 3*x_1_1^2 + x_2_1)"
    assert f.to_json()["components"][1][0] == [{"exps": {"x_1_1": 2}, "coeff": 3}, {"exps": {"x_2_1": 1}, "coeff": 1}]

    ring = ring_of((2, 3))
    x, y = coordinates(ring)
    with pytest.raises(NotHomogeneousError) as err:
        validate(ring, [[x], [y + x]])
    assert (err.value.group, err.value.slot, err.value.weight) == (2, 1, 3)
    with pytest.raises(ShapeMismatchError):
        validate(ring, [[x]])
    with pytest.raises(ShapeMismatchError):
        validate(ring, [[x, x], [y]])
    with pytest.raises(SignatureMismatchError):
        validate(ring, [[coordinates(ring_of((2, 5)))[0]], [y]])


def test_compose_is_substitution():
    ring = ring_of((1, 2))
    x, y = coordinates(ring)
    f = validate(ring, [[2 * x], [y]])
    g = validate(ring, [[x], [y + x**2]])
    # f o g substitutes g into f, g o f substitutes f into g
    assert compose(f, g) == validate(ring, [[2 * x], [y + x**2]])
    assert compose(g, f) == validate(ring, [[2 * x], [y + 4 * x**2]])
    assert compose(f, identity(ring)) == f
    with pytest.raises(SignatureMismatchError):
        compose(f, identity(ring_of((1, 3))))


def test_decompose_and_invert():
    ring = ring_of((1, 2))
    x, y = coordinates(ring)
    f = validate(ring, [[2 * x], [3 * y + x**2]])
    u, ell = decompose(f)
    assert ell.to_json() == [[[2]], [[3]]]
    assert u.coordinates(2) == [ring.field("1/4")]
    assert compose(u.as_endomorphism(), ell.as_automorphism(ring)) == f
    inverse = invert(f)
    assert inverse == validate(ring, [[x * ring.field("1/2")], [(y - x**2 * ring.field("1/4")) * ring.field("1/3")]])
    assert is_identity(compose(f, inverse))
    assert is_identity(compose(inverse, f))


def test_singular_maps():
    ring = ring_of((1, 2))
    x, y = coordinates(ring)
    f = validate(ring, [[2 * x], [x**2]])
    assert not is_automorphism(f)
    with pytest.raises(NotAnAutomorphismError) as err:
        invert(f)
    assert err.value.group == 2
    with pytest.raises(NotUnipotentError):
        UnipotentElement.from_endomorphism(validate(ring, [[2 * x], [y]]))


def test_factorize_three_levels():
    ring = ring_of((1, 2, 3))
    x, y, z = coordinates(ring)
    f = validate(ring, [[x], [y + x**2], [z + x**3 + x * y]])
    u, ell = decompose(f)
    assert ell.is_identity()
    assert u.coordinates(2) == [1]
    assert u.coordinates(3) == [1, 1]
    factors = unipotent_factorize(u)
    assert [factor.level() for factor in factors] == [2, 3]
    assert factors[0].coordinates() == [1]
    # u o u_2^-1 = (x, y, z + x*y)
    assert factors[1].coordinates() == [0, 1]
    assert compose_factors(ring, factors) == f


def test_factorize_skips_trivial_levels():
    ring = ring_of((1, 2, 3))
    x, y, z = coordinates(ring)
    u = UnipotentElement.from_endomorphism(validate(ring, [[x], [y], [z + 5 * x * y]]))
    factors = unipotent_factorize(u)
    assert [factor.level() for factor in factors] == [3]
    assert unipotent_factorize(UnipotentElement.identity(ring)) == []


def test_decompose_properties():
    for ring, f in sample_automorphisms():
        u, ell = decompose(f)
        assert ell == linear_part(f), f"linear part of {f}"
        assert compose(u.as_endomorphism(), ell.as_automorphism(ring)) == f, f"u o l != F for {f}"


def test_invert_properties():
    for ring, f in sample_automorphisms(offset=20):
        inverse = invert(f)
        assert is_identity(compose(f, inverse)), f"F o F^-1 != id for {f}"
        assert is_identity(compose(inverse, f)), f"F^-1 o F != id for {f}"


def test_factorize_properties():
    for ring, f in sample_automorphisms(offset=30):
        u, _ = decompose(f)
        factors = unipotent_factorize(u)
        levels = [factor.level() for factor in factors]
        assert None not in levels and levels == sorted(set(levels)), f"factor levels {levels} for {u}"
        assert compose_factors(ring, factors) == u.as_endomorphism(), f"factors do not recompose {u}"
        assert compose(u.as_endomorphism(), unipotent_inverse(u).as_endomorphism()) == identity(ring)


def test_compose_is_associative():
    for weights in PROPERTY_SIGNATURES:
        for field in PROPERTY_FIELDS:
            ring = ring_of(weights, field)
            rng = seeded(40)
            for _ in range(50):
                f, g, h = (random_automorphism(ring, rng) for _ in range(3))
                assert compose(compose(f, g), h) == compose(f, compose(g, h)), f"associativity over {ring}"


def test_linear_part_is_multiplicative():
    for weights in PROPERTY_SIGNATURES:
        for field in PROPERTY_FIELDS:
            ring = ring_of(weights, field)
            rng = seeded(50)
            for _ in range(100):
                f, g = random_automorphism(ring, rng), random_automorphism(ring, rng)
                assert linear_part(compose(f, g)) == linear_part(f) * linear_part(g), f"linear part over {ring}"
                ell = random_block_linear(ring, rng)
                assert linear_part(ell.as_automorphism(ring)) == ell
                assert ell * ell.inverse() == BlockLinear.identity(ring.signature, field)


def test_scalar_identity_over_prime_fields():
    rng = seeded(60)
    for p in (5, 7, 11, 13):
        field = Field.prime(p)
        for _ in range(10):
            ring = ring_of(random_signature(rng, max_weight=12).raw_weights, field)
            d = ring.signature.d
            for lam in field.elements()[1:]:
                assert scalar_is_identity(ring, lam) == (lam**d == 1), f"scalar({lam}) on {ring}"


def test_scalar():
    ring = ring_of((1, 2))
    x, y = coordinates(ring)
    assert scalar(ring, 3) == validate(ring, [[3 * x], [9 * y]])
    assert scalar_is_identity(ring_of((2, 4)), -1)
    with pytest.raises(ZeroDivisionError):
        scalar(ring, 0)


def block_on_group(ring, rng, group: int) -> BlockLinear:
    """A random invertible block on one weight group, the identity on the others."""
    blocks = random_block_linear(ring, rng).blocks
    sig = ring.signature
    kept = [blocks[i - 1] if i == group else identity_matrix(ring.field, sig.multiplicity(i)) for i in range(1, sig.t + 1)]
    return BlockLinear(sig, ring.field, tuple(kept))


def test_scalars_are_central():
    for ring, f in sample_automorphisms(runs=20, offset=70):
        lam = ring.field.random_element(seeded(71), nonzero=True)
        g = scalar(ring, lam)
        assert compose(g, f) == compose(f, g), f"scalar({lam}) does not commute with {f}"


def test_unipotent_levels_are_abelian():
    for weights in PROPERTY_SIGNATURES:
        for field in PROPERTY_FIELDS:
            ring = ring_of(weights, field)
            rng = seeded(80)
            for a in range(2, ring.signature.t + 1):
                for _ in range(20):
                    u, v = random_unipotent(ring, rng, level=a), random_unipotent(ring, rng, level=a)
                    uv = compose(u.as_endomorphism(), v.as_endomorphism())
                    assert uv == compose(v.as_endomorphism(), u.as_endomorphism()), f"U_{a} of {ring} is not abelian"
                    # the group law on U_a adds the tables
                    added = tuple(tuple(p + q for p, q in zip(row_u, row_v)) for row_u, row_v in zip(u.table, v.table))
                    assert UnipotentElement.from_endomorphism(uv).table == added
                    assert is_identity(compose(u.as_endomorphism(), u.negate().as_endomorphism()))


def test_higher_blocks_fix_lower_levels():
    for weights in PROPERTY_SIGNATURES:
        for field in PROPERTY_FIELDS:
            ring = ring_of(weights, field)
            rng = seeded(90)
            t = ring.signature.t
            for b in range(2, t + 1):
                for a in range(b + 1, t + 1):
                    for _ in range(10):
                        u = random_unipotent(ring, rng, level=b)
                        g = block_on_group(ring, rng, a).as_automorphism(ring)
                        assert conj(g, u) == u, f"block on group {a} moves an element of U_{b} over {ring}"


def test_conjugation_preserves_level_filtration():
    for weights in PROPERTY_SIGNATURES:
        for field in PROPERTY_FIELDS:
            ring = ring_of(weights, field)
            rng = seeded(100)
            t = ring.signature.t
            for a in range(2, t + 1):
                for b in range(2, t + 1):
                    if a == b:
                        continue
                    for _ in range(10):
                        g, u = random_unipotent(ring, rng, level=a), random_unipotent(ring, rng, level=b)
                        image = conj(g.as_endomorphism(), u)
                        allowed = {b} if a < b else {a, b}
                        assert set(image.levels()) <= allowed, f"conj of U_{b} by U_{a} has levels {image.levels()} over {ring}"
                        assert image.is_identity() == u.is_identity()
                        if a > b:
                            assert image.table[b - 1] == u.table[b - 1], f"U_{a} changes the U_{b} part over {ring}"
