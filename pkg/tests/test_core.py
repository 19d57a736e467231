"""Category axioms and object/morphism arithmetic in skeletal form."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from catcirc.core import (
    Morphism,
    ObjectExpr,
    SemisimpleCategory,
    Tolerance,
    basis_object,
    compose,
    direct_sum_objects,
    disjoint_union,
    hom_dim,
    identity,
    linear_combine,
    morphism_close,
    vect,
    zero_morphism,
    zero_object,
)
from catcirc.testing import assert_morphism_close, random_morphism, random_object


def test_category_default_labels():
    x = vect(3)
    assert x.labels == ("s0", "s1", "s2")


def test_category_label_validation():
    with pytest.raises(ValueError):
        SemisimpleCategory(2, ("a", "a"))
    with pytest.raises(ValueError):
        SemisimpleCategory(2, ("a",))
    with pytest.raises(ValueError):
        SemisimpleCategory(1, ("",))
    with pytest.raises(ValueError):
        SemisimpleCategory(-1)


def test_zero_category_and_zero_object():
    x = vect(0)
    assert x.simple_count == 0
    a = zero_object(x)
    assert a.mult == ()
    f = identity(a)
    assert f.blocks == ()


def test_object_validation():
    x = vect(2)
    with pytest.raises(ValueError):
        ObjectExpr(x, (1,))
    with pytest.raises(ValueError):
        ObjectExpr(x, (1, -1))


# hom_dim: the third value is frozen from the entry-count oracle below,
# 2*1 + 3*4 = 14.
@pytest.mark.parametrize(
    "a_mult, b_mult, want",
    [((1, 0), (0, 1), 0), ((1, 1), (1, 1), 2), ((2, 3), (1, 4), 14)],
)
def test_hom_dim(a_mult, b_mult, want):
    x = vect(2)
    assert hom_dim(ObjectExpr(x, a_mult), ObjectExpr(x, b_mult)) == want


def test_hom_dim_counts_block_entries(rng):
    x = vect(3)
    a = random_object(rng, x)
    b = random_object(rng, x)
    f = zero_morphism(a, b)
    assert hom_dim(a, b) == sum(blk.size for blk in f.blocks)


def test_hom_dim_needs_same_category():
    with pytest.raises(ValueError):
        hom_dim(zero_object(vect(1)), zero_object(vect(2)))


def test_identity_blocks():
    x = vect(2)
    f = identity(ObjectExpr(x, (1, 0)))
    assert f.blocks[0].shape == (1, 1) and f.blocks[1].shape == (0, 0)
    g = identity(ObjectExpr(x, (2, 1)))
    assert np.array_equal(g.blocks[0], np.eye(2))
    assert np.array_equal(g.blocks[1], np.eye(1))


def test_unit_laws_exact(rng):
    x = vect(3)
    a, b = random_object(rng, x), random_object(rng, x)
    f = random_morphism(rng, a, b)
    left = compose(identity(b), f)
    right = compose(f, identity(a))
    for i in range(3):
        assert np.array_equal(left.blocks[i], f.blocks[i])
        assert np.array_equal(right.blocks[i], f.blocks[i])


def test_scalar_composition():
    x = vect(1)
    a = ObjectExpr(x, (1,))
    f = Morphism(a, a, (np.array([[2.0]]),))
    g = Morphism(a, a, (np.array([[3.0]]),))
    assert compose(g, f).blocks[0][0, 0] == 6.0


def test_compose_rejects_middle_mismatch(rng):
    x = vect(2)
    a = ObjectExpr(x, (1, 1))
    b = ObjectExpr(x, (2, 0))
    c = ObjectExpr(x, (1, 2))
    f = random_morphism(rng, a, b)
    g = random_morphism(rng, c, a)
    with pytest.raises(ValueError):
        compose(g, f)


@given(st.integers(0, 2**32 - 1))
def test_associativity_of_composition(seed):
    rng = np.random.default_rng(seed)
    x = vect(int(rng.integers(1, 5)))
    objs = [random_object(rng, x) for _ in range(4)]
    f = random_morphism(rng, objs[0], objs[1])
    g = random_morphism(rng, objs[1], objs[2])
    h = random_morphism(rng, objs[2], objs[3])
    assert_morphism_close(compose(compose(h, g), f), compose(h, compose(g, f)))


def test_linear_combine():
    rng = np.random.default_rng(7)
    x = vect(2)
    a = ObjectExpr(x, (2, 1))
    b = ObjectExpr(x, (1, 2))
    f = random_morphism(rng, a, b)
    g = random_morphism(rng, a, b)

    assert morphism_close(linear_combine([1], [f]), f, Tolerance(0))
    zero = linear_combine([1, -1], [f, f])
    assert morphism_close(zero, zero_morphism(a, b), Tolerance(0))

    combo = linear_combine([2, 3], [f, g])
    for i in range(2):
        # entrywise oracle, plain python loops
        for r in range(b.mult[i]):
            for c in range(a.mult[i]):
                want = 2 * f.blocks[i][r, c] + 3 * g.blocks[i][r, c]
                assert combo.blocks[i][r, c] == want


def test_linear_combine_rejects_bad_input(rng):
    x = vect(1)
    a = ObjectExpr(x, (1,))
    b = ObjectExpr(x, (2,))
    f = random_morphism(rng, a, a)
    g = random_morphism(rng, a, b)
    with pytest.raises(ValueError):
        linear_combine([], [])
    with pytest.raises(ValueError):
        linear_combine([1, 1], [f, g])


def test_direct_sum_objects():
    x = vect(2)
    assert direct_sum_objects(ObjectExpr(x, (1, 0)), ObjectExpr(x, (0, 1))).mult == (1, 1)
    a = ObjectExpr(x, (2, 3))
    assert direct_sum_objects(zero_object(x), a) == a
    assert direct_sum_objects(a, ObjectExpr(x, (1, 1))).mult == (3, 4)


def test_disjoint_union():
    union, left, right = disjoint_union(vect(1), vect(1))
    assert union.simple_count == 2
    assert left == (0,) and right == (1,)

    union, left, right = disjoint_union(vect(2), vect(3))
    assert union.simple_count == 5
    # injective embeddings with disjoint images covering every simple
    assert sorted(left + right) == list(range(5))
    assert len(set(union.labels)) == 5

    union, left, right = disjoint_union(vect(0), vect(2))
    assert union.simple_count == 2 and left == () and right == (0, 1)


def test_morphism_shape_validation():
    x = vect(2)
    a = ObjectExpr(x, (1, 1))
    b = ObjectExpr(x, (2, 0))
    with pytest.raises(ValueError):
        Morphism(a, b, (np.zeros((1, 1)), np.zeros((1, 1))))
    ok = Morphism(a, b, (np.zeros((2, 1)), np.zeros((0, 1))))
    assert ok.blocks[1].shape == (0, 1)


def test_morphism_blocks_immutable(rng):
    x = vect(1)
    a = ObjectExpr(x, (2,))
    f = random_morphism(rng, a, a)
    with pytest.raises(ValueError):
        f.blocks[0][0, 0] = 1.0


def test_basis_object():
    x = vect(3)
    assert basis_object(x, 1).mult == (0, 1, 0)
    with pytest.raises(ValueError):
        basis_object(x, 3)


def test_tolerance_validation():
    assert Tolerance().eps == 1e-9
    with pytest.raises(ValueError):
        Tolerance(-1e-3)
