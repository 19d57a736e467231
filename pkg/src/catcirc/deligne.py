"""Tensor product of semisimple categories, objects, morphisms and functors.

The simples of a product category are pairs (i1, i2), flattened row-major
with the left factor most significant: pair (i1, i2) sits at flat index
i1 * n2 + i2. Multiplicity vectors and matrices then combine by Kronecker
product, so decategorified statements become literal matrix identities.
Products of more than two factors are left folds; the mixed-radix indexing
makes the fold order unobservable.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

from . import intmat
from .core import Morphism, ObjectExpr, SemisimpleCategory
from .functors import LinearFunctor

__all__ = [
    "deligne_category",
    "deligne_category_all",
    "deligne_functor",
    "deligne_functor_all",
    "deligne_morphism",
    "deligne_object",
    "deligne_reindexing",
    "pair_index",
]


def pair_index(i1: int, i2: int, n2: int) -> int:
    """Flat index of the pair simple (i1, i2) when the right factor has n2 simples."""
    return i1 * n2 + i2


def deligne_category(x1: SemisimpleCategory, x2: SemisimpleCategory) -> SemisimpleCategory:
    """Product category with m*n simples labelled "l1⊠l2"."""
    labels = tuple(f"{l1}⊠{l2}" for l1 in x1.labels for l2 in x2.labels)
    return SemisimpleCategory(x1.simple_count * x2.simple_count, labels)


def deligne_object(a1: ObjectExpr, a2: ObjectExpr) -> ObjectExpr:
    """Product object: Kronecker product of multiplicity vectors."""
    category = deligne_category(a1.category, a2.category)
    mult = tuple(m1 * m2 for m1 in a1.mult for m2 in a2.mult)
    return ObjectExpr(category, mult)


def deligne_morphism(f1: Morphism, f2: Morphism) -> Morphism:
    """Product morphism: block (i1, i2) is kron(f1.blocks[i1], f2.blocks[i2])."""
    src = deligne_object(f1.src, f2.src)
    tgt = deligne_object(f1.tgt, f2.tgt)
    blocks = tuple(np.kron(b1, b2) for b1 in f1.blocks for b2 in f2.blocks)
    return Morphism(src, tgt, blocks)


def deligne_functor(f1: LinearFunctor, f2: LinearFunctor) -> LinearFunctor:
    """Product functor: Kronecker product of multiplicity matrices."""
    src = deligne_category(f1.src, f2.src)
    tgt = deligne_category(f1.tgt, f2.tgt)
    return LinearFunctor(src, tgt, intmat.kron(f1.mult_matrix, f2.mult_matrix))


def deligne_category_all(factors) -> SemisimpleCategory:
    """Left fold of `deligne_category` over at least one factor."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one category")
    return reduce(deligne_category, factors)


def deligne_functor_all(factors) -> LinearFunctor:
    """Left fold of `deligne_functor` over at least one factor."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one functor")
    return reduce(deligne_functor, factors)


def deligne_reindexing(
    f1: LinearFunctor, f2: LinearFunctor, a1: ObjectExpr, a2: ObjectExpr
) -> tuple[np.ndarray, ...]:
    """Basis permutations relating the two ways of transporting a product morphism.

    Applying the product functor to a product morphism unfolds bases in the
    order (i1, i2, c1, c2, k1, k2); taking the product of the two separately
    transported morphisms unfolds them as (i1, c1, k1, i2, c2, k2). For each
    flat target simple this returns an index array `p` with

        product_functor_basis[t] == product_of_images_basis[p[t]],

    so for morphisms m1: a1 -> b1 and m2: a2 -> b2,
    ``apply_to_morphism(deligne_functor(f1, f2), deligne_morphism(m1, m2))``
    has block J equal to
    ``deligne_morphism(F1m1, F2m2).blocks[J][np.ix_(p_b[J], p_a[J])]``
    with p_a, p_b the reindexings at (a1, a2) and (b1, b2).
    """
    if a1.category != f1.src or a2.category != f2.src:
        raise ValueError("objects must live in the functors' source categories")
    m1, m2 = f1.mult_matrix, f2.mult_matrix
    perms = []
    for j1 in range(f1.tgt.simple_count):
        for j2 in range(f2.tgt.simple_count):
            unfold = [
                (i1, c1, k1, i2, c2, k2)
                for i1 in range(f1.src.simple_count)
                for i2 in range(f2.src.simple_count)
                for c1 in range(int(m1[j1, i1]))
                for c2 in range(int(m2[j2, i2]))
                for k1 in range(a1.mult[i1])
                for k2 in range(a2.mult[i2])
            ]
            prod = [
                (i1, c1, k1, i2, c2, k2)
                for i1 in range(f1.src.simple_count)
                for c1 in range(int(m1[j1, i1]))
                for k1 in range(a1.mult[i1])
                for i2 in range(f2.src.simple_count)
                for c2 in range(int(m2[j2, i2]))
                for k2 in range(a2.mult[i2])
            ]
            pos = {t: p for p, t in enumerate(prod)}
            perms.append(np.array([pos[t] for t in unfold], dtype=np.intp))
    return tuple(perms)
