"""Random value generators and assertion helpers for tests."""

from __future__ import annotations

import numpy as np

from .core import Morphism, ObjectExpr, SemisimpleCategory, Tolerance, morphism_close, vect
from .functors import LinearFunctor, NaturalTransformation

__all__ = [
    "assert_morphism_close",
    "random_functor",
    "random_morphism",
    "random_natural_transformation",
    "random_object",
]


def random_object(rng: np.random.Generator, category: SemisimpleCategory, max_mult: int = 3) -> ObjectExpr:
    mult = tuple(int(m) for m in rng.integers(0, max_mult + 1, size=category.simple_count))
    return ObjectExpr(category, mult)


def _random_block(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_morphism(rng: np.random.Generator, a: ObjectExpr, b: ObjectExpr) -> Morphism:
    """A morphism a -> b with standard complex Gaussian entries."""
    blocks = tuple(_random_block(rng, bm, am) for am, bm in zip(a.mult, b.mult))
    return Morphism(a, b, blocks)


def random_functor(
    rng: np.random.Generator,
    src: SemisimpleCategory,
    tgt: SemisimpleCategory,
    max_entry: int = 3,
) -> LinearFunctor:
    shape = (tgt.simple_count, src.simple_count)
    return LinearFunctor(src, tgt, [[int(v) for v in row] for row in rng.integers(0, max_entry + 1, size=shape)])


def random_natural_transformation(
    rng: np.random.Generator, f: LinearFunctor, g: LinearFunctor
) -> NaturalTransformation:
    blocks = tuple(
        tuple(
            _random_block(rng, int(g.mult_matrix[j, i]), int(f.mult_matrix[j, i]))
            for i in range(f.src.simple_count)
        )
        for j in range(f.tgt.simple_count)
    )
    return NaturalTransformation(f, g, blocks)


def assert_morphism_close(actual: Morphism, expected: Morphism, tol: Tolerance = Tolerance()) -> None:
    if morphism_close(actual, expected, tol):
        return
    if actual.src != expected.src or actual.tgt != expected.tgt:
        raise AssertionError(
            f"morphisms differ in endpoints: {actual.src.mult}->{actual.tgt.mult} "
            f"vs {expected.src.mult}->{expected.tgt.mult}"
        )
    worst = max(
        (float(np.max(np.abs(a - b))) if a.size else 0.0)
        for a, b in zip(actual.blocks, expected.blocks)
    )
    raise AssertionError(f"morphism blocks differ, largest deviation {worst:.3e} > {tol.eps:.1e}")
