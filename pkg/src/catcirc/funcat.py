"""Categories of functors, fusion of defects, and phase-stability diagnostics.

Functors from vect^m to vect^n form a semisimple category of their own with
n*m simples, the elementary functors E[j, i] (a single 1 in the multiplicity
matrix). Endofunctors fuse by composition. A phase whose defects are the
endofunctors of X is stable exactly when the identity functor is simple,
i.e. when its endomorphism space is one-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import ObjectExpr, SemisimpleCategory
from .functors import LinearFunctor, compose_functors, identity_functor, nat_hom_dim

__all__ = [
    "FunctorCategory",
    "StabilityReport",
    "decompose",
    "end_of_identity_dim",
    "functor_category",
    "fusion_product",
    "is_stable",
]


class FunctorCategory(NamedTuple):
    """Functor category as a semisimple category plus its basis of simples."""

    category: SemisimpleCategory
    simples: tuple[LinearFunctor, ...]


def _elementary(src: SemisimpleCategory, tgt: SemisimpleCategory, j: int, i: int) -> LinearFunctor:
    rows = [
        [1 if (r, c) == (j, i) else 0 for c in range(src.simple_count)]
        for r in range(tgt.simple_count)
    ]
    return LinearFunctor(src, tgt, rows)


def functor_category(x: SemisimpleCategory, y: SemisimpleCategory) -> FunctorCategory:
    """The category of functors from x to y.

    Simple (j, i) is the elementary functor E[j, i] sending source simple i
    to target simple j and every other simple to zero; it sits at flat index
    j * x.simple_count + i, matching the row-major flattening of
    multiplicity matrices used by `decompose`.
    """
    m, n = x.simple_count, y.simple_count
    labels = tuple(f"E[{j},{i}]" for j in range(n) for i in range(m))
    category = SemisimpleCategory(n * m, labels)
    simples = tuple(_elementary(x, y, j, i) for j in range(n) for i in range(m))
    return FunctorCategory(category, simples)


def decompose(f: LinearFunctor) -> ObjectExpr:
    """Express a functor as an object of its functor category.

    Flattens the multiplicity matrix row-major; hom dimensions between
    functors and between their decompositions agree.
    """
    fun_cat = functor_category(f.src, f.tgt)
    mult = tuple(int(v) for v in f.mult_matrix.flat)
    return ObjectExpr(fun_cat.category, mult)


def end_of_identity_dim(x: SemisimpleCategory) -> int:
    """Dimension of the endomorphism space of the identity endofunctor."""
    ident = identity_functor(x)
    return nat_hom_dim(ident, ident)


@dataclass(frozen=True)
class StabilityReport:
    """Verdict of the simple-unit criterion for the endofunctor category of X.

    `stable` is true exactly when the identity functor has a one-dimensional
    endomorphism space, i.e. when X has a single simple. The degenerate
    X with no simples at all is reported unstable with a caveat instead of
    erroring, so reports stay total in pipelines.
    """

    simple_count: int
    end_of_identity_dim: int
    stable: bool
    message: str

    def __bool__(self) -> bool:
        return self.stable


def is_stable(x: SemisimpleCategory) -> StabilityReport:
    """Simple-unit test: stable iff End(id) is one-dimensional."""
    dim = end_of_identity_dim(x)
    stable = dim == 1
    if stable:
        message = "End(id) has dimension 1: the unit is simple and the phase is stable."
    elif x.simple_count == 0:
        message = "degenerate: the category has no simples at all (End(id) has dimension 0)."
    else:
        message = (
            f"End(id) has dimension {dim} != 1: the unit is not simple, the phase is "
            "unstable and keeping it requires fine tuning."
        )
    return StabilityReport(x.simple_count, dim, stable, message)


def fusion_product(f: LinearFunctor, g: LinearFunctor) -> LinearFunctor:
    """Fusion of two defects of the same phase: composition of endofunctors.

    Both arguments must be endofunctors of one category; the unit for this
    product is the identity functor. `fusion_product(f, g)` applies g first.
    """
    if f.src != f.tgt or g.src != g.tgt or f.src != g.src:
        raise ValueError("fusion needs two endofunctors of the same category")
    return compose_functors(f, g)
