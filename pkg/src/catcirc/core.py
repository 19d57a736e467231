"""Finite semisimple categories in skeletal form.

A category here is nothing but a count of simple objects with labels; an
object is a multiplicity vector over the simples; a morphism is one complex
block per simple, of shape (target multiplicity) x (source multiplicity).
Blocks with zero rows or columns are first-class values.

All values are immutable after construction and every operation returns a
fresh value, so shared use across threads is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import intmat

__all__ = [
    "DisjointUnion",
    "Morphism",
    "ObjectExpr",
    "SemisimpleCategory",
    "Tolerance",
    "basis_object",
    "compose",
    "direct_sum_objects",
    "disjoint_union",
    "hom_dim",
    "identity",
    "linear_combine",
    "morphism_close",
    "vect",
    "zero_morphism",
    "zero_object",
]


@dataclass(frozen=True)
class Tolerance:
    """Entrywise absolute tolerance for comparing complex blocks."""

    eps: float = 1e-9

    def __post_init__(self):
        if not (self.eps >= 0):
            raise ValueError(f"eps must be non-negative, got {self.eps}")


@dataclass(frozen=True)
class SemisimpleCategory:
    """A skeletal finite semisimple category: `simple_count` simple objects.

    Parameters
    ----------
    simple_count : int
        Number of simple objects, may be zero.
    labels : tuple of str, optional
        Distinct non-empty names for the simples; defaults to "s0", "s1", ...
        Labels take part in equality, so relabeled categories are distinct
        values even at equal simple_count.
    """

    simple_count: int
    labels: tuple[str, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        n = self.simple_count
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"simple_count must be a non-negative integer, got {n!r}")
        labels = self.labels
        if labels is None:
            labels = tuple(f"s{i}" for i in range(n))
        else:
            labels = tuple(str(l) for l in labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        if any(not l for l in labels):
            raise ValueError("labels must be non-empty strings")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
        object.__setattr__(self, "labels", labels)

    def __repr__(self):
        return f"SemisimpleCategory({self.simple_count})"


def vect(n: int, labels: Sequence[str] | None = None) -> SemisimpleCategory:
    """The product of `n` copies of the base category, with default labels."""
    return SemisimpleCategory(n, None if labels is None else tuple(labels))


@dataclass(frozen=True)
class ObjectExpr:
    """An object as a multiplicity vector over the simples of its category."""

    category: SemisimpleCategory
    mult: tuple[int, ...]

    def __post_init__(self):
        mult = tuple(int(m) for m in self.mult)
        if len(mult) != self.category.simple_count:
            raise ValueError(
                f"multiplicity vector of length {len(mult)} in a category "
                f"with {self.category.simple_count} simples"
            )
        for m in mult:
            if m < 0:
                raise ValueError(f"multiplicities must be non-negative, got {m}")
            if m > intmat.INT64_MAX:
                raise OverflowError(f"multiplicity {m} exceeds the 64-bit range")
        object.__setattr__(self, "mult", mult)

    def total_dim(self) -> int:
        """Total number of simple constituents, counted with multiplicity."""
        return sum(self.mult)


def basis_object(category: SemisimpleCategory, index: int) -> ObjectExpr:
    """The `index`-th simple object, as an ObjectExpr."""
    if not 0 <= index < category.simple_count:
        raise ValueError(f"simple index {index} out of range for {category}")
    return ObjectExpr(category, tuple(1 if i == index else 0 for i in range(category.simple_count)))


def zero_object(category: SemisimpleCategory) -> ObjectExpr:
    return ObjectExpr(category, (0,) * category.simple_count)


def _coerce_block(block, rows: int, cols: int, what: str) -> np.ndarray:
    arr = np.asarray(block, dtype=complex)
    if arr.shape != (rows, cols):
        if arr.size == 0 and rows * cols == 0:
            arr = arr.reshape(rows, cols)
        else:
            raise ValueError(f"{what} has shape {arr.shape}, expected {(rows, cols)}")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Morphism:
    """A morphism between two objects of the same category.

    Stored as one complex block per simple: `blocks[i]` maps the i-th
    isotypic component of `src` to that of `tgt`, so it has shape
    (tgt.mult[i], src.mult[i]).
    """

    src: ObjectExpr
    tgt: ObjectExpr
    blocks: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.src.category != self.tgt.category:
            raise ValueError("src and tgt live in different categories")
        n = self.src.category.simple_count
        blocks = tuple(self.blocks)
        if len(blocks) != n:
            raise ValueError(f"expected {n} blocks, got {len(blocks)}")
        blocks = tuple(
            _coerce_block(b, self.tgt.mult[i], self.src.mult[i], f"block {i}")
            for i, b in enumerate(blocks)
        )
        object.__setattr__(self, "blocks", blocks)


def hom_dim(a: ObjectExpr, b: ObjectExpr) -> int:
    """Dimension of the space of morphisms from `a` to `b`."""
    if a.category != b.category:
        raise ValueError("hom_dim needs both objects in the same category")
    return sum(am * bm for am, bm in zip(a.mult, b.mult))


def identity(a: ObjectExpr) -> Morphism:
    """The identity morphism on `a`: one identity block per simple."""
    return Morphism(a, a, tuple(np.eye(m, dtype=complex) for m in a.mult))


def zero_morphism(a: ObjectExpr, b: ObjectExpr) -> Morphism:
    if a.category != b.category:
        raise ValueError("zero_morphism needs both objects in the same category")
    return Morphism(a, b, tuple(np.zeros((bm, am), dtype=complex) for am, bm in zip(a.mult, b.mult)))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """Composite g after f, blockwise matrix product."""
    if f.src.category != g.src.category:
        raise ValueError("cannot compose morphisms from different categories")
    if f.tgt != g.src:
        raise ValueError("middle objects do not match")
    blocks = tuple(gb @ fb for gb, fb in zip(g.blocks, f.blocks))
    return Morphism(f.src, g.tgt, blocks)


def linear_combine(coeffs: Sequence[complex], ms: Sequence[Morphism]) -> Morphism:
    """Blockwise linear combination of parallel morphisms."""
    if len(ms) == 0:
        raise ValueError("linear_combine needs at least one morphism")
    if len(coeffs) != len(ms):
        raise ValueError(f"{len(coeffs)} coefficients for {len(ms)} morphisms")
    first = ms[0]
    for m in ms[1:]:
        if m.src != first.src or m.tgt != first.tgt:
            raise ValueError("all morphisms must share source and target")
    n = first.src.category.simple_count
    blocks = []
    for i in range(n):
        acc = np.zeros_like(first.blocks[i])
        for c, m in zip(coeffs, ms):
            acc = acc + complex(c) * m.blocks[i]
        blocks.append(acc)
    return Morphism(first.src, first.tgt, tuple(blocks))


def direct_sum_objects(a: ObjectExpr, b: ObjectExpr) -> ObjectExpr:
    """Direct sum of two objects: entrywise sum of multiplicities."""
    if a.category != b.category:
        raise ValueError("direct_sum_objects needs both objects in the same category")
    return ObjectExpr(a.category, tuple(am + bm for am, bm in zip(a.mult, b.mult)))


class DisjointUnion(NamedTuple):
    """Union category together with the two simple-index embeddings."""

    category: SemisimpleCategory
    left: tuple[int, ...]
    right: tuple[int, ...]


def disjoint_union(x1: SemisimpleCategory, x2: SemisimpleCategory) -> DisjointUnion:
    """The category whose simples are those of `x1` followed by those of `x2`.

    Labels are prefixed with "0." and "1." so they stay distinct. The two
    returned index tuples embed the simples of each summand into the union.
    """
    labels = tuple(f"0.{l}" for l in x1.labels) + tuple(f"1.{l}" for l in x2.labels)
    category = SemisimpleCategory(x1.simple_count + x2.simple_count, labels)
    left = tuple(range(x1.simple_count))
    right = tuple(range(x1.simple_count, x1.simple_count + x2.simple_count))
    return DisjointUnion(category, left, right)


def morphism_close(f: Morphism, g: Morphism, tol: Tolerance = Tolerance()) -> bool:
    """Entrywise comparison of two parallel morphisms within `tol.eps`."""
    if f.src != g.src or f.tgt != g.tgt:
        return False
    return all(
        fb.shape == gb.shape and bool(np.all(np.abs(fb - gb) <= tol.eps))
        for fb, gb in zip(f.blocks, g.blocks)
    )
