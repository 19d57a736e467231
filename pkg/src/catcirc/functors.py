"""Linear functors between semisimple categories, and their transformations.

A functor is stored skeletally as a non-negative integer matrix: entry
[j, i] is the multiplicity of target simple j in the image of source
simple i. That one matrix induces the action on objects (matrix-vector
product) and on every hom space at once.

Basis-ordering convention
-------------------------
The induced morphism action needs a basis for each isotypic component of
F(a). We fix one global convention: the j-th component of F(a) is spanned,
in order, by triples

    (source simple i ascending, copy c in 0..mult_matrix[j, i) ascending,
     source basis vector k in 0..a.mult[i) ascending),

so block j of F(f) is the block diagonal over i of
kron(eye(mult_matrix[j, i]), f.blocks[i]), copies major. Components of a
natural transformation follow the same ordering with the roles of copy and
basis indices swapped: kron(alpha_block, eye(a.mult[i])). Under this single
convention functoriality, linearity and naturality hold on the nose, not
just up to isomorphism.

Composites are returned skeletally (product of multiplicity matrices), so
their morphism action agrees with sequential application only after a
canonical permutation of basis vectors; `composition_reindexing` computes
that permutation exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import intmat
from .core import Morphism, ObjectExpr, SemisimpleCategory, Tolerance

__all__ = [
    "LinearFunctor",
    "NaturalTransformation",
    "apply_to_morphism",
    "apply_to_object",
    "compose_functors",
    "composition_reindexing",
    "evaluate_at",
    "identity_functor",
    "identity_transformation",
    "nat_hom_dim",
    "tensor_functor",
    "transformation_close",
    "vertical_compose",
]


@dataclass(frozen=True, eq=False)
class LinearFunctor:
    """A functor stored as its multiplicity matrix.

    Parameters
    ----------
    src, tgt : SemisimpleCategory
        Source and target categories.
    mult_matrix : array_like of int
        Shape (tgt.simple_count, src.simple_count), non-negative entries.
        Row j lists how often target simple j occurs in the image of each
        source simple.

    Equality is by value: same categories and identical multiplicity matrix.
    """

    src: SemisimpleCategory
    tgt: SemisimpleCategory
    mult_matrix: np.ndarray

    def __post_init__(self):
        shape = (self.tgt.simple_count, self.src.simple_count)
        m = intmat.asmatrix(self.mult_matrix, shape=shape)
        for v in m.flat:
            if v < 0:
                raise ValueError(f"multiplicity matrix entries must be >= 0, got {v}")
        object.__setattr__(self, "mult_matrix", m)

    def __eq__(self, other):
        if not isinstance(other, LinearFunctor):
            return NotImplemented
        return (
            self.src == other.src
            and self.tgt == other.tgt
            and np.array_equal(self.mult_matrix, other.mult_matrix)
        )

    def __hash__(self):
        return hash((self.src, self.tgt, tuple(self.mult_matrix.flat)))

    def __repr__(self):
        return f"LinearFunctor({self.src!r} -> {self.tgt!r}, {intmat.to_lists(self.mult_matrix)})"


def identity_functor(x: SemisimpleCategory) -> LinearFunctor:
    return LinearFunctor(x, x, intmat.identity(x.simple_count))


def tensor_functor(dim_v: int) -> LinearFunctor:
    """Tensoring with a fixed `dim_v`-dimensional space, as an endofunctor
    of the one-simple category: the 1x1 multiplicity matrix [[dim_v]]."""
    if dim_v < 0:
        raise ValueError(f"dimension must be non-negative, got {dim_v}")
    one = SemisimpleCategory(1)
    return LinearFunctor(one, one, [[dim_v]])


def apply_to_object(f: LinearFunctor, a: ObjectExpr) -> ObjectExpr:
    """Image of an object: integer matrix-vector product on multiplicities."""
    if a.category != f.src:
        raise ValueError("object does not live in the functor's source category")
    return ObjectExpr(f.tgt, intmat.matvec(f.mult_matrix, a.mult))


def _block_diag(pieces, dtype=complex) -> np.ndarray:
    rows = sum(p.shape[0] for p in pieces)
    cols = sum(p.shape[1] for p in pieces)
    out = np.zeros((rows, cols), dtype=dtype)
    r = c = 0
    for p in pieces:
        out[r:r + p.shape[0], c:c + p.shape[1]] = p
        r += p.shape[0]
        c += p.shape[1]
    return out


def apply_to_morphism(f: LinearFunctor, m: Morphism) -> Morphism:
    """Transport a morphism along the functor.

    Block j of the result is the block diagonal, over source simples i in
    ascending order, of kron(eye(mult_matrix[j, i]), m.blocks[i]); see the
    module docstring for the basis convention behind this formula.
    """
    if m.src.category != f.src:
        raise ValueError("morphism does not live in the functor's source category")
    new_src = apply_to_object(f, m.src)
    new_tgt = apply_to_object(f, m.tgt)
    blocks = []
    for j in range(f.tgt.simple_count):
        pieces = [
            np.kron(np.eye(int(f.mult_matrix[j, i]), dtype=complex), m.blocks[i])
            for i in range(f.src.simple_count)
        ]
        blocks.append(_block_diag(pieces))
    return Morphism(new_src, new_tgt, tuple(blocks))


def compose_functors(g: LinearFunctor, f: LinearFunctor) -> LinearFunctor:
    """Skeletal composite g after f: product of multiplicity matrices."""
    if f.tgt != g.src:
        raise ValueError("functors are not composable: middle categories differ")
    return LinearFunctor(f.src, g.tgt, intmat.matmul(g.mult_matrix, f.mult_matrix))


def composition_reindexing(g: LinearFunctor, f: LinearFunctor, a: ObjectExpr) -> tuple[np.ndarray, ...]:
    """Basis permutations relating sequential application to the composite.

    The composite functor enumerates the copies of target simple j over
    source simple i by triples (middle simple l, copy d of g, copy e of f)
    in lexicographic order; sequential application g(f(-)) enumerates basis
    vectors by (l, d, i, e, k) nesting instead. For each target simple j
    this returns an index array `p` with

        composite_basis[t] == sequential_basis[p[t]],

    so for any morphism m: a -> b,
    ``apply_to_morphism(compose_functors(g, f), m).blocks[j]`` equals
    ``seq.blocks[j][np.ix_(p_b[j], p_a[j])]`` where seq is
    ``apply_to_morphism(g, apply_to_morphism(f, m))`` and p_a, p_b are the
    reindexings at the source and target objects.
    """
    if a.category != f.src or f.tgt != g.src:
        raise ValueError("reindexing needs composable functors and an object in the source")
    gm, fm = g.mult_matrix, f.mult_matrix
    perms = []
    for j in range(g.tgt.simple_count):
        seq = [
            (l, d, i, e, k)
            for l in range(g.src.simple_count)
            for d in range(int(gm[j, l]))
            for i in range(f.src.simple_count)
            for e in range(int(fm[l, i]))
            for k in range(a.mult[i])
        ]
        comp = [
            (l, d, i, e, k)
            for i in range(f.src.simple_count)
            for l in range(g.src.simple_count)
            for d in range(int(gm[j, l]))
            for e in range(int(fm[l, i]))
            for k in range(a.mult[i])
        ]
        pos = {t: p for p, t in enumerate(seq)}
        perms.append(np.array([pos[t] for t in comp], dtype=np.intp))
    return tuple(perms)


@dataclass(frozen=True, eq=False)
class NaturalTransformation:
    """A morphism between parallel functors.

    `blocks[j][i]` is a complex matrix of shape
    (target_functor.mult_matrix[j, i], source_functor.mult_matrix[j, i]):
    it mixes the copies of target simple j inside the images of source
    simple i. Equality is exact and blockwise; use `transformation_close`
    for a tolerant comparison.
    """

    source_functor: LinearFunctor
    target_functor: LinearFunctor
    blocks: tuple[tuple[np.ndarray, ...], ...]

    def __post_init__(self):
        f, g = self.source_functor, self.target_functor
        if f.src != g.src or f.tgt != g.tgt:
            raise ValueError("natural transformations need parallel functors")
        n_tgt, n_src = f.tgt.simple_count, f.src.simple_count
        rows = tuple(self.blocks)
        if len(rows) != n_tgt:
            raise ValueError(f"expected {n_tgt} block rows, got {len(rows)}")
        coerced = []
        for j, row in enumerate(rows):
            row = tuple(row)
            if len(row) != n_src:
                raise ValueError(f"expected {n_src} blocks in row {j}, got {len(row)}")
            out_row = []
            for i, b in enumerate(row):
                arr = np.asarray(b, dtype=complex)
                want = (int(g.mult_matrix[j, i]), int(f.mult_matrix[j, i]))
                if arr.shape != want:
                    if arr.size == 0 and want[0] * want[1] == 0:
                        arr = arr.reshape(want)
                    else:
                        raise ValueError(f"block [{j}][{i}] has shape {arr.shape}, expected {want}")
                arr = arr.copy()
                arr.setflags(write=False)
                out_row.append(arr)
            coerced.append(tuple(out_row))
        object.__setattr__(self, "blocks", tuple(coerced))

    def __eq__(self, other):
        if not isinstance(other, NaturalTransformation):
            return NotImplemented
        return (
            self.source_functor == other.source_functor
            and self.target_functor == other.target_functor
            and all(
                np.array_equal(a, b)
                for row_a, row_b in zip(self.blocks, other.blocks)
                for a, b in zip(row_a, row_b)
            )
        )

    __hash__ = None


def identity_transformation(f: LinearFunctor) -> NaturalTransformation:
    blocks = tuple(
        tuple(np.eye(int(f.mult_matrix[j, i]), dtype=complex) for i in range(f.src.simple_count))
        for j in range(f.tgt.simple_count)
    )
    return NaturalTransformation(f, f, blocks)


def vertical_compose(beta: NaturalTransformation, alpha: NaturalTransformation) -> NaturalTransformation:
    """Composite beta after alpha, blockwise matrix product per (j, i)."""
    if alpha.target_functor != beta.source_functor:
        raise ValueError("middle functors do not match")
    f, h = alpha.source_functor, beta.target_functor
    blocks = tuple(
        tuple(beta.blocks[j][i] @ alpha.blocks[j][i] for i in range(f.src.simple_count))
        for j in range(f.tgt.simple_count)
    )
    return NaturalTransformation(f, h, blocks)


def evaluate_at(alpha: NaturalTransformation, a: ObjectExpr) -> Morphism:
    """Component of a natural transformation at an object.

    Block j is the block diagonal over source simples i of
    kron(alpha.blocks[j][i], eye(a.mult[i])); the copy index is major, the
    source basis index minor, matching the functor action's convention, so
    naturality squares commute exactly.
    """
    f, g = alpha.source_functor, alpha.target_functor
    if a.category != f.src:
        raise ValueError("object does not live in the transformation's source category")
    src = apply_to_object(f, a)
    tgt = apply_to_object(g, a)
    blocks = []
    for j in range(f.tgt.simple_count):
        pieces = [
            np.kron(alpha.blocks[j][i], np.eye(a.mult[i], dtype=complex))
            for i in range(f.src.simple_count)
        ]
        blocks.append(_block_diag(pieces))
    return Morphism(src, tgt, tuple(blocks))


def nat_hom_dim(f: LinearFunctor, g: LinearFunctor) -> int:
    """Dimension of the space of natural transformations from f to g."""
    if f.src != g.src or f.tgt != g.tgt:
        raise ValueError("nat_hom_dim needs parallel functors")
    return int(sum(int(x) * int(y) for x, y in zip(f.mult_matrix.flat, g.mult_matrix.flat)))


def transformation_close(
    alpha: NaturalTransformation, beta: NaturalTransformation, tol: Tolerance = Tolerance()
) -> bool:
    if alpha.source_functor != beta.source_functor or alpha.target_functor != beta.target_functor:
        return False
    return all(
        bool(np.all(np.abs(a - b) <= tol.eps))
        for row_a, row_b in zip(alpha.blocks, beta.blocks)
        for a, b in zip(row_a, row_b)
    )
