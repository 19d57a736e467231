"""Defect fusion onto a 0d boundary.

The boundary of a 1d phase is a pair (category, particle). Bulk defects are
endofunctors of the boundary category; fusing one onto the boundary applies
it to the particle and leaves the category untouched. Scripts fuse their
defects earliest-first, matching circuit time order, so a whole script acts
like the single composite F_k ∘ ... ∘ F_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .core import ObjectExpr, SemisimpleCategory
from .funcat import end_of_identity_dim, functor_category, is_stable
from .functors import LinearFunctor, apply_to_object, compose_functors, identity_functor

__all__ = [
    "BoundaryState",
    "BulkReport",
    "DefectScript",
    "bulk_report",
    "fuse_to_boundary",
    "run_script",
    "script_composite",
]


@dataclass(frozen=True)
class BoundaryState:
    """A boundary condition: the category, its particle, and the fusion history."""

    category: SemisimpleCategory
    particle: ObjectExpr
    history: tuple[str, ...] = ()

    def __post_init__(self):
        if self.particle.category != self.category:
            raise ValueError("particle does not live in the boundary category")
        object.__setattr__(self, "history", tuple(str(h) for h in self.history))


@dataclass(frozen=True)
class DefectScript:
    """An ordered list of named bulk defects, all endofunctors of one category."""

    steps: tuple[tuple[str, LinearFunctor], ...]

    def __post_init__(self):
        steps = tuple((str(name), f) for name, f in self.steps)
        for name, f in steps:
            if f.src != f.tgt:
                raise ValueError(f"defect {name!r} is not an endofunctor")
        categories = {f.src for _, f in steps}
        if len(categories) > 1:
            raise ValueError("all defects in a script must share one category")
        object.__setattr__(self, "steps", steps)


def fuse_to_boundary(defect: LinearFunctor, state: BoundaryState, name: str | None = None) -> BoundaryState:
    """Fuse one bulk defect onto the boundary: the particle becomes its image.

    The category is invariant; only the particle changes, and the defect's
    name (auto-numbered when omitted) is appended to the history.
    """
    if defect.src != state.category or defect.tgt != state.category:
        raise ValueError("defect is not an endofunctor of the boundary category")
    if name is None:
        name = f"defect{len(state.history)}"
    particle = apply_to_object(defect, state.particle)
    return BoundaryState(state.category, particle, state.history + (name,))


def run_script(script: DefectScript, state: BoundaryState) -> BoundaryState:
    """Fuse a script's defects onto the boundary, earliest first."""
    for name, defect in script.steps:
        state = fuse_to_boundary(defect, state, name)
    return state


def script_composite(script: DefectScript, category: SemisimpleCategory) -> LinearFunctor:
    """The single endofunctor a script amounts to: F_k ∘ ... ∘ F_1."""
    for _, f in script.steps:
        if f.src != category:
            raise ValueError("script defects do not act on the given category")
    functors = [f for _, f in script.steps]
    return reduce(lambda acc, f: compose_functors(f, acc), functors, identity_functor(category))


@dataclass(frozen=True)
class BulkReport:
    """Summary of the bulk phase determined by a boundary category."""

    boundary_simples: int
    defect_classes: int
    end_of_identity_dim: int
    stable: bool
    message: str


def bulk_report(x: SemisimpleCategory) -> BulkReport:
    """Describe the bulk whose boundary category is `x`.

    The bulk defects form the endofunctor category of `x`, with
    simple_count^2 simple classes; the report carries the simple-unit
    stability verdict and its caveat.
    """
    fun_xx = functor_category(x, x)
    verdict = is_stable(x)
    return BulkReport(
        boundary_simples=x.simple_count,
        defect_classes=fun_xx.category.simple_count,
        end_of_identity_dim=end_of_identity_dim(x),
        stable=verdict.stable,
        message=verdict.message,
    )
