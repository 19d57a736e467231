"""Finite semisimple categories as matrix data.

Categories are simple-object counts, objects are multiplicity vectors,
morphisms are complex block families, functors are non-negative integer
matrices. On top of that sit tensor products of categories, categories of
functors with stability diagnostics, categorical circuits on categorical
bits with K0 decategorification, and a defect-fusion boundary simulator.
"""

from .core import (
    DisjointUnion,
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
from .deligne import (
    deligne_category,
    deligne_category_all,
    deligne_functor,
    deligne_functor_all,
    deligne_morphism,
    deligne_object,
    deligne_reindexing,
    pair_index,
)
from .diagnostics import Diagnostic, ValidationError
from .funcat import (
    FunctorCategory,
    StabilityReport,
    decompose,
    end_of_identity_dim,
    functor_category,
    fusion_product,
    is_stable,
)
from .functors import (
    LinearFunctor,
    NaturalTransformation,
    apply_to_morphism,
    apply_to_object,
    compose_functors,
    composition_reindexing,
    evaluate_at,
    identity_functor,
    identity_transformation,
    nat_hom_dim,
    tensor_functor,
    transformation_close,
    vertical_compose,
)
from .circuit import (
    Circuit,
    Gate,
    Layer,
    Placement,
    catbit_register,
    elaborate,
    gate_from_matrix,
    k0_of_circuit,
    k0_of_functor,
    lift_boolean_function,
    permutation_functor,
    run_morphism,
    run_object,
    validate_circuit,
)
from .defects import (
    BoundaryState,
    BulkReport,
    DefectScript,
    bulk_report,
    fuse_to_boundary,
    run_script,
    script_composite,
)

__version__ = "0.1.0"
