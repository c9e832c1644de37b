"""Loops in the pants complex as closed smooth 4-manifolds."""

from .surface import HomologyBasis, ModelSurface, build_model_surface, standard_homology_basis
from .curves import (
    Curve,
    CurveError,
    MultiCurve,
    algebraic_intersection,
    canonical_form,
    complementary_components,
    curve_from_sides,
    geometric_intersection,
    homology_class,
    torus_curve,
)
from .pants import (
    EdgeClassification,
    PantsDecomposition,
    PantsError,
    a_path,
    classify_edge,
    complete_to_pants,
    cut_system,
    pants_from_curves,
    standard_decomposition,
    validate_pants,
)
from .symplectic import LagrangianSubspace, lagrangian_of, maslov, signature_of_symmetric_form
from .four_manifold import (
    FourManifoldInvariants,
    HandleData,
    LoopError,
    LoopInComplex,
    WalkInComplex,
    build_walk,
    edge_three_manifold,
    euler_characteristic,
    export_kirby,
    first_homology,
    handle_decomposition,
    invariants,
    make_loop,
    signature,
)
from .cobordism import (
    CellError,
    CobordismLedger,
    DiskCertificate,
    TwoCellCertificate,
    apply_replacement,
    ledger_effect,
    reduce,
    remove_leaf,
    signed_3s_count,
    validate_cell,
)
from .encode import EncodingError, SurfaceFramedLink, build_loop, verify_encoding

__version__ = "0.1.0"
