"""Exact arithmetic for the Apollonian kingdom: lax lattices of Z[i]^2,
oriented Gaussian circles, Descartes quadruples and integer Lorentz maps."""

from .circles import (
    CENTRE_IM_FORM,
    CENTRE_RE_FORM,
    COCURVATURE_FORM,
    CURVATURE_FORM,
    Circle,
    EuclidCircle,
    EuclidLine,
    HermitianForm,
    H_at_vertex,
    H_imag,
    circle_from_lattice,
    circle_from_matrix,
    euclid_params,
    herm_eval,
    hermitian_descartes_check,
    descartes_quantity,
    reorient,
    tangency_lax,
    tangency_point,
)
from .explorer import (
    ExplorationConfig,
    LockstepReport,
    Mode,
    PalaceGraph,
    PrimitivityReport,
    Window,
    base_chamber,
    coset_packing,
    enumerate_superpacking,
    explore_kingdom_algebraic,
    explore_palace,
    half_primitive_check,
    lockstep_verify,
    strip_packing,
    strip_relation_holds,
)
from .gaussian import (
    I,
    IDENTITY,
    INFINITY,
    CosetClass,
    GaussInt,
    GaussMatrix2,
    ProjectivePoint,
    coset_class,
    gauss_gcd,
    gauss_xgcd,
    is_unit,
    mat_det,
    mat_inverse,
    mat_mul,
    mobius_apply,
    pgl_equal,
)
from .lax import (
    Chamber,
    CourtReport,
    Handedness,
    LaxLattice,
    LaxVector,
    Superbasis,
    Vec2,
    complete_wall,
    contains_lax,
    court_check,
    cross_wall,
    is_basis,
    is_superbasis,
    lattice_equal,
    lax_canonical,
    superbasis_zero_sum,
)
from .minkowski import (
    BASE_QUADRUPLE,
    DESCARTES_GRAM,
    MINKOWSKI,
    LorentzMatrix,
    PairClass,
    PairRelation,
    PedoeVector,
    classify_pair,
    descartes_complement,
    descartes_scalar_check,
    gram,
    is_descartes,
    lorentz_apply,
    mink_inner,
    ordering_sign,
    pedoe,
    relate_quadruples,
    spinor,
    swap,
)
from .render import RenderSpec, emit_svg, read_jsonl, write_jsonl

__version__ = "0.1.0"
