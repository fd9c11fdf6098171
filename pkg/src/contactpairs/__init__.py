"""Exact exterior calculus on Lie algebras for contact pairs and related structures.

Scalars are :class:`fractions.Fraction`; nothing is ever rounded.  The
main entry points are :class:`KForm` and :class:`LieAlgebra` for the
algebra, the verifiers in :mod:`contactpairs.pairs` and
:mod:`contactpairs.hermitian`, and the fixture models in
:mod:`contactpairs.catalog`.
"""

from .errors import (
    DegenerateFormError,
    DimensionError,
    InconsistentSystemError,
    LinearSystemError,
    NoLeeFormError,
    NotAlmostComplexError,
    NotAPairError,
    NotPositiveDefiniteError,
    PreconditionError,
    SplittingError,
    StructureError,
    UnderdeterminedSystemError,
)
from .exterior import (
    KForm,
    basis_vector,
    coframe,
    evaluate,
    interior,
    is_volume,
    power,
    pullback,
    two_form_matrix,
    two_form_rank,
    vector,
    wedge,
)
from .lie import (
    LieAlgebra,
    bracket,
    ce_differential,
    change_basis,
    check_jacobi,
    levi_civita,
    lie_derivative_endo,
    lie_derivative_form,
    lie_derivative_metric,
)
from .pairs import (
    ContactPair,
    LcsData,
    ReebPair,
    generalized_to_lcs,
    lcs_to_pair,
    lee_vector,
    pair_to_lcs,
    reeb_fields,
    verify_contact_pair,
    verify_lcs,
    verify_symplectic_pair,
)
from .hermitian import (
    MetricContactPair,
    complex_structure,
    conjugate_T,
    fundamental_form,
    is_integrable,
    is_normal,
    kahler_pair_check,
    mcp_to_vaisman,
    metric_contact_pair,
    nijenhuis,
    vaisman_check,
    vaisman_to_mcp,
)
from .document import DocumentError, Model, dump_model, load_model, model_from_dict, model_to_dict
from .scalars import format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
