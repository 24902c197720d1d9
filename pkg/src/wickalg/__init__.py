"""wickalg: an exact symbolic engine for the algebra of normal products.

The symmetric Hopf algebra over a finite generator set, Laplace pairings
extended by permanents, circle products (operator and time-ordered products
as deformations of the normal product), the renormalisation group acting by
convolution, renormalised time-ordering, and truncated S-matrix / Green
function series -- all over exact Gaussian-rational coefficients.
"""

from .algebra import (
    Element,
    Monomial,
    TensorElement,
    antipode,
    coproduct,
    counit,
    derivation,
    divided_power,
    iterated_coproduct,
    sweedler,
    tensor_product,
    vee,
)
from .fock import (
    FockStructure,
    involute,
    phi,
    project_minus,
    project_plus,
    vacuum_expectation,
)
from .laplace import (
    PairingMatrix,
    circle,
    circle_distribute,
    circle_fold,
    pairing,
    permanent,
    permanent_by_permutations,
    recover_pairing,
    recover_vee,
    wick_expand,
    wick_step,
)
from .renorm import (
    Functional,
    LinearFunctional,
    Scheme,
    circle_renorm,
    convolution_inverse,
    convolve,
    counit_functional,
    modified_pairing,
    scheme_eval,
    z_pairing,
)
from .scalars import Scalar
from .series import (
    FormalSeries,
    gaussian_closed_form_check,
    green,
    series_vee_exp,
    simplest_lagrangian_check,
    smatrix,
    vee_exp,
)
from .tmaps import (
    TContext,
    exp_sigma,
    first_identity_check,
    sigma_apply,
    t_closed_form,
    t_map,
    t_map_by_circle_fold,
    t_permutation_form,
    t_scalar,
    tbar_map,
    tbar_map_by_twist,
    tbar_scalar,
)

__version__ = "0.1.0"

__all__ = [
    "Element",
    "FockStructure",
    "FormalSeries",
    "Functional",
    "LinearFunctional",
    "Monomial",
    "PairingMatrix",
    "Scalar",
    "Scheme",
    "TContext",
    "TensorElement",
    "antipode",
    "circle",
    "circle_distribute",
    "circle_fold",
    "circle_renorm",
    "convolution_inverse",
    "convolve",
    "coproduct",
    "counit",
    "counit_functional",
    "derivation",
    "divided_power",
    "exp_sigma",
    "first_identity_check",
    "gaussian_closed_form_check",
    "green",
    "involute",
    "iterated_coproduct",
    "modified_pairing",
    "pairing",
    "permanent",
    "permanent_by_permutations",
    "phi",
    "project_minus",
    "project_plus",
    "recover_pairing",
    "recover_vee",
    "scheme_eval",
    "series_vee_exp",
    "sigma_apply",
    "simplest_lagrangian_check",
    "smatrix",
    "sweedler",
    "t_closed_form",
    "t_map",
    "t_map_by_circle_fold",
    "t_permutation_form",
    "t_scalar",
    "tbar_map",
    "tbar_map_by_twist",
    "tbar_scalar",
    "tensor_product",
    "vacuum_expectation",
    "vee",
    "vee_exp",
    "wick_expand",
    "wick_step",
    "z_pairing",
]
