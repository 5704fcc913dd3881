"""Exact lambda functions for tamely ramified quadratic extensions of p-adic fields."""

from .cyclotomic import CycElem, Mu4, cyc_arith, cyc_conj, cyc_embed, cyc_root
from .finite_field import (
    FieldDescriptor,
    FqElem,
    additive_char_exponent,
    build_field,
    field_arith,
    quadratic_character,
    trace_to_prime,
)
from .gauss import ClosedGauss, EpsilonValue, TameMultChar, epsilon_tame, gauss_closed_quadratic, gauss_sum_direct
from .lambda_core import (
    LambdaResult,
    QuadExt,
    delta_c_prime,
    lambda_full_square_norm_class,
    lambda_psi_minus_one,
    lambda_q2,
    lambda_tame_quadratic,
    lambda_twist,
    lambda_unramified,
)
from .local_field import (
    AdditiveCharSpec,
    CClass,
    TameField,
    c_input,
    c_prime,
    canonical_psi_spec,
    make_tame_field,
    psi_minus_one_spec,
    trace_residue_pc,
    twist_additive,
)

__version__ = "0.1.0"
