"""
RSym - Álgebra computacional para la variedad right-simétrica R
Desarrollado por: Vicente Alonso

Álgebras P_n, formas normales del álgebra libre de R, el álgebra de
operadores E0 y la construcción del álgebra B sin base finita de
identidades.
"""

from .algebra_core import Algebra, Element, LinOp, Subspace, make_algebra, quotient, restrict, subalgebra, tensor
from .config import RSymSettings, get_settings, load_settings, setup_logging
from .counterexample import BConstruction, build_construction, spot_check_property2, verify_property1
from .errors import RSymError
from .fields import QQ_FIELD, Field, parse_field
from .free_variety import decompose, delta, evaluate, multilinear_basis, mul, normal_form
from .identities import check_variety_R, identity_witness, in_variety, is_identity
from .operator_engine import (
    e0_algebra,
    hall_element,
    ideal_membership_expand,
    is_full_matrix_algebra,
    reduce_to_operator_identities,
)
from .parser import parse_element, parse_operator, parse_term
from .pn_family import PnAlgebra, make_pn, verify_pn
from .reports import VerificationReport
from .terms import FreeElement, NormalWord, OperatorElement
from .verification import verify_paper

__version__ = "1.0.0"

__all__ = [
    "Algebra",
    "Element",
    "LinOp",
    "Subspace",
    "make_algebra",
    "quotient",
    "restrict",
    "subalgebra",
    "tensor",
    "RSymSettings",
    "get_settings",
    "load_settings",
    "setup_logging",
    "BConstruction",
    "build_construction",
    "spot_check_property2",
    "verify_property1",
    "RSymError",
    "QQ_FIELD",
    "Field",
    "parse_field",
    "decompose",
    "delta",
    "evaluate",
    "multilinear_basis",
    "mul",
    "normal_form",
    "check_variety_R",
    "identity_witness",
    "in_variety",
    "is_identity",
    "e0_algebra",
    "hall_element",
    "ideal_membership_expand",
    "is_full_matrix_algebra",
    "reduce_to_operator_identities",
    "parse_element",
    "parse_operator",
    "parse_term",
    "PnAlgebra",
    "make_pn",
    "verify_pn",
    "VerificationReport",
    "FreeElement",
    "NormalWord",
    "OperatorElement",
    "verify_paper",
]
