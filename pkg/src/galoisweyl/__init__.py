"""Exact arithmetic for Weyl algebras, generalized Weyl algebras and skew
monoid rings, with reflection-group actions and invariant-theory checks."""

from .scalars import CycNumber, FieldMismatchError, Scalar, ScalarField, cyclotomic_polynomial
from .ratfunc import ContextMismatchError, FieldAutomorphism, RationalFunction, VariableContext
from .skewring import ActionElement, GroupAction, SkewContext, SkewElement, weyl_skew_context
from .weyl import WeylAlgebra, WeylAutomorphism, WeylElement, weyl_embed, weyl_express_in_t
from .gwa import (
    CATALOG, GwaAlgebra, GwaElement, NotInBaseRingError, cyclic_invariant, gwa_check_axioms,
    gwa_embed, gwa_from_invariants, gwa_instance, gwa_mul, gwa_tensor, pull_back, uqsl2,
    witten1, woronowicz,
)
from .groups import (
    GroupDescriptor, GroupElement, WeylGroupAction, group_enumerate, group_mul, induced_action,
    parse_element, quotient_image,
)
from .invariants import (
    SupportSet, eigen_decompose, gamma_generators, invariant_generator_supports, is_invariant,
    monoid_generates, reynolds, weyl_generator_supports,
)
from .parser import ExprError, evaluate, parse, to_text
from .suites import SUITES, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "CycNumber", "FieldMismatchError", "Scalar", "ScalarField", "cyclotomic_polynomial",
    "ContextMismatchError", "FieldAutomorphism", "RationalFunction", "VariableContext",
    "ActionElement", "GroupAction", "SkewContext", "SkewElement", "weyl_skew_context",
    "WeylAlgebra", "WeylAutomorphism", "WeylElement", "weyl_embed", "weyl_express_in_t",
    "CATALOG", "GwaAlgebra", "GwaElement", "NotInBaseRingError", "cyclic_invariant",
    "gwa_check_axioms", "gwa_embed", "gwa_from_invariants", "gwa_instance", "gwa_mul",
    "gwa_tensor", "pull_back", "uqsl2", "witten1", "woronowicz",
    "GroupDescriptor", "GroupElement", "WeylGroupAction", "group_enumerate", "group_mul",
    "induced_action", "parse_element", "quotient_image",
    "SupportSet", "eigen_decompose", "gamma_generators", "invariant_generator_supports",
    "is_invariant", "monoid_generates", "reynolds", "weyl_generator_supports",
    "ExprError", "evaluate", "parse", "to_text",
    "SUITES", "SuiteReport", "run_suite",
]
