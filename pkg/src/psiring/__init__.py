"""Exact computer algebra for lambda-rings and Adams operations on spheres."""
from .bigpoly import (
    MultiPoly,
    NonIntegralDivision,
    PolySyntaxError,
    UnboundVariable,
    Var,
    format_poly,
    parse_poly,
)
from .groups import AbelianGroupDescriptor, Congruence
from .lab import ExtensionModel, enumerate_classes, equivalence_reduce, equivalent, lab_report
from .rings import (
    CounterExample,
    FreePsiRing,
    IntegerPsiRing,
    SphereKRing,
    Witness,
    is_special,
    lambda_structure,
)
from .spheres import (
    adams_scan,
    big_G,
    extalg_lambda,
    extalg_psi,
    gpj_closed,
    odd_hopf_feasible,
    stable_table,
)
from .symmetric import (
    SymmetricContext,
    express_in_elementary,
    newton_lambda_from_psi,
    newton_psi_from_lambda,
    universal_P,
    universal_Pij,
)

__version__ = "0.1.0"

__all__ = [
    "MultiPoly",
    "NonIntegralDivision",
    "PolySyntaxError",
    "UnboundVariable",
    "Var",
    "format_poly",
    "parse_poly",
    "AbelianGroupDescriptor",
    "Congruence",
    "ExtensionModel",
    "enumerate_classes",
    "equivalence_reduce",
    "equivalent",
    "lab_report",
    "CounterExample",
    "FreePsiRing",
    "IntegerPsiRing",
    "SphereKRing",
    "Witness",
    "is_special",
    "lambda_structure",
    "adams_scan",
    "big_G",
    "extalg_lambda",
    "extalg_psi",
    "gpj_closed",
    "odd_hopf_feasible",
    "stable_table",
    "SymmetricContext",
    "express_in_elementary",
    "newton_lambda_from_psi",
    "newton_psi_from_lambda",
    "universal_P",
    "universal_Pij",
]
