"""Exact computation in finite p-groups from power-commutator presentations."""

from .collector import Element, Group
from .consistency import assert_consistent, check_consistency
from .errors import (
    BudgetError,
    InconsistentPresentationError,
    ParseError,
    PcGroupError,
    PreconditionError,
    PresentationError,
)
from .kernels import USING_NUMBA
from .presentation import PcPresentation, Word, candidate_order, parse, parse_word, render
from .properties import (
    GroupProfile,
    coclass,
    is_powerful,
    is_powerfully_nilpotent,
    is_strongly_powerful,
    pn_class,
    profile,
    rank,
    upper_powerfully_central_series,
    verify_chain,
)
from .report import CheckReport, bundle
from .subgroup import (
    Chain,
    Subgroup,
    agemo,
    central_preimage,
    close,
    commutator_subgroup,
    derived_subgroup,
    exponent,
    index,
    normal_closure,
    omega,
    trivial,
    whole,
)
from .theorems import (
    VerifyConfig,
    build_theorem3_chain,
    check_order_p_lemma,
    check_power_inclusion,
    check_shortening_lemma,
    check_theorem3_chain,
    check_thm1,
    even_negative_controls,
    run_suite,
    verify_main_even,
    verify_main_odd,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Chain",
    "CheckReport",
    "Element",
    "Group",
    "GroupProfile",
    "InconsistentPresentationError",
    "ParseError",
    "PcGroupError",
    "PcPresentation",
    "PreconditionError",
    "PresentationError",
    "Subgroup",
    "USING_NUMBA",
    "VerifyConfig",
    "Word",
    "__version__",
    "agemo",
    "assert_consistent",
    "build_theorem3_chain",
    "bundle",
    "candidate_order",
    "central_preimage",
    "check_consistency",
    "check_order_p_lemma",
    "check_power_inclusion",
    "check_shortening_lemma",
    "check_theorem3_chain",
    "check_thm1",
    "close",
    "coclass",
    "commutator_subgroup",
    "derived_subgroup",
    "even_negative_controls",
    "exponent",
    "index",
    "is_powerful",
    "is_powerfully_nilpotent",
    "is_strongly_powerful",
    "normal_closure",
    "omega",
    "parse",
    "parse_word",
    "pn_class",
    "profile",
    "rank",
    "render",
    "run_suite",
    "trivial",
    "upper_powerfully_central_series",
    "verify_chain",
    "verify_main_even",
    "verify_main_odd",
    "whole",
]
