"""Finite poset-enriched categories, weak limits and exact completions."""

from .category import (
    FinPosCategory,
    builtin,
    builtin_names,
    category_from_dict,
    category_to_dict,
    dual,
    find_isomorphism,
    full_subcategory,
    is_isomorphic,
    validate_category,
)
from .completion import (
    ExCompletion,
    Pseudocongruence,
    build_exact_completion,
    coinserter_presentation,
    enumerate_pseudocongruences,
    gamma,
    internal_construction_crosscheck,
)
from .enumerate import canonical_form, enumerate_categories
from .errors import PoscatError
from .extension import (
    ExtensionResult,
    check_left_covering,
    check_projective_cover_theorem,
    extend_functor,
    image_congruence_check,
    is_regular_functor,
    useful_lemma_check,
)
from .functors import (
    PosFunctor,
    check_equivalence,
    check_fully_order_faithful,
    enumerate_functors,
    find_natural_iso,
    functor_from_maps,
    validate_functor,
)
from .limits import (
    Cone,
    DiagramSpec,
    check_weakly_lex,
    search_coinserter,
    search_strict_limit,
    search_weak_limit,
    weak_comma,
    weak_inserter,
    weak_product,
    weak_pullback,
    weak_terminal,
)
from .regular import (
    check_exact,
    check_ff,
    check_projective,
    check_projective_cover,
    check_regular,
    check_so,
    is_congruence,
    kernel_congruence,
    so_ff_factorize,
)
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "build_exact_completion",
    "builtin",
    "builtin_names",
    "canonical_form",
    "category_from_dict",
    "category_to_dict",
    "check_equivalence",
    "check_exact",
    "check_ff",
    "check_fully_order_faithful",
    "check_left_covering",
    "check_projective",
    "check_projective_cover",
    "check_projective_cover_theorem",
    "check_regular",
    "check_so",
    "check_weakly_lex",
    "coinserter_presentation",
    "Cone",
    "DiagramSpec",
    "dual",
    "enumerate_categories",
    "enumerate_functors",
    "enumerate_pseudocongruences",
    "ExCompletion",
    "extend_functor",
    "ExtensionResult",
    "find_isomorphism",
    "find_natural_iso",
    "FinPosCategory",
    "full_subcategory",
    "functor_from_maps",
    "gamma",
    "image_congruence_check",
    "internal_construction_crosscheck",
    "is_congruence",
    "is_isomorphic",
    "is_regular_functor",
    "kernel_congruence",
    "PoscatError",
    "PosFunctor",
    "Pseudocongruence",
    "Report",
    "search_coinserter",
    "search_strict_limit",
    "search_weak_limit",
    "so_ff_factorize",
    "useful_lemma_check",
    "validate_category",
    "validate_functor",
    "weak_comma",
    "weak_inserter",
    "weak_product",
    "weak_pullback",
    "weak_terminal",
]
