"""Coxeter-group combinatorics with a boundary-action simulator.

The core layer solves the word problem and computes descent sets, spherical
subsets and the irreducible decomposition for arbitrary Coxeter systems;
right-angled systems get a fast normal-form engine and the push machinery
that drives the scrambled-boundary decision.  A small simulator translates
eventually periodic boundary rays and measures their separation in an exact
word-metric proxy of the boundary metric.
"""

from .boundary import (
    MetricSeries,
    PROXY_DISCLAIMER,
    Ray,
    derive_push_data,
    format_decimal,
    liminf_series,
    limsup_scan,
    obstruction_scan,
    proxy_distance,
    ray_prefix,
    translate_ray,
    validate_ray,
)
from .core import (
    CoxeterMatrix,
    CoxeterSystem,
    ball,
    descent_set,
    in_descent_class,
    induced,
    infinite_support,
    inverse_word,
    irreducible_components,
    is_spherical,
    reduce,
    validate,
    word_distance,
    word_length,
)
from .decision import (
    EMPTY,
    MORE_THAN_TWO,
    NOT_SCRAMBLED,
    SCRAMBLED,
    TWO_POINTS,
    UNKNOWN,
    Verdict,
    analyze,
    boundary_size_class,
    decide_scrambled,
    find_product_split,
    finite_centralizer_generator,
    is_expansive,
    uniform_push_condition,
)
from .racg import (
    NormalForm,
    append_letter,
    build_chain,
    descent_update,
    generator_centralizer_finite,
    is_hyperbolic,
    is_irreducible,
    normal_form,
    proper_union_step,
    push_to_common_singleton,
    push_to_singleton,
)
from .sysfile import format_system_file, format_word, parse_system_file, parse_word

__all__ = [
    "CoxeterMatrix",
    "CoxeterSystem",
    "MetricSeries",
    "NormalForm",
    "PROXY_DISCLAIMER",
    "Ray",
    "Verdict",
    "analyze",
    "append_letter",
    "ball",
    "boundary_size_class",
    "build_chain",
    "decide_scrambled",
    "derive_push_data",
    "descent_set",
    "descent_update",
    "find_product_split",
    "finite_centralizer_generator",
    "format_decimal",
    "format_system_file",
    "format_word",
    "generator_centralizer_finite",
    "in_descent_class",
    "induced",
    "infinite_support",
    "inverse_word",
    "irreducible_components",
    "is_expansive",
    "is_hyperbolic",
    "is_irreducible",
    "is_spherical",
    "liminf_series",
    "limsup_scan",
    "normal_form",
    "obstruction_scan",
    "parse_system_file",
    "parse_word",
    "proper_union_step",
    "proxy_distance",
    "push_to_common_singleton",
    "push_to_singleton",
    "ray_prefix",
    "reduce",
    "translate_ray",
    "uniform_push_condition",
    "validate",
    "validate_ray",
    "word_distance",
    "word_length",
]
