"""Exact combinatorics of Coxeter systems: roots, automata, growth series."""

from .core import (
    CoxeterMatrix,
    CoxeterSystem,
    GroupElement,
    LimitExceeded,
    cayley_bfs,
    coxeter_matrix_from_descriptor,
    format_word,
    is_reflection,
    parse_word,
    preset,
    reflection_from_root,
    weak_order_leq,
)
from .field import AlgebraicNumber, CyclotomicField, field_for_matrix
from .roots import (
    Root,
    RootPoset,
    m_small_roots,
    root_depth,
    root_dpinf,
    root_poset,
    root_profile,
)
from .roots import dominates
from .prefixes import (
    ReflectionPrefix,
    check_prefix_bilinear,
    dominance_set,
    is_reflection_prefix,
    palindromic_word,
    prefix_of_reflection,
    prefixes_of,
)
from .dihedral import (
    DihedralSubgroup,
    canonical_generators,
    canonical_generators_repfree,
    default_order_bound,
    reflection_dominance_set,
    subgroup_inversions,
)
from .automata import (
    Dfa,
    accepts,
    build_automaton,
    count_by_length,
    dfa_to_dot,
    dfa_to_obj,
    low_elements,
)
from .series import (
    Polynomial,
    RationalSeries,
    dfa_series,
    is_palindromic,
    pal_series,
    poly_gcd,
    poly_lcm,
)
from .affine import (
    AffineDatum,
    AffineSlice,
    OrbitSeries,
    affine_datum,
    affine_slice,
    affine_to_obj,
    depth_polynomial,
    depth_series,
    orbit_series,
    reflection_series,
)

__version__ = "0.1.0"
