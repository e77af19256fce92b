"""Finite Moufang loops, their birepresentations, and triality."""
from .birep import (
    AssociatorSet,
    Birepresentation,
    RelationReport,
    TrialityTriple,
    associators,
    commutation_check,
    enveloping_group,
    inverse_map_check,
    is_associative_birep,
    is_faithful,
    kernel,
    minimality_check,
    quadratic_family,
    regular_birepresentation,
    regular_triple,
    run_all_checks,
    shifted_relation_check,
    triality_pairs,
    triality_substitute,
    triple_closure_check,
    validate,
)
from .catalog import chein_double, cyclic, direct_product, load, save, symmetric3
from .errors import MoufangError
from .loops import (
    AlgebraClass,
    CayleyTable,
    check_diassociativity_identities,
    classify,
    inverse,
    left_translation,
    parse_cayley_table,
    right_translation,
    unit,
)
from .perms import Permutation, PermGroup, closure, compose, contains, inverse_perm
from .quotient import (
    QuotientStructure,
    induced_birepresentation,
    inner_maps,
    is_normal_divisor,
    kernel_is_normal_check,
    normal_divisors,
    pullback,
    quotient,
)
from .reconstruction import ReconstructionInput, ReconstructionVerdict, check_conditions, reconstruct_from_regular

__version__ = "0.1.0"
