"""orbitnum: Young 加群の軌道数と p-Kostka 行列"""

from .config import DEFAULT_CEILINGS, MAX_N_ENV, SuiteBounds, check_ceiling, max_n
from .errors import (
    InvalidInputError,
    OrbitnumError,
    ResourceLimitError,
    TableInconsistencyError,
)
from .kostka import (
    KostkaMatrix,
    clear_kostka_cache,
    dimension_check,
    kostka_matrix,
    ordinary_kostka,
    p_kostka,
    restricted_p_kostka,
    two_part_young_dimension,
    young_module_dimension,
)
from .modular import rank_mod_p, simple_dimension
from .mullineux import (
    mullineux_regular,
    mullineux_restricted,
    mullineux_symbol,
    mullineux_twists,
)
from .orbit_numbers import (
    JordanKind,
    JordanType,
    OrbitNumberTable,
    build_tables,
    canonical_orbit_number,
    clear_table_cache,
    generic_jordan_type,
    m_number,
    m_oracle,
    orbit_number,
    y_canonical_product,
    y_hook_closed_form,
    y_two_part_closed_form,
)
from .orbit_type import (
    OrbitType,
    canonical_orbit_type,
    orbit_types,
    refines_up_to_rearrangement,
    trivial_orbit_type,
)
from .partition import (
    CombineMode,
    Composition,
    Dominance,
    PAdicExpansion,
    Partition,
    composition_combine,
    conjugate,
    dominance_compare,
    is_p_core,
    is_p_regular,
    is_p_restricted,
    p_adic_expansion,
    p_core_and_weight,
    partitions,
    perm_module_dimension,
    rim_hook_removals,
    specht_dimension,
)
from .tableau import semistandard_tableaux, standard_tableaux
from .verify import SUITES, Failure, VerificationReport, run_suite, run_suites

__all__ = [
    # Partition types
    "Partition",
    "Composition",
    "CombineMode",
    "Dominance",
    "PAdicExpansion",
    "OrbitType",
    # Partition operations
    "composition_combine",
    "conjugate",
    "dominance_compare",
    "is_p_core",
    "is_p_regular",
    "is_p_restricted",
    "p_adic_expansion",
    "p_core_and_weight",
    "partitions",
    "perm_module_dimension",
    "rim_hook_removals",
    "specht_dimension",
    "standard_tableaux",
    "semistandard_tableaux",
    # Orbit types
    "canonical_orbit_type",
    "orbit_types",
    "refines_up_to_rearrangement",
    "trivial_orbit_type",
    # Kostka
    "KostkaMatrix",
    "dimension_check",
    "kostka_matrix",
    "ordinary_kostka",
    "p_kostka",
    "restricted_p_kostka",
    "two_part_young_dimension",
    "young_module_dimension",
    "rank_mod_p",
    "simple_dimension",
    # Orbit numbers
    "JordanKind",
    "JordanType",
    "OrbitNumberTable",
    "build_tables",
    "canonical_orbit_number",
    "clear_kostka_cache",
    "clear_table_cache",
    "generic_jordan_type",
    "m_number",
    "m_oracle",
    "orbit_number",
    "y_canonical_product",
    "y_hook_closed_form",
    "y_two_part_closed_form",
    # Mullineux
    "mullineux_regular",
    "mullineux_restricted",
    "mullineux_symbol",
    "mullineux_twists",
    # Verification
    "SUITES",
    "Failure",
    "VerificationReport",
    "run_suite",
    "run_suites",
    # Configuration
    "DEFAULT_CEILINGS",
    "MAX_N_ENV",
    "SuiteBounds",
    "check_ceiling",
    "max_n",
    # Errors
    "OrbitnumError",
    "InvalidInputError",
    "TableInconsistencyError",
    "ResourceLimitError",
]
