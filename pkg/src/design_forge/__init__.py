"""Pair-balanced block designs from zero-XOR-sum subsets of binary fields.

Two constructions and the machinery to check them:

  * the designs (GF(2^m)*, zero-sum k-subsets), whose pair coverage is
    constant, and
  * their lifted, grouped counterparts in GF(2^(m+1)), where the groups
    are the pairs {x, x + alpha} and the blocks XOR to alpha while
    avoiding their own shift.

Enumeration (`blocks`), verification by exhaustive pair sweep (`designs`),
and exact integer recurrences for every parameter (`params`) are kept
independent so each can cross-examine the others; `cli` ties them into a
command-line tool with a one-shot crosscheck.
"""

from .blocks import (
    DEFAULT_NODE_BUDGET,
    Block,
    BlockFamily,
    as_block,
    family_predicate,
    gdd_blocks,
    gdd_groups,
    replace_point_inverse,
    replace_point_map,
    representative,
    shift_invariant_blocks,
    shift_representative,
    shifted_sum_families,
    sum_to_shift_blocks,
    sum_to_zero_blocks,
    zero_sum_blocks,
    zero_sum_blocks_containing,
)
from .designs import DesignReport, GddReport, observed_params, verify_bibd, verify_gdd
from .errors import (
    ArgumentError,
    BudgetExceededError,
    ConsistencyError,
    ContainmentError,
    DesignForgeError,
    FamilyError,
    InvalidShiftError,
    MapViolationError,
    NoRepresentativeError,
    PartitionError,
    RangeError,
    ShapeError,
    StateError,
)
from .field import (
    Coset,
    CosetOrdering,
    QuotientIso,
    add,
    coset_of,
    cosets_of,
    natural_ordering,
    nonzero_elements,
    quotient_iso,
)
from .params import (
    ParamRow,
    ParamTable,
    balance_parameters,
    balance_step,
    closed_form_balance,
    closed_form_gdd_balance,
    closed_forms,
    gdd_balance_parameters,
    hamming_weight_counts,
    param_table,
    reference_gdd_balance,
    replication_numbers,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "Block",
    "BlockFamily",
    "BudgetExceededError",
    "ConsistencyError",
    "ContainmentError",
    "Coset",
    "CosetOrdering",
    "DEFAULT_NODE_BUDGET",
    "DesignForgeError",
    "DesignReport",
    "FamilyError",
    "GddReport",
    "InvalidShiftError",
    "MapViolationError",
    "NoRepresentativeError",
    "ParamRow",
    "ParamTable",
    "PartitionError",
    "QuotientIso",
    "RangeError",
    "ShapeError",
    "StateError",
    "add",
    "as_block",
    "balance_parameters",
    "balance_step",
    "closed_form_balance",
    "closed_form_gdd_balance",
    "closed_forms",
    "coset_of",
    "cosets_of",
    "family_predicate",
    "gdd_balance_parameters",
    "gdd_blocks",
    "gdd_groups",
    "hamming_weight_counts",
    "natural_ordering",
    "nonzero_elements",
    "observed_params",
    "param_table",
    "quotient_iso",
    "reference_gdd_balance",
    "replace_point_inverse",
    "replace_point_map",
    "replication_numbers",
    "representative",
    "shift_invariant_blocks",
    "shift_representative",
    "shifted_sum_families",
    "sum_to_shift_blocks",
    "sum_to_zero_blocks",
    "verify_bibd",
    "verify_gdd",
    "zero_sum_blocks",
    "zero_sum_blocks_containing",
]
