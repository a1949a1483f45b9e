"""Irreducible Specht-module labels in the p-blocks of symmetric groups."""
from .blocks import (
    BlockEnumeration,
    LabelPair,
    construct_from_pair,
    count_block,
    count_regular_and_restricted,
    enumerate_block,
    enumerate_label_pairs,
    regular_irreducibles,
)
from .cores import BlockId, PResidual, p_core, p_residual, p_weight, residual_bound
from .irreducible import (
    Decomposition,
    decompose,
    expand_top,
    glue_oplus,
    glue_oplus_hat,
    is_p_bottom,
    is_p_irreducible,
    is_p_top,
    is_specht_irreducible,
    shrink_top,
)
from .partition import (
    HookTable,
    Node,
    Partition,
    conjugate,
    format_partition,
    hook_length,
    hook_table,
    is_p_hook_free,
    is_p_regular,
    is_p_restricted,
    parse_partition,
    valuation,
)

__version__ = "0.1.0"
