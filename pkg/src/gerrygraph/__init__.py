"""Exact solvers and generators for plurality districting over graphs."""

from .core import (
    BlockTally,
    CapacityError,
    EvalReport,
    Instance,
    Partition,
    ShapeReport,
    UnsupportedInstanceError,
    block_tally,
    classify_shape,
    cut_components,
    evaluate_partition,
    partition_from_edge_cut,
    validate_instance,
)
from .io import (
    FormatError,
    parse_instance,
    parse_partition,
    parse_source_graph,
    write_instance,
    write_partition,
)
from .oracle import (
    OracleResult,
    color_palette,
    enumerate_connected_partitions,
    pruefer_decode,
    random_instance,
    random_tree,
    solve_brute_force,
)
from .reductions import (
    CliquePathParams,
    CliquePathResult,
    PartitionTreeParams,
    PartitionTreeResult,
    SourceGraph,
    clique_to_path,
    clique_witness,
    partition_to_tree,
    partition_witness,
    validate_clique_path,
)
from .star_diam import (
    CaseGuess,
    FeasibilityOutcome,
    beta_count,
    evaluate_guess,
    solve_diameter3,
    solve_star,
)
from .two_color import DpEntry, DpTable, dp_tables, solve_two_color_tree

__all__ = [
    "BlockTally",
    "CapacityError",
    "CaseGuess",
    "CliquePathParams",
    "CliquePathResult",
    "DpEntry",
    "DpTable",
    "EvalReport",
    "FeasibilityOutcome",
    "FormatError",
    "Instance",
    "OracleResult",
    "Partition",
    "PartitionTreeParams",
    "PartitionTreeResult",
    "ShapeReport",
    "SourceGraph",
    "UnsupportedInstanceError",
    "beta_count",
    "block_tally",
    "classify_shape",
    "clique_to_path",
    "clique_witness",
    "color_palette",
    "cut_components",
    "dp_tables",
    "enumerate_connected_partitions",
    "evaluate_guess",
    "evaluate_partition",
    "parse_instance",
    "parse_partition",
    "parse_source_graph",
    "partition_from_edge_cut",
    "partition_to_tree",
    "partition_witness",
    "pruefer_decode",
    "random_instance",
    "random_tree",
    "solve_brute_force",
    "solve_diameter3",
    "solve_star",
    "solve_two_color_tree",
    "validate_clique_path",
    "validate_instance",
    "write_instance",
    "write_partition",
]

__version__ = "0.1.0"
