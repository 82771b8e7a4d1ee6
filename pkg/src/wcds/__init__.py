"""Weakly connected dominating sets: exact counting, enumeration and
verification for small graphs."""

from .graph import (
    FAMILIES,
    Graph,
    RootedGraph,
    build_family,
    corona,
    delete_edge,
    is_connected,
    join,
    make_graph,
    read_edge_list,
    realize_extension,
    write_edge_list,
)
from .core import is_dominating, is_wcds, weakly_induced
from .oracle import (
    CapacityError,
    CountTable,
    DEFAULT_CAP,
    HARD_CAP,
    count_table,
    dominating_counts,
    enumerate_wcds,
    gamma,
    gamma_w,
    has_minimum_dominating_containing,
    has_minimum_wcds_containing,
)
from .formulas import (
    ExtensionTables,
    GammaWResult,
    RecurrenceAssumptionError,
    boxes_brute,
    boxes_count,
    build_extension_wcds,
    count_complete,
    count_cycle_top,
    count_extension_table,
    count_join,
    count_path_closed,
    count_path_recurrence,
    count_star,
    count_wheel,
    gamma_w_corona,
    gamma_w_cycle,
    gamma_w_extension,
    gamma_w_join,
    gamma_w_path,
)
from .verify import (
    CheckRecord,
    DEFAULT_SEED,
    FORMULA_SUITES,
    UnsupportedMethodError,
    VerificationReport,
    cross_check,
    table_by_method,
    verify_formula_suite,
    verify_structural,
    verify_path_table,
    verify_cycle_table,
)

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "Graph",
    "RootedGraph",
    "build_family",
    "corona",
    "delete_edge",
    "is_connected",
    "join",
    "make_graph",
    "read_edge_list",
    "realize_extension",
    "write_edge_list",
    "is_dominating",
    "is_wcds",
    "weakly_induced",
    "CapacityError",
    "CountTable",
    "DEFAULT_CAP",
    "HARD_CAP",
    "count_table",
    "dominating_counts",
    "enumerate_wcds",
    "gamma",
    "gamma_w",
    "has_minimum_dominating_containing",
    "has_minimum_wcds_containing",
    "ExtensionTables",
    "GammaWResult",
    "RecurrenceAssumptionError",
    "boxes_brute",
    "boxes_count",
    "build_extension_wcds",
    "count_complete",
    "count_cycle_top",
    "count_extension_table",
    "count_join",
    "count_path_closed",
    "count_path_recurrence",
    "count_star",
    "count_wheel",
    "gamma_w_corona",
    "gamma_w_cycle",
    "gamma_w_extension",
    "gamma_w_join",
    "gamma_w_path",
    "CheckRecord",
    "DEFAULT_SEED",
    "FORMULA_SUITES",
    "UnsupportedMethodError",
    "VerificationReport",
    "cross_check",
    "table_by_method",
    "verify_formula_suite",
    "verify_structural",
    "verify_path_table",
    "verify_cycle_table",
    "__version__",
]
