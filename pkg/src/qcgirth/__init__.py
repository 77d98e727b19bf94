"""Quasi-cyclic parity-check matrices with prescribed Tanner girth.

The package splits into a small algebra layer (circulant polynomials and
their block matrices), exponent matrices as the symbolic working form,
two independent girth measurements (power criterion and graph search),
closed-form girth conditions with constructions built on them, two-level
restructuring with pattern scans, and text formats plus a CLI on top.
"""

from .circulant import BlockMatrix, CircPoly, excess, expand, require_binary
from .conditions import (
    CycleSumSet,
    check_conditions,
    cycle_sum_girth,
    cycle_sums,
)
from .construct import (
    ConstructionResult,
    NminResult,
    SelectionStrategy,
    StepRecord,
    construct,
    construct_girth6_girth8,
    construct_three_row_girth10,
    construct_three_row_girth12,
    construct_two_row,
    nmin_search,
    recursive_construction,
)
from .errors import (
    BindCollisionError,
    ConstructionError,
    FormatError,
    MultiEdgeError,
    QcGirthError,
    UnsupportedParametersError,
)
from .exponents import ExponentMatrix
from .girth import (
    girth_via_powers,
    merge_two_rows,
    overlap_matrix,
    two_row_girth_relation,
)
from .multiedge import (
    CCSDS_128_64,
    CcsdsForm,
    ccsds_CH,
    ccsds_girth6_check,
    ccsds_to_exponent_matrix,
)
from .oracle import (
    DistanceResult,
    gf2_nullspace,
    girth_bfs_oracle,
    min_distance_nullspace,
)
from .prelift import (
    PreliftGuarantee,
    PreliftView,
    RepairResult,
    STRUCTURE_PATTERNS,
    StructureScan,
    find_blocking_entry,
    matrix_prelift,
    poly_prelift,
    prelift_admits_girth,
    repair_girth,
    scan_structures,
)
from .qcfile import export_alist, parse_alist, parse_qc, render_alist, render_qc
from .report import (
    GirthReport,
    METHOD_BFS,
    METHOD_CONDITIONS,
    METHOD_CYCLE_SUMS,
    METHOD_POWER,
)
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "BindCollisionError",
    "BlockMatrix",
    "CCSDS_128_64",
    "CcsdsForm",
    "CircPoly",
    "ConstructionError",
    "ConstructionResult",
    "CycleSumSet",
    "DistanceResult",
    "ExponentMatrix",
    "FormatError",
    "GirthReport",
    "METHOD_BFS",
    "METHOD_CONDITIONS",
    "METHOD_CYCLE_SUMS",
    "METHOD_POWER",
    "MultiEdgeError",
    "NminResult",
    "PreliftGuarantee",
    "PreliftView",
    "QcGirthError",
    "RepairResult",
    "STRUCTURE_PATTERNS",
    "SelectionStrategy",
    "StepRecord",
    "StructureScan",
    "UnsupportedParametersError",
    "catalog",
    "ccsds_CH",
    "ccsds_girth6_check",
    "ccsds_to_exponent_matrix",
    "check_conditions",
    "construct",
    "construct_girth6_girth8",
    "construct_three_row_girth10",
    "construct_three_row_girth12",
    "construct_two_row",
    "cycle_sum_girth",
    "cycle_sums",
    "excess",
    "expand",
    "export_alist",
    "find_blocking_entry",
    "gf2_nullspace",
    "girth_bfs_oracle",
    "girth_via_powers",
    "matrix_prelift",
    "merge_two_rows",
    "min_distance_nullspace",
    "nmin_search",
    "overlap_matrix",
    "parse_alist",
    "parse_qc",
    "poly_prelift",
    "prelift_admits_girth",
    "recursive_construction",
    "render_alist",
    "render_qc",
    "repair_girth",
    "require_binary",
    "scan_structures",
    "two_row_girth_relation",
]
