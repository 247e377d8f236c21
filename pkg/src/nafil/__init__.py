"""Construction and verification of an infinite family of odd-order NAFIL loops.

A NAFIL loop is a non-associative finite loop in which every element has a
unique two-sided inverse.  :func:`construct_nafil` builds one of every odd
order ``n = 2m + 1 >= 5``; the remaining modules check its algebraic
properties exhaustively.
"""

__version__ = "0.1.0"

from .latin import (
    Block,
    Table,
    assemble,
    delete_column,
    delete_row,
    format_table,
    is_latin,
    is_standard_form,
    parse_table,
    read_table,
    substitute,
    transpose,
    write_table,
)
from .loops import (
    Loop,
    NotALoop,
    NotInvertible,
    NotLatin,
    Quasigroup,
    associativity_witness,
    certify_loop,
    certify_quasigroup,
    generated_subloop,
    inverse_map,
    left_divide,
    multiply,
    right_divide,
)
from .sweep import CheckResult
from .construct import (
    ConstructionInvalid,
    ConstructionParams,
    ConstructionTrace,
    construct_nafil,
    counter_cyclic_transpose,
    cyclic_block,
    lk_double_prime,
    lk_prime,
    starred_block,
)
from .properties import PropertyId, PropertyReport, check, check_identity_on_quasigroup, full_report
from .subloops import (
    SubloopSet,
    enumerate_subloops,
    is_normal,
    is_simple,
    lagrange_violations,
    subgroup_census,
)
from .algebra import commutator_constants, jacobi_holds, structure_constants
from .report import AnalysisReport, analyze
