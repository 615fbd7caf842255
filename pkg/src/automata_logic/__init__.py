"""Empirical logics of normalized finite automata.

``micro_logic`` builds the partition logic of single automata,
``macro_logic`` the closure logic of automaton ensembles, and
``experiments`` simulates the measurements behind both.
"""

from .core import (
    FINAL,
    Graph,
    GraphFormatError,
    StateSet,
    closed_neighborhood,
    delta,
    format_set,
    output,
    parse_graph,
    run,
)
from .experiments import (
    Ensemble,
    MicroObservation,
    Protocol,
    distinguishable,
    identify_single,
    infer_macrostate,
    run_protocol,
    run_protocol_exhaustive,
)
from .macro_logic import (
    MacroLogic,
    build_macro_logic,
    check_ortholattice,
    check_orthomodular,
    closure,
    is_testable_macro,
    macro_join,
    macro_meet,
    overlap_report,
    perp,
)
from .micro_logic import (
    MicroLogic,
    Partition,
    build_micro_logic,
    distinct_partitions,
    is_testable_micro,
    micro_implies,
    micro_negation,
    partition_for_input,
    recognize_mo_n,
)
from .order_toolkit import Poset, hasse_edges, is_lattice, to_dot

__version__ = "0.1.0"
