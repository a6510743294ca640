"""k-core robustness: which vertex deletions knock the most vertices out of their core."""

__version__ = "0.1.0"

from .core import CoreDecomposition, DeletionTracker, core_decompose, k_core_members
from .errors import BudgetError, GraphError, InfeasibleError, ParseError, TMCVError
from .exact import exact_bruteforce, exact_forest_dp
from .generators import barabasi_albert, erdos_renyi
from .graph import Graph, delete_vertices, from_edge_list, parse_edge_list, to_edge_list
from .heuristics import (
    node_strength,
    select_ahdr,
    select_hdr,
    select_high_degree,
    select_random,
)
from .objective import AttackResult, affected_set, evaluate
from .reductions import (
    SetCoverInstance,
    exactcover_to_tmcv,
    inapprox_gadget_to_tmcv,
    setcover_to_tmcv,
)
from .resilience import fragmentation_entropy, pearson, resilience_core, resilience_rand
