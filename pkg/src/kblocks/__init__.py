"""k-blocks of finite graphs: finding, certifying and analysing them."""

from .analysis import (PreconditionError, Tangle, TangleViolation, TShapeReport, TShapeWitness,
                       is_t_shaped, pruned_theta2, t_shaped_equivalence_report, tangle_from_set,
                       unpruned_theta2)
from .blocks import (BlockDecomposition, BlockSet, DecompositionNode, DecompositionReport, block_number,
                     block_width_certificate, find_all_blocks, find_blocks, verify_decomposition)
from .connectivity import InvalidPairError, KappaResult, SplitNetwork, is_k_connected, kappa, kappa_bounded
from .decision import Decision, WitnessCheck, WitnessSet, decide_k_block, verify_witness
from .graph import (Graph, NotASeparationError, Separation, VertexSet, components_after_removal,
                    corner_orders, degree_stats, make_separation)
from .inseparability import InsepGraph, KappaTable, hk_view, preprocess, preprocess_full
from .oracle import (BudgetExceededError, SeparationCatalog, enumerate_separations, oracle_blocks,
                     oracle_kappa, oracle_pair_inseparable)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition", "BlockSet", "BudgetExceededError", "Decision", "DecompositionNode",
    "DecompositionReport", "Graph", "InsepGraph", "InvalidPairError", "KappaResult", "KappaTable",
    "NotASeparationError", "PreconditionError", "Separation", "SeparationCatalog", "SplitNetwork",
    "TShapeReport", "TShapeWitness", "Tangle", "TangleViolation", "VertexSet", "WitnessCheck",
    "WitnessSet", "block_number", "block_width_certificate", "components_after_removal",
    "corner_orders", "decide_k_block", "degree_stats", "enumerate_separations", "find_all_blocks",
    "find_blocks", "hk_view", "is_k_connected", "is_t_shaped", "kappa", "kappa_bounded",
    "make_separation", "oracle_blocks", "oracle_kappa", "oracle_pair_inseparable", "preprocess",
    "preprocess_full", "pruned_theta2", "t_shaped_equivalence_report", "tangle_from_set",
    "unpruned_theta2", "verify_decomposition", "verify_witness",
]
