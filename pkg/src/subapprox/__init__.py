"""Exact approximation of submodular functions by simpler classes.

Directed cut and Gomory-Hu tree approximations, coverage approximations of
budgeted additive functions, decompositions into budgeted additive sums, and
exhaustive exact verifiers and certificates for all of them.
"""

from .core import (
    BudgetedAdditive,
    ConcaveModular,
    CoverageSystem,
    DirectedCut,
    HardInstance,
    HittingWeights,
    IntTable,
    Radical,
    ScaledSum,
    SetFunction,
    SqrtModular,
    Table,
    TreeCut,
    UndirectedCut,
    UndirectedGraph,
    UniformProfile,
    WeightedDigraph,
    WeightedTree,
    build_oracle,
    elements_of,
    evaluate,
    mask_of,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetedAdditive",
    "ConcaveModular",
    "CoverageSystem",
    "DirectedCut",
    "HardInstance",
    "HittingWeights",
    "IntTable",
    "Radical",
    "ScaledSum",
    "SetFunction",
    "SqrtModular",
    "Table",
    "TreeCut",
    "UndirectedCut",
    "UndirectedGraph",
    "UniformProfile",
    "WeightedDigraph",
    "WeightedTree",
    "build_oracle",
    "elements_of",
    "evaluate",
    "mask_of",
]
