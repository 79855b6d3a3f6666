"""Higher Bruhat orders B(n, d), their insertions, and the small and big Bruhat planar operads."""

from .bruhat import (
    BruhatElement,
    BudgetExceeded,
    InversionSet,
    LinearOrder,
    MaximalChain,
    ZieglerViolation,
    chain_to_order,
    enumerate_admissible_classes,
    enumerate_bruhat,
    hasse,
    inversions,
    is_admissible,
    leq,
    maximal_chains,
    ziegler_check,
)
from .core import Packet, k_subsets, monotone_bijection, packet
from .insertion import InsertionFrame, bar, insert, permutation_insert
from .operads import (
    BigBruhatElement,
    FElement,
    MoleculeType,
    big_compose,
    f_compose,
    master_compose,
    small_compose,
    sym_compose,
    verify_operad_laws,
    monotone_compose_check,
)

__all__ = [
    "BigBruhatElement", "BruhatElement", "BudgetExceeded", "FElement", "InsertionFrame",
    "InversionSet", "LinearOrder", "MaximalChain", "MoleculeType", "Packet", "ZieglerViolation",
    "bar", "big_compose", "chain_to_order", "enumerate_admissible_classes", "enumerate_bruhat",
    "f_compose", "hasse", "insert", "inversions", "is_admissible", "k_subsets", "leq",
    "master_compose", "maximal_chains", "monotone_bijection", "monotone_compose_check", "packet",
    "permutation_insert", "small_compose", "sym_compose", "verify_operad_laws", "ziegler_check",
]
