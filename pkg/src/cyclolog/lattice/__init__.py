"""Ground-truth lattice computations at small rank."""

from cyclolog.lattice.basis import LatticeBasis, gram, numerical_rank
from cyclolog.lattice.enumeration import (
    ClosestPoint,
    CVPSolver,
    LatticePoint,
    SuccessiveMinima,
    closest_vector,
    shortest_vector,
    successive_minima,
)
from cyclolog.lattice.lll import is_lll_reduced, lll_reduce, lll_reduce_with_transform

__all__ = [
    "CVPSolver",
    "ClosestPoint",
    "LatticeBasis",
    "LatticePoint",
    "SuccessiveMinima",
    "closest_vector",
    "gram",
    "is_lll_reduced",
    "lll_reduce",
    "lll_reduce_with_transform",
    "numerical_rank",
    "shortest_vector",
    "successive_minima",
]
