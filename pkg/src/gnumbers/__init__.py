"""G-numbers: the real algebra generated by two nilpotents ``a``, ``b`` with ``ab + ba = 1``.

Elements are stored by their coordinates over the null basis
``(ba, b, a, ab)``, which are exactly the entries of the corresponding
2x2 matrix.
"""
from .core import (
    A_GEN,
    AB,
    B_GEN,
    BA,
    DEFAULT_TOL,
    E,
    F,
    FE,
    ONE,
    ZERO,
    CGNum,
    GNum,
    StdCoords,
    conjugate,
    det,
    dot,
    from_std,
    inverse,
    mul,
    parts,
    skew,
    split_product,
    std_coords,
    sym,
    trace,
)
from .errors import GNumberError
from .matrix import from_matrix, to_matrix
from .structure import (
    canonical_form,
    classify,
    eigenpotents,
    euler_form,
    euler_reconstruct,
    exp_vector,
    regrade,
)
from .vectors import Vec3

__all__ = [
    "A_GEN", "AB", "B_GEN", "BA", "DEFAULT_TOL", "E", "F", "FE", "ONE", "ZERO",
    "CGNum", "GNum", "StdCoords", "GNumberError", "Vec3",
    "conjugate", "det", "dot", "from_std", "inverse", "mul", "parts", "skew",
    "split_product", "std_coords", "sym", "trace", "from_matrix", "to_matrix",
    "canonical_form", "classify", "eigenpotents", "euler_form", "euler_reconstruct",
    "exp_vector", "regrade",
]
