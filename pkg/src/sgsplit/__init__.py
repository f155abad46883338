"""Triangular splittings of bound quiver algebras.

Decides when a finite-dimensional quotient of a path algebra splits as a
triangular matrix algebra with a semisimple-on-the-left, projective-on-the-right
corner bimodule, performs the corresponding reduction recursively, and probes
the resulting stable categories through exact syzygy calculus.
"""

from sgsplit.linalg import QQ, GF, Field, Matrix
from sgsplit.quiver import (
    Arrow,
    Quiver,
    Path,
    QuotientAlgebra,
    build_quotient,
    compose,
)
from sgsplit.modules import ModuleRep, ModuleMap, direct_sum
from sgsplit.triangular import Bipartition, TriangularData, Triple, extract_triangular
from sgsplit.splitting import find_splits, decompose, check_syntactic
from sgsplit import probes

__all__ = [
    "QQ",
    "GF",
    "Field",
    "Matrix",
    "Arrow",
    "Quiver",
    "Path",
    "QuotientAlgebra",
    "build_quotient",
    "compose",
    "ModuleRep",
    "ModuleMap",
    "direct_sum",
    "Bipartition",
    "TriangularData",
    "Triple",
    "extract_triangular",
    "find_splits",
    "decompose",
    "check_syntactic",
    "probes",
]
