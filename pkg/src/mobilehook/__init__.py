"""Exact hook-length formulas for linear extensions of mobile posets."""

from .excited import ExcitedDiagram, enumerate_diagrams, p_D, w_stat
from .formulas import (FormulaReport, bounds, bw_tree_inv, dcomplete_maj, euler_family, hlf_count,
                       mobile_count, mobile_inv_H, mobile_maj_H, mpp_q_nhlf, nhlf_count,
                       stanley_q_hlf, verify_inv_recurrence, verify_maj_recurrence)
from .kernels import BACKEND
from .mobile import HangingPoset, InvalidMobile, MobilePoset
from .poset import LabeledPoset, count_extensions, eq_stat
from .qseries import IntPoly, NonExactDivision
from .shapes import Partition, SkewShape

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ExcitedDiagram", "FormulaReport", "HangingPoset", "IntPoly", "InvalidMobile",
    "LabeledPoset", "MobilePoset", "NonExactDivision", "Partition", "SkewShape", "bounds",
    "bw_tree_inv", "count_extensions", "dcomplete_maj", "enumerate_diagrams", "eq_stat",
    "euler_family", "hlf_count", "mobile_count", "mobile_inv_H", "mobile_maj_H", "mpp_q_nhlf",
    "nhlf_count", "p_D", "stanley_q_hlf", "verify_inv_recurrence", "verify_maj_recurrence",
    "w_stat",
]
