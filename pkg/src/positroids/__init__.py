"""
Positroids of interval-support matrices, their Catalan decomposition, rank
and Tutte polynomial formulas, and diagram matroids.
"""

from .diagram import check_conjectures, pattern_DMw, rothe_diagram, shift_w_family, shift_w_pattern
from .errors import DomainError, ResourceLimitError
from .families import SetFamily, family
from .oracle import SupportPattern, enumerate_bases, pattern_Mw, rank_of, tutte_by_rank
from .perms import avoids_123, bruhat_leq, g_stat, parse_perm
from .poly import BivariatePoly
from .positroid import Q_family, enumerate_Pw, member, u_perm, v_word
from .tutte import T_n, rank_in_Pw, tutte_Pw

__all__ = [
    "BivariatePoly", "DomainError", "ResourceLimitError", "SetFamily",
    "SupportPattern", "Q_family", "T_n", "avoids_123", "bruhat_leq",
    "check_conjectures", "enumerate_Pw", "enumerate_bases", "family", "g_stat",
    "member", "parse_perm", "pattern_DMw", "pattern_Mw", "rank_in_Pw",
    "rank_of", "rothe_diagram", "shift_w_family", "shift_w_pattern",
    "tutte_Pw", "tutte_by_rank", "u_perm", "v_word",
]

__version__ = "0.1.0"
