"""Conjectural rank parities of quartic (y^2 = x^3 + dx) and sextic (y^2 = x^3 + d) twists over Q."""
from .arith import Factorization, factorize, ord_p, parse_rational, power_free_representative, reduce, unit_part
from .characters import character_term, kronecker, support_S, support_T, support_U
from .descent import cross_check, descent_report, lambda_parity, locally_soluble, selmer_rank
from .parity import (
    ParityBreakdown,
    classify,
    classify_cubic,
    classify_quadratic,
    classify_quartic,
    classify_sextic,
)
from .residues import INF, PlaceClassKey, class_modulus, equivalent, place_class_key, unit_class_representative
from .tables import LocalInvariantTable, builtin_table, dump_table, load_table

__version__ = "0.1.0"
