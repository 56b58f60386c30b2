"""Pairwise-unrelated copy families in subset lattices, their closed-form
estimates, explicit witness constructions, formula-free oracles, and the
bridge to minimum generating sets of powers of finite distributive lattices.
"""

from .bigcomb import (binom, central_binom, central_binom_adjoint,
                      fixed_ratio, left_adjoint, parse_count, sci_approx)
from .errors import (HypothesisError, InputError, ResourceLimitError,
                     SpernerError)
from .lattice_genset import (GminResult, generating_set_check,
                             gmin_bruteforce, gmin_power)
from .oracle import (OracleResult, enumerate_copies, perms_through,
                     perms_through_enum, sp_exhaustive, w_copy_perm_load,
                     w_perm_load_min)
from .poset_core import (DistLattice, Poset, SubsetAssignment,
                         antichain_poset, are_isomorphic, builtin_poset,
                         cardinal_sum, chain_lattice, chain_poset,
                         direct_power, down_set_lattice,
                         is_distributive_lattice, is_order_embedding,
                         join_irreducibles, length, mask_to_set_str,
                         parse_poset_text, poset_from_covers, powerset_poset,
                         v_poset, w_poset)
from .sperner import (SpernerResult, asp_bounded, asp_dispatch,
                      asp_general_bracket, asp_length_matching,
                      min_embedding, min_embedding_dimension, sp_bounded,
                      sp_dispatch, sp_general_bracket, sp_length_matching,
                      vw_pattern_kind)
from .sperner_estimates import (EstimatePair, asp_bracket, lower_v, lower_w,
                                ratio_report, sp_bracket, upper_v, upper_w,
                                w_bottom_size)
from .witness import (CertifyResult, UnrelatedFamily, certify,
                      witness_bounded, witness_v, witness_w)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
