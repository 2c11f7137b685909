"""Exchange matrices of chains of i-boxes, computed three ways.

The mutation-path construction, the signed-word formula and the
interval-incidence formula are exposed side by side, together with
verifiers that compare them.
"""

from .cartan import CartanMatrix, DynkinInvolution, finite_type_cartan, standard_involution, validate_cartan
from .engines import (MoveTraceStep, Report, b_initial, b_kk, b_via_mutation_path, b_word,
                      verify_all_prefixes, verify_chain, verify_path_independence, verify_stabilization)
from .exmatrix import ExchangeMatrix, check_skew_symmetrizable, mutate, permute
from .ibox import (Chain, IBox, box_left_closure, box_move, box_right_closure, chain_from_pair,
                   color_shift, effective_end, frozen_indices, initial_chain, movable, pair_from_chain,
                   path_to_initial)
from .iword import NEG_INF, POS_INF, IWord, hat_w0_window
from .signedword import SignedWord, b_matrix_signed, flip, left_reflection, signed_word_of_chain

__version__ = "0.1.0"
