"""Combinatorics of the generalized Springer correspondence for SO(N):
partitions and eventual sequences, index orders and peeling procedures,
the gated sets P_{A,B;s}, symbols and the bijection phi_N, IC multiplicity
tables, and the maximal/minimal subrepresentation data."""

from .partitions import (EventualSeq, IncomparableTails, bipartitions_of,
                         dominance_leq, format_partition, lambda_ABs,
                         parse_partition, part, partial_sum, partitions_of,
                         pmult, psize, ptrim, punion, ray, seq_eq, seq_leq,
                         shifted_partition_seq, transpose)
from .orders import (IndexOrder, PeelResult, all_words, inequivalent_orders,
                     minimal_representative, orders_equivalent, procedure_a,
                     procedure_b)
from .pab import (p_abs_extremal, p_abs_is_extremal_member, p_abs_set, p_set)
from .symbols import (GSCDatum, M_value, SymbolPair, a_k, codomain_count,
                      datum_from_class_key, defect, distinct_odd_parts,
                      enumerate_pport, format_datum, format_eps, h_sizes,
                      is_H, is_degenerate, is_orthogonal, merged_symbol_seq,
                      order_from_H, parse_eps, phi_N, phi_N_inverse,
                      symbol_of)
from .multiplicity import (expansion_table, format_tpoly, local_system_table,
                           mult_bipartition, mult_local_systems,
                           pieri_extensions, raising_expansion,
                           springer_fiber_multiplicities, tpoly_at_one,
                           x_count)
from .maxmin import (is_quasi_distinguished, lambda_max_algorithm,
                     lambda_max_even, lambda_max_via_pab, lambda_min,
                     lambda_min_even, sign_twist)
