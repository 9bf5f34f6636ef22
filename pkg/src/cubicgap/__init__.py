"""Exact certification of cubic graphs with no eigenvalues in (-2, 0)."""

from .graphs import (Graph, INFINITE, common_neighbors, corona_product_cycle, degree,
                     dodecahedron, generalized_petersen, girth, is_connected, is_cubic,
                     parse_graph6, petersen, prism, to_graph6, tutte_eight_cage)
from .poly import IntPoly, square_free_decomposition
from .intmatrix import IntMatrix, char_poly, det_exact
from .roots import Interval, count_roots_in, smallest_root_bracket
from .certify import (GapVerdict, MinorWitness, find_negative_witness, gap_check,
                      implied_interval_from_submatrix, is_psd, m_matrix, m_submatrix)
from .corona import (Corona, MarkedGraph, colored_isomorphic, corona_of_cycle,
                     enumerate_girth5_extensions, m_ss_from_marked,
                     strong_open_neighbourhood, tilde_subgraph, verify_girth5_endgame)
from .families import (SpectrumRecord, build_xn, classify, sporadic,
                       xn_charpoly_identity_check, xn_gap_check)
from .generate import (EnumSpec, enumerate_cubic, girth_profile, verify_classification)
from .lemmas import lemma_replay

__all__ = [name for name in dir() if not name.startswith("_")]
