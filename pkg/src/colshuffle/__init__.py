"""Exact closed forms for Hadamard products of rational generating
functions attached to labelled coloured configurations.

The package models coloured permutations and their descent statistics,
configurations (multisets of coloured permutations) with signed-monomial
labels on colours, and the rational generating functions these data define.
Hadamard products of such functions are computed in closed form by
shuffling configurations, verified against truncated-series oracles, and
instantiated on a catalog of zeta functions of modules, groups and graphs.
"""

from .errors import (BadParameters, ColourOutOfRange, ColshuffleError,
                     DeltaMismatch, NotCoherent, OrderMismatch, ParseError,
                     SymbolOverlap, UnknownFamily, UnknownSuite,
                     ZeroSubstitution)
from .permutations import (ColouredDescentSet, ColouredInteger,
                           ColouredPermutation, StatTriple,
                           all_coloured_permutations,
                           canonical_statistics_class, compare, descent_data,
                           descent_set, parse_permutation, s_des, shuffles,
                           stat_triple)
from .configurations import (ColouredConfiguration, Label,
                             LabelledConfiguration, SignedMonomial,
                             canonicalize, check_coherence, config_shuffle,
                             evaluate_label, make_strongly_disjoint,
                             merge_labels, parse_labelled_configuration)
from .ratfun import (DEFAULT_ORDER, LaurentPoly, RationalGF, SeriesY, equal,
                     expand, hadamard_series, scale_y, substitute, w_of)
from .mpoly import MPoly
from .shuffle_algebra import (STATISTICS, CompatReport, HImage,
                              check_shuffle_compatibility, h_map, h_of,
                              h_tilde_map, hadamard_general,
                              hadamard_identity, hadamard_iterated,
                              hadamard_via_theorem)
from .qsym import (TruncatedQSym, expand_F, psi_closed_form_check, psi_m,
                   verify_product_rule)
from .zeta import (FAMILY_PARAMS, F2dFormula, UdFormula, ZetaEntry,
                   ZetaHadamardResult, build_entry, hadamard_entries,
                   hadamard_f2d, hadamard_mde, hadamard_ud, pi_of, underline,
                   underline_block)

__version__ = "0.1.0"
