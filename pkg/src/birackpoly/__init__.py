"""Birack counting invariants and their polynomial enhancements.

Finite biracks label the semiarcs of (virtual) link diagrams; a birack
module turns each labeling into a presentation matrix whose elementary
ideals give polynomial invariants.

>>> from birackpoly import datasets, phi_delta
>>> str(phi_delta(datasets.link("virtual_trefoil"), datasets.module("z5q_a")))
'{ 2 x (1+q+3q^2) }'
"""
from .birack import (
    MAX_BIRACK_SIZE, Birack, BirackError, apply_B, apply_B_inverse, format_birack,
    format_cycles, kink_data, load_birack, parse_birack, permutation_cycles, validate_birack,
)
from .diagram import (
    Crossing, GaussCode, GaussCodeError, LinkDiagram, Token, add_kinks, build_diagram,
    format_gauss_code, framing_tile, load_link, parse_gauss_code,
)
from .invariant import (
    BeadMultiset, PolyMultiset, PresentationMatrix, alexander, alexander_module, bead_count,
    elementary_ideal_generator, phi_beads, phi_delta, presentation_matrix, sawollek,
    sawollek_module,
)
from .labeling import (
    XLabeling, basic_counting, crossing_inputs, enumerate_labelings, integral_counting,
    is_labeling, tile_labelings,
)
from .linalg import RingMatrix, count_nullspace, determinant, minors_gcd, smith_normal_form
from .module import (
    FAMILIES, BirackModule, ModuleError, SearchShape, format_module, load_module,
    parse_module, relation_instances, search_modules, validate_module,
)
from .poly import (
    LaurentPoly, ParseError, RingMismatchError, RingSpec, UnsupportedRingError, divide_exact,
    format_poly, gcd_univariate, gcd_univariate_in, is_unit, normalize_up_to_units,
    parse_poly, parse_ring,
)
from . import datasets

__version__ = "0.1.0"
