"""Exact-arithmetic SL2-tilings and triangulations of marked discs.

The package evaluates Conway-Coxeter counting on triangulated disc
fragments (forward direction) and reconstructs a triangulation realising a
given tiling window from its pattern of unit entries (inverse direction),
together with frieze utilities, validation, and a CLI.
"""

from .disc_model import (D2, D3_WITH_II, D3_WITH_IV, D4, Arc, DiscFragment,
                         DiscShape, Vertex, arc, arcs_cross, close_window,
                         in_cyclic_order, validate_fragment, vertex_neighbors)
from .cc_counting import (LabelMap, cc_labels, cc_value, counting_window,
                          ptolemy_check)
from .frieze import (FriezeWindow, cc_frieze_from_polygon, extract_quiddity,
                     frieze_from_quiddity, triangulation_from_cc_frieze,
                     validate_frieze)
from .tiling import (OnesCertificate, TieReport, TilingWindow, ZigZag,
                     delete_at_local_max, derived_friezes, extend_from_seed,
                     ones_zigzag, unique_min, validate_window)
from .unit_arcs import (DefectMap, UnitArcSet, col_defect, defect_map,
                        is_saturated, longest_arcs, row_defect, unit_arc_set)
from .reconstruct import (AgreementReport, DivisionParams, EarPolygon, Move,
                          NonnegSL2Matrix, TilingClass, classify,
                          division_parameters, ear_polygon, invert_window,
                          matrix_with_sums, matrix_word, replay,
                          transpose_fragment, verify_agreement)
from .errors import TilingError, ValidationReport

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
