"""Überhomology of simplicial complexes and bold homology of graphs over fields."""

__version__ = "0.1.0"

from .linalg import GF2, QQ, GF, Field, SparseMatrix, Vector, rank, kernel_basis, coordinates_in_span
from .complex import (ChainMap, GradedComplex, HomologySummary, euler_characteristic, homology,
                      induced_map_on_homology, validate)
from .morse import (LayerFunction, MorseMatching, is_acyclic, layered_acyclicity, morse_reduce,
                    validate_matching)
from .simplicial import (Colouring, ColouredMap, SimplicialComplex, horizontal_complex,
                         horizontal_homology, induced_injective_map, transition_chain_map, weight)
from .uber import boolean_complex, bold_slice, covers, sign, uber_complex, uber_homology
from .graphs import FamilySpec, Graph, cartesian_product, cone, emit_graph6, generate, neck_stretch, parse_graph6
from .bold import (BoldGenerator, IntPolynomial, bold_complex, bold_homology, components,
                   connected_domination_polynomial, connected_dominating_sets, dominating_complex,
                   domination_polynomial, euler_check, retraction_matching)
