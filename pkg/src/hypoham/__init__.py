"""hypoham: verification and construction of (planar) hypohamiltonian,
hypotraceable, and almost hypohamiltonian graphs."""

from .graph import DegreeCensus, Graph, GraphError, bits
from .formats import (FormatError, emit_graph6, parse_auto, parse_graph6,
                      parse_sparse6)
from .planarity import (EmbeddingError, FaceProfile, PlanarEmbedding,
                        PlanarityResult, check_planarity, crossing_number_at_most_one,
                        embedding_for, girth, is_planar)
from .symmetry import (CanonicalForm, automorphism_group_order, automorphisms,
                       canonical_form, is_isomorphic, orbits, pairwise_distinct)
from .hamiltonicity import (Budget, Certificate, ClassificationReport, classify,
                            find_hamiltonian_cycle, find_hamiltonian_path,
                            is_hamiltonian, is_hypohamiltonian, is_hypotraceable,
                            is_traceable, recheck_report, verify_cycle, verify_path)
from .grinberg import (FeasibilityResult, GrinbergError, ResidueScreen,
                       exact_feasibility, grinberg_nonhamiltonian, residue_screen)
from .constructions import (CombinePattern, ConstructionError, SharedSubgraphMap,
                            build_order, combine_four, h_equivalent,
                            h_strictly_bigger, insert, th, th_new_cycle)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
