"""Exact-arithmetic semi-simplicity certificates for the quantum cohomology
of Fano complete intersections in projective space.

Layers, bottom up: exact scalar rings (`rings`), univariate polynomials and
the numeric root oracle (`polys`), division-free linear algebra
(`matrices`), line counts via Schubert calculus on G(2, N) (`schubert`),
the deformed quantum-multiplication matrices (`operators`), the certifying
decision flow (`certify`), and a CLI (`cli`).
"""

from .rings import Jet, MPoly, NonUnitError, as_jet
from .polys import (RootFindingError, RootReport, UniPoly, discriminant,
                    numeric_roots, poly_gcd, resultant)
from .matrices import Matrix, char_poly, det
from .schubert import (GrassmannClass, LineInvariantTable, integrate,
                       line_invariant, sym_power_top_chern)
from .operators import (CoeffTable, CompleteIntersection, b_sum_consistent,
                        column_derivative_dets, deformation_direction_matrix,
                        deformed_char_poly, det_linear_closed_form,
                        det_linear_coefficient, enumerate_cases,
                        hyperplane_product_matrix, insertion_constraint_solutions,
                        matrix_from_json, matrix_to_json, normalize_degrees,
                        origin_char_poly, origin_product_matrix,
                        rescaled_operator_matrix, substitute_coordinate)
from .certify import (Certificate, CriterionResult, Hypotheses,
                      InternalInconsistencyError, OracleRefusedError,
                      OracleReport, OriginRootAnalysis, Verdict,
                      certificate_from_json, certificate_to_json, certify,
                      distinct_roots_criterion, numeric_oracle,
                      origin_repetition_evidence, origin_root_structure,
                      with_oracle)

__version__ = "0.1.0"
