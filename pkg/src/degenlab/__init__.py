"""degenlab: exact Groebner degenerations and graded local cohomology checks."""

from .field import QQ, PrimeField, field_from_name, field_name
from .orders import (BlockOrder, DegRevLex, Lex, WeightOrder, cmp_monomials,
                     elimination_order, order_from_spec, order_spec)
from .ring import ParseError, PolyRing, Polynomial, RingMismatchError
from .groebner import (GroebnerBasis, Ideal, MonomialIdeal, buchberger,
                       eliminate, ideal_equal, ideal_intersection,
                       ideal_quotient, ideal_sum, is_groebner, normal_form,
                       radical_membership, s_polynomial)
from .degeneration import (GinUnstableError, HomogenizedIdeal,
                           WeightRealizationError, generic_initial_ideal,
                           gin_degree_part, homogenize_w, realize_weight)
from .hilbert import (RationalSeries, hilbert_series_monomial,
                      hilbert_series_quotient, quotient_dimension)
from .resolution import (FreeResolution, QuotientInvariants, betti_numbers,
                         betti_table_string, betti_via_koszul, depth_quotient,
                         extremal_betti, free_resolution, projective_dimension,
                         quotient_invariants, regularity)
from .cohomology import (check_buchsbaum_squarefree, check_cm_in_codim,
                         check_generalized_cm, check_serre,
                         cohomological_dimension_squarefree,
                         depth_from_cohomology, dim_from_cohomology, ext_series,
                         ext_table, local_cohomology_dimensions_agree,
                         local_cohomology_series, local_cohomology_table)
from .monomial import (cech_cohomology_series, cech_table,
                       hochster_cohomology_series, hochster_table,
                       monomial_betti_numbers, monomial_depth_dim)
from .simplicial import (DualGraph, Poset, SimplicialComplex, asl_discrete_ideal,
                         dual_graph, is_f_vector, minimal_primes_squarefree,
                         sr_complex, sr_ideal)
from .fixtures import Fixture, asl_poset, fixture_names, get_fixture
from .knutson import (DistinctnessViolation, KnutsonFamily, SquareFreeViolation,
                      knutson_closure)
from .ideal_files import (format_ideal_file, parse_complex_file,
                          parse_complex_text, parse_ideal_file, parse_ideal_text)
from .verify import (VerificationReport, Verdict, emit_report,
                     quotient_cohomology_series, quotient_h_vector,
                     reports_exit_code, run_fixture, run_paper_suite,
                     suite_fixture_names, verify_degeneration)

__version__ = "0.1.0"
