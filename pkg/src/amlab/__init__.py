"""Exact-arithmetic toolkit for the Artin-Mumford curve over F_p.

Modules:
  gf        exact F_p and F_{p^k} arithmetic with deterministic moduli
  poly      uni/bivariate polynomials, rational functions, places
  grp       the group (C_p x C_p) : D_{p-1} and GL(2,p) normal forms
  curve     curve models, points, branch places, orbits
  ascover   Artin-Schreier covers: reduction, ramification, genus, p-rank
  zeta      point counting and exact L-polynomial fitting
  pipeline  the end-to-end verification chain
  cli       command-line reports
"""

from .gf import (FieldElement, FieldError, FieldSpec, artin_schreier_solve,
                 field_with_modulus, make_field, primitive_element, trace)
from .poly import (Place, Poly1, Poly2, PolyError, RationalFunction, divides2,
                   divisor, parse_poly2, parse_rational, pole_divisor,
                   substitute2, valuation)
from .grp import (GroupElement, GroupError, Mat2, Subgroup, canonical_pair,
                  compose, dihedral_normal_form, full_group, generators,
                  mulclose, verify_presentation)
from .curve import (AMCurve, BudgetError, CurveError, CurvePoint, OrbitReport,
                    VGVCurve, apply_automorphism, branch_places,
                    enumerate_points, hyperelliptic_witness, short_orbits,
                    verify_invariance)
from .ascover import (ASCover, CoverError, CoverReport, RamificationDatum,
                      abstract_deuring_shafarevich, composite_report,
                      deuring_shafarevich, ramification_filtration,
                      reduce_standard_form, riemann_hurwitz)
from .zeta import (ZetaError, ZetaReport, count_cover_points, count_points,
                   count_points_naive, fit_l_polynomial, predict_counts,
                   zeta_report)
from .pipeline import (CheckResult, TheoremReport, check_diagonal_quotient,
                       check_fibered_system_and_substitution,
                       check_fixed_field_translations,
                       check_quotient_by_translation, run_all)

__version__ = "0.1.0"
