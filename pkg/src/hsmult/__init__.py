"""Exact multiplicities of ideals and of blow-down singularities, each
cross-checked against an independent combinatorial route."""

from .blowdown import (BasePointDatum, BoundsInput, LineBundleDatum, Semigroup,
                       dseq_from_semigroup, first_nongap, lambda_multiplicity, mult_bounds,
                       rs_blowdown_multiplicity, vol_control_check)
from .chern import (GradedClass, IntersectionTable, dual_class, segre_from_chern,
                    top_segre_integral)
from .curve import (BranchSeries, CurveGerm, branch_order, curve_lelong_number,
                    pullback_order, verify_curve_lelong, verify_thm13_curve)
from .ideal import (GroebnerBasis, IdealPresentation, colength, groebner_basis,
                    ideal_power_product, is_origin_supported, normal_form)
from .monomial import MonomialIdeal, newton_multiplicity_2d, staircase_colength
from .multiplicity import (MultiplicityReport, hs_multiplicity, infer_dimension,
                           mixed_multiplicity, polarization_check, rees_sharp_check, replay)
from .poly import DEGREVLEX, LEX, Polynomial, TermOrder, parse_polynomial

__version__ = "0.1.0"
