"""Exact weight multiplicities for the rank-2 Lie algebras C2 and A2."""
from .exact_series import (LaurentPoly2, Poly2, RationalGF, TruncatedSeries2, lp_coeff, lp_mul,
                           rational_equal, series_arith, series_from_rational)
from .lie_rank2 import (A2, C2, MultTable, RepLabel, RootSystem, Weight, contains_weight,
                        dominant_representative, freudenthal_mult, mult_from_character, mult_table,
                        weyl_character, weyl_dim, weyl_orbit)

__all__ = [
    "A2", "C2", "LaurentPoly2", "MultTable", "Poly2", "RationalGF", "RepLabel", "RootSystem",
    "TruncatedSeries2", "Weight", "contains_weight", "dominant_representative", "freudenthal_mult",
    "lp_coeff", "lp_mul", "mult_from_character", "mult_table", "rational_equal", "series_arith",
    "series_from_rational", "weyl_character", "weyl_dim", "weyl_orbit",
]
__version__ = "0.1.0"
