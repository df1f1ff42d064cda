"""Exact algebra for the quintic theta functions.

Exports
-------
* :class:`FieldElement` – exact element of Q(zeta_20)
* :class:`QSeries` – truncated series on a 1/d exponent grid
* :class:`HomPoly` – homogeneous polynomial in A^5, B^5
* :class:`IntMatrix` – integer matrix for pentamidiation arrays
* :class:`IdentityReport` / :class:`CheckLog` – verification outcomes
* :func:`theta_series` – A, B, C, D in sum, product or linear form
* :func:`compare_to_order` – coefficient comparison below a bound
"""

from quintic_theta.core.exactfield import ALPHA, BETA, I, SQRT5, ZETA5, FieldElement
from quintic_theta.core.pentops import HomPoly, IntMatrix, MixedPoly, hecke_matrix, pent_array
from quintic_theta.core.qseries import QSeries, compare_to_order
from quintic_theta.core.quintic import fifth_powers, quintic_pair, theta_series
from quintic_theta.core.report import CheckLog, IdentityReport

__all__ = [
    "ALPHA",
    "BETA",
    "CheckLog",
    "FieldElement",
    "HomPoly",
    "I",
    "IdentityReport",
    "IntMatrix",
    "MixedPoly",
    "QSeries",
    "SQRT5",
    "ZETA5",
    "compare_to_order",
    "fifth_powers",
    "hecke_matrix",
    "pent_array",
    "quintic_pair",
    "theta_series",
]
