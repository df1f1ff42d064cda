"""Complex evaluation of truncated series and the Fricke transformation checks.

Series are evaluated at q = exp(2 pi i tau) with mpmath; fractional exponents
use exp(2 pi i tau e), so q^(1/5) always means exp(2 pi i tau/5).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from quintic_theta.core.eisenstein import golden_product
from quintic_theta.core.exactfield import ALPHA, BETA, FieldElement
from quintic_theta.core.products import OrderLike
from quintic_theta.core.qseries import QSeries
from quintic_theta.core.quintic import fifth_powers, int_order, theta_series
from quintic_theta.core.report import CheckLog, IdentityReport
from quintic_theta.errors import SeriesError

logger = logging.getLogger(__name__)

DEFAULT_BITS = 53
RESIDUAL_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ComplexPoint:
    """A point tau of the upper half plane."""

    tau: complex

    def __post_init__(self) -> None:
        if complex(self.tau).imag <= 0:
            raise SeriesError(f"tau must lie in the upper half plane, got {self.tau}")

    @property
    def q(self) -> mpmath.mpc:
        return mpmath.exp(2j * mpmath.pi * mpmath.mpc(self.tau))

    @property
    def abs_q(self) -> float:
        return math.exp(-2 * math.pi * complex(self.tau).imag)

    def fricke(self) -> ComplexPoint:
        """-1/(5 tau)."""
        return ComplexPoint(-1 / (5 * complex(self.tau)))

    def required_order(self, bits: int = DEFAULT_BITS) -> int:
        """Smallest order N with |q|^N below 2^(-bits)."""
        return math.ceil(bits * math.log(2) / (2 * math.pi * complex(self.tau).imag))


def _zeta20() -> mpmath.mpc:
    return mpmath.exp(1j * mpmath.pi / 10)


def to_complex(c: FieldElement) -> mpmath.mpc:
    """Image of c under zeta_20 -> e^(pi i/10)."""
    return mpmath.mpc(c.embed(_zeta20()))


def eval_series(f: QSeries, tau: ComplexPoint | complex, bits: int = DEFAULT_BITS) -> mpmath.mpc:
    """Sum of the known terms of f at tau; raises when the tail is not below 2^(-bits)."""
    point = tau if isinstance(tau, ComplexPoint) else ComplexPoint(tau)
    if point.abs_q ** float(f.precision) >= 2.0 ** (-bits):
        raise SeriesError(
            f"order {f.precision} too small at tau = {point.tau}: "
            f"need order {point.required_order(bits)}"
        )
    with mpmath.workprec(bits + 20):
        step = mpmath.exp(2j * mpmath.pi * mpmath.mpc(point.tau) / f.grid_den)
        total = mpmath.mpc(0)
        # Horner over the grid, then the valuation factor
        for c in reversed(f.coeffs):
            total = total * step + (to_complex(c) if c else 0)
        return total * step**f.val


def _fifth_root(tau: complex) -> mpmath.mpc:
    """tau^(1/5) with argument in [0, 2 pi/5)."""
    z = mpmath.mpc(tau)
    arg = mpmath.arg(z)
    if arg < 0:
        arg += 2 * mpmath.pi
    return abs(z) ** (mpmath.mpf(1) / 5) * mpmath.expj(arg / 5)


def fricke_constants() -> tuple[mpmath.mpc, mpmath.mpc]:
    """(gamma_1, gamma_2): sqrt((5 -+ sqrt5)/2) e^(-pi i/10) / 5^(3/10)."""
    root5 = mpmath.sqrt(5)
    phase = mpmath.expj(-mpmath.pi / 10) / mpmath.power(5, mpmath.mpf(3) / 10)
    return mpmath.sqrt((5 - root5) / 2) * phase, mpmath.sqrt((5 + root5) / 2) * phase


def gamma_polynomial(x: mpmath.mpc) -> mpmath.mpc:
    return 1 + 25 * x**10 + 5 * x**20


@dataclass(frozen=True)
class FrickeResidual:
    """Residuals of A(-1/(5 tau)) = gamma_1 tau^(1/5) C(tau) and the B, D partner."""

    tau: complex
    residual_a: float
    residual_b: float
    gamma_a: complex
    gamma_b: complex

    @property
    def gamma_residuals(self) -> tuple[float, float]:
        """|1 + 25 x^10 + 5 x^20| at the gammas extracted from the series values."""
        return (
            float(abs(gamma_polynomial(mpmath.mpc(self.gamma_a)))),
            float(abs(gamma_polynomial(mpmath.mpc(self.gamma_b)))),
        )

    def passed(self, tolerance: float = RESIDUAL_TOLERANCE) -> bool:
        return max(self.residual_a, self.residual_b) < tolerance


def fricke_check(tau: ComplexPoint | complex, order: OrderLike = 80, bits: int = DEFAULT_BITS) -> FrickeResidual:
    point = tau if isinstance(tau, ComplexPoint) else ComplexPoint(tau)
    n = int_order(order)
    image = point.fricke()
    a_val = eval_series(theta_series("A", order=n), image, bits)
    b_val = eval_series(theta_series("B", order=n), image, bits)
    c_val = eval_series(theta_series("C", order=n), point, bits)
    d_val = eval_series(theta_series("D", order=n), point, bits)
    root = _fifth_root(point.tau)
    g1, g2 = fricke_constants()
    res_a = abs(a_val - g1 * root * c_val)
    res_b = abs(b_val - g2 * root * d_val)
    logger.debug("Fricke residuals at tau=%s: %s, %s", point.tau, res_a, res_b)
    return FrickeResidual(
        tau=complex(point.tau),
        residual_a=float(res_a),
        residual_b=float(res_b),
        gamma_a=complex(a_val / (root * c_val)),
        gamma_b=complex(b_val / (root * d_val)),
    )


FRICKE_POINTS = (1j, 1j / math.sqrt(5), 0.5 + 1j)


def verify_fricke(order: OrderLike = 80, points: tuple[complex, ...] = FRICKE_POINTS) -> IdentityReport:
    log = CheckLog("fricke", "Fricke involution on A, B and C, D")
    for tau in points:
        outcome = fricke_check(tau, order)
        log.require(
            f"tau = {tau:.4g}",
            outcome.passed(),
            f"residuals {outcome.residual_a:.2e}, {outcome.residual_b:.2e}",
        )
        worst = max(outcome.gamma_residuals)
        log.require(f"gamma minimal polynomial at tau = {tau:.4g}", worst < 1e-8, f"{worst:.2e}")
    log.order = Fraction(int_order(order))
    return log.report()


# -- the continued fraction under W_5 ---------------------------------------

FULS_POINTS = (1j, 0.25 + 1.2j)


def fuls_check(order: OrderLike = 80, beta: FieldElement = BETA) -> IdentityReport:
    """R(-1/(5 tau)) = -beta C/D and its exact series companions.

    The product and the A(q^5), B(q^5) forms equal C/D itself, and the
    fifth power of C/D is (B^5 - alpha^5 A^5)/(B^5 - beta^5 A^5) at q.
    *beta* replaces the prefactor for negative controls.
    """
    n = int_order(order)
    log = CheckLog("fuls", "continued fraction under the Fricke involution")
    c_lin, d_lin = theta_series("C", "linear", n), theta_series("D", "linear", n)
    ratio = c_lin / d_lin
    prefactor = -beta
    log.compare(
        "-beta C/D as a product",
        ratio * prefactor,
        golden_product("beta", n) / golden_product("alpha", n) * (-BETA),
        n,
    )
    c_prod, d_prod = theta_series("C", "product", n), theta_series("D", "product", n)
    log.compare("C/D from the products", c_prod / d_prod, ratio, n)
    a5, b5 = fifth_powers(n)
    fifth = (b5 - a5 * ALPHA**5) / (b5 - a5 * BETA**5)
    log.compare("(C/D)^5 in A^5, B^5", ratio**5, fifth, n)

    r_series = theta_series("A", order=n) / theta_series("B", order=n)
    for tau in FULS_POINTS:
        point = ComplexPoint(tau)
        lhs = eval_series(r_series, point.fricke())
        rhs = to_complex(prefactor) * eval_series(ratio, point)
        residual = float(abs(lhs - rhs))
        log.require(f"R(-1/(5 tau)) at tau = {tau:.4g}", residual < RESIDUAL_TOLERANCE, f"{residual:.2e}")
    log.note("the product and A(q^5), B(q^5) forms equal C/D (printed as its reciprocal without -beta)")
    return log.report()
