"""Differential equations: the quintic system, the t-system and Kaneko's equation.

Derivatives are ``q d/dq`` throughout and ``E_2`` is the level one series
1 - 24 sum sigma(n) q^n.  Every check is a series identity compared with
:class:`~quintic_theta.core.report.CheckLog`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from quintic_theta.core.eisenstein import eisenstein_level1, eisenstein_level5, t_series
from quintic_theta.core.exactfield import FieldElement
from quintic_theta.core.pentops import HomPoly, fit_hompoly
from quintic_theta.core.products import OrderLike
from quintic_theta.core.qseries import Comparison, QSeries, compare_to_order, format_exponent
from quintic_theta.core.quintic import (
    fifth_powers,
    int_order,
    quintic_pair,
    rr_continued_fraction,
)
from quintic_theta.core.report import CheckLog, IdentityReport
from quintic_theta.core.tables import published
from quintic_theta.errors import SeriesError

logger = logging.getLogger(__name__)

# (A^10, A^5 B^5, B^10, P) weights in 60 theta log A
QUINTIC_ODE_COEFFICIENTS = (-5, -66, 7, 5)


def _p_series(n: int) -> QSeries:
    """P(q) = E_2(q^5) known below q^n."""
    small = int_order(Fraction(n, 5)) + 1
    return eisenstein_level1(2, small).substitute_power(5).truncate(n)


def _ode_bracket(coefficients: tuple[int, int, int, int], swap: bool, n: int) -> QSeries:
    c_a10, c_mixed, c_b10, c_p = coefficients
    if swap:
        # theta log B: A and B trade places and the mixed term changes sign
        poly = HomPoly.of(c_a10, -c_mixed, c_b10)
    else:
        poly = HomPoly.of(c_b10, c_mixed, c_a10)
    return poly.series(n) + _p_series(n) * c_p


def verify_quintic_ode(
    order: OrderLike = 100,
    coefficients: tuple[int, int, int, int] = QUINTIC_ODE_COEFFICIENTS,
) -> IdentityReport:
    """The coupled system for A, B and P = E_2(q^5), with Ramanujan's level one system.

    *coefficients* overrides the weights of (A^10, A^5 B^5, B^10, P) in the
    equation for A; the equation for B uses the same weights with A and B
    exchanged.
    """
    n = int_order(order)
    log = CheckLog("quintic-ode", "coupled differential system for A, B and E_2(q^5)")
    a, b = quintic_pair(n)
    sixtieth = Fraction(1, 60)
    log.compare("theta A", a.theta_derivative(), a * _ode_bracket(coefficients, False, n) * sixtieth, n)
    log.compare("theta B", b.theta_derivative(), b * _ode_bracket(coefficients, True, n) * sixtieth, n)

    p = _p_series(n)
    e4_q5 = HomPoly.of(*published("E4_q5").data).series(n)
    log.compare("theta P", p.theta_derivative(), (p * p - e4_q5) * Fraction(5, 12), n)

    e2, e4, e6 = (eisenstein_level1(k, n) for k in (2, 4, 6))
    log.compare("theta E_2", e2.theta_derivative(), (e2 * e2 - e4) * Fraction(1, 12), n)
    log.compare("theta E_4", e4.theta_derivative(), (e2 * e4 - e6) * Fraction(1, 3), n)
    log.compare("theta E_6", e6.theta_derivative(), (e2 * e6 - e4 * e4) * Fraction(1, 2), n)
    return log.report()


# -- the t-system -----------------------------------------------------------

# t_i as (A^5, B^5 polynomial, coefficient of P); t_2 carries the sign fix
T_FORMS: dict[int, tuple[tuple[Fraction | int, ...], Fraction | int]] = {
    1: ((1, 2), 0),
    2: ((0, -1), 0),
    3: ((Fraction(-1, 24), Fraction(11, 4), Fraction(11, 24)), Fraction(25, 24)),
    4: ((Fraction(5, 24), Fraction(-11, 4), Fraction(-7, 24)), Fraction(-5, 24)),
    5: ((1, Fraction(-33, 2), Fraction(119, 2), Fraction(11, 2)), 0),
    6: ((0, Fraction(5, 2), Fraction(-55, 2), Fraction(-5, 2)), 0),
}


def t_parameterization(index: int, order: OrderLike = 100) -> QSeries:
    """t_index rebuilt from A^5, B^5 and E_2(q^5)."""
    if index not in T_FORMS:
        raise SeriesError(f"t-series index must be 1..6, got {index}")
    n = int_order(order)
    coeffs, p_weight = T_FORMS[index]
    series = HomPoly.of(*coeffs).series(n)
    if p_weight:
        series = series + _p_series(n) * p_weight
    return series


def t_system_rhs(t: list[QSeries]) -> list[QSeries]:
    """Right-hand sides of theta t_1 ... theta t_6 for t = [t_1, ..., t_6]."""
    t1, t2, t3, t4, t5, t6 = t
    half, tenth = Fraction(1, 2), Fraction(1, 10)
    sq2 = t2 * t2
    return [
        ((t1 + t2) * t3 + (t1 + t2 * 5) * t4 - t5 - t6) * half,
        ((t1 + t2 * 5) * t3 + (t1 + t2) * t4 * 5 - t5 - t6 * 5) * tenth,
        (t3 * t3 + t3 * t4 * 2 + t4 * t4 * 5 - (t1 + t2 * 3) * t5 - (t1 + t2 * 5) * t6) * half,
        (t3 * t3 + t3 * t4 * 10 + t4 * t4 * 5 - (t1 + t2 * 5) * t5 - (t1 + t2 * 3) * t6 * 5) * tenth,
        (
            (t3 + t4 - sq2 * 5) * t5 * 3
            - (t3 + t4 * 5 + sq2 * 25) * t6
            - (t5 * 3 - t6) * t1 * t1
            - t1 * t2 * (t5 * 6 + t6 * 5) * 2
        )
        * half,
        (
            -(t3 + t4 * 5 + sq2 * 25) * t5
            + (t3 + t4 - sq2 * 5) * t6 * 15
            + (t5 - t6 * 15) * t1 * t1
            - t1 * t2 * (t5 + t6 * 6) * 10
        )
        * tenth,
    ]


def verify_t_system(order: OrderLike = 80) -> IdentityReport:
    """The six first-order equations and the theta-function forms of t_1 ... t_6."""
    n = int_order(order)
    log = CheckLog("t-system", "first-order system for t_1 ... t_6")
    t = [t_series(i, n) for i in range(1, 7)]
    for i, (series, rhs) in enumerate(zip(t, t_system_rhs(t)), start=1):
        log.compare(f"theta t_{i}", series.theta_derivative(), rhs, n)
    for i, series in enumerate(t, start=1):
        log.compare(f"t_{i} in A, B, P", series, t_parameterization(i, n), n)
    log.note("t_2 = -A^5 (printed with a plus sign)")
    return log.report()


def verify_e2_forms(order: OrderLike = 80) -> IdentityReport:
    """E_2 and the logarithmic derivatives of R, A^5 B^5 and E_{2,chi3}."""
    n = int_order(order)
    log = CheckLog("e2-forms", "E_2 and logarithmic derivatives in A and B")
    p = _p_series(n)
    e2 = eisenstein_level1(2, n)
    e2_chi1 = HomPoly.of(*published("E2chi1").data).series(n)
    log.compare("E_2 = 5 E_2(q^5) - 4 E_2,chi1", e2, p * 5 - e2_chi1 * 4, n)

    # dividing by A or B costs the q^(1/5) of the leading term
    a1, b1 = quintic_pair(n + 1)
    log.compare(
        "E_2 = A^10 + 66 A^5 B^5 - 11 B^10 + 60 theta A / A",
        e2,
        HomPoly.of(-11, 66, 1).series(n) + a1.theta_derivative() / a1 * 60,
        n,
    )
    log.compare(
        "E_2 = B^10 - 66 A^5 B^5 - 11 A^10 + 60 theta B / B",
        e2,
        HomPoly.of(1, -66, -11).series(n) + b1.theta_derivative() / b1 * 60,
        n,
    )

    e2_chi3 = eisenstein_level5(2, "chi3", n)
    fitted = fit_hompoly(e2_chi3, 2)
    log.compare("E_2,chi3 as a quadratic in A^5, B^5", fitted.series(n), e2_chi3, n)

    r = rr_continued_fraction(n)
    log.compare("60 theta R = 12 E_2,chi3 R", r.theta_derivative() * 60, r * e2_chi3 * 12, n)
    a, b = quintic_pair(n)
    log.compare("R = A/B", r * b, a, n)

    a5, b5 = fifth_powers(n)
    ell = a5 * b5
    log.compare("24 theta (A^5 B^5) = (25 P - E_2) A^5 B^5", ell.theta_derivative() * 24, ell * (p * 25 - e2), n)
    log.compare(
        "24 theta E_2,chi3 = 5 (E_2 - P) E_2,chi3",
        e2_chi3.theta_derivative() * 24,
        e2_chi3 * (e2 - p) * 5,
        n,
    )
    return log.report()


# -- Kaneko's equation ------------------------------------------------------


def _kaneko_step(n: int, k: int, prev: Fraction, prev2: Fraction) -> Fraction:
    den = k * (5 * k - n - 1)
    if den == 0:
        raise SeriesError(f"the Frobenius recurrence has a pole at k = {k} for n = {n}")
    first = 55 * k * k - 11 * k * (11 + 6 * n) + 3 * (2 + n) * (11 + 6 * n)
    second = (-11 + 5 * k - 6 * n) * (-2 + k - n)
    return (first * prev + second * prev2) / den


@lru_cache(maxsize=64)
def frobenius_coefficients(n: int, terms: int) -> tuple[Fraction, ...]:
    """a_0 = 1, a_1, ..., a_{terms-1} of the power-series solution f_n(t)."""
    if n < 0:
        raise SeriesError(f"Kaneko index must be non-negative, got {n}")
    if n % 5 == 4:
        raise SeriesError(f"n = {n} is 4 mod 5: the Frobenius recurrence has a pole")
    coeffs = [Fraction(1)]
    prev2 = Fraction(0)
    for k in range(1, terms):
        nxt = _kaneko_step(n, k, coeffs[-1], prev2)
        prev2 = coeffs[-1]
        coeffs.append(nxt)
    return tuple(coeffs[:terms])


@dataclass(frozen=True)
class KanekoSolution:
    """The pair B^(6n+1) f_n(A^5/B^5) and A^(6n+1) f_n(-B^5/A^5) for n <= 8."""

    n: int
    coefficients: tuple[Fraction, ...]

    def polynomial(self, which: str = "f") -> HomPoly:
        """The solution divided by B^(n+1) ("f") or A^(n+1) ("g") as a form in A^5, B^5."""
        if which == "f":
            return HomPoly(self.coefficients)
        if which == "g":
            d = self.n
            return HomPoly(tuple((-1) ** (d - j) * self.coefficients[d - j] for j in range(d + 1)))
        raise SeriesError(f"Kaneko solutions are 'f' or 'g', not {which!r}")

    def series(self, which: str = "f", order: OrderLike = 60) -> QSeries:
        n = int_order(order)
        a, b = quintic_pair(n)
        base = b if which == "f" else a
        return base ** (self.n + 1) * self.polynomial(which).series(n)


def kaneko_solution(n: int) -> KanekoSolution:
    """Polynomial solution of Kaneko's equation for 0 <= n <= 8, n != 4."""
    if not 0 <= n <= 8:
        raise SeriesError(f"the Frobenius series terminate only for n <= 8, got {n}")
    coeffs = frobenius_coefficients(n, n + 3)
    if coeffs[n + 1] or coeffs[n + 2]:
        raise SeriesError(f"the Frobenius series for n = {n} does not terminate")
    return KanekoSolution(n, coeffs[: n + 1])


def kaneko_polynomials(n_max: int = 8) -> list[KanekoSolution]:
    """Every polynomial solution with n <= n_max; n = 4 is skipped."""
    if not 0 <= n_max <= 8:
        raise SeriesError(f"the Frobenius series terminate only for n <= 8, got n_max = {n_max}")
    return [kaneko_solution(n) for n in range(n_max + 1) if n % 5 != 4]


def kaneko_residual(f: QSeries, n: int, order: int) -> tuple[QSeries, QSeries]:
    """(theta^2 f, the remaining terms) of Kaneko's equation of index n."""
    e2 = eisenstein_level1(2, order)
    df = f.theta_derivative()
    rhs = e2 * df * Fraction(n + 1, 5) - e2.theta_derivative() * f * Fraction((n + 1) * (6 * n + 1), 50)
    return df.theta_derivative(), rhs


# the derivative as s * q d/dq; None is s = 2 pi i, which lies outside Q(zeta_20)
DERIVATIVE_CONVENTIONS: tuple[tuple[str, int | None], ...] = (
    ("d/dtau", None),
    ("q d/dq", 1),
    ("(1/2 pi i) d/dtau", 1),
)


def convention_residual(f: QSeries, n: int, order: int, scale: int | None) -> Comparison:
    """Compare s^2 theta^2 f with s times the remaining terms for D = s theta.

    With s = 2 pi i the two sides agree only when theta^2 f and the
    remaining terms vanish separately.
    """
    lhs, rhs = kaneko_residual(f, n, order)
    if scale is None:
        zero = QSeries.zero(order)
        outcome = compare_to_order(lhs, zero, order)
        return outcome if not outcome.agree else compare_to_order(rhs, zero, order)
    return compare_to_order(lhs * scale, rhs, order)


def resolve_derivative_convention(order: int = 20) -> list[tuple[str, int | None]]:
    """The conventions under which A solves the n = 0 equation."""
    a = quintic_pair(order)[0]
    fitting = []
    for label, scale in DERIVATIVE_CONVENTIONS:
        outcome = convention_residual(a, 0, order, scale)
        if outcome.agree:
            fitting.append((label, scale))
        else:
            logger.debug("%s leaves a residual at q^%s", label, format_exponent(outcome.first_failure))
    return fitting


def verify_kaneko_ode(order: OrderLike = 40, max_n: int = 3) -> IdentityReport:
    """Both polynomial solutions satisfy the equation; f_n agree with the known lists.

    The derivative convention is fixed first: the one under which A solves
    the n = 0 equation with zero residual.
    """
    n_ord = int_order(order)
    log = CheckLog("kaneko-ode", "Kaneko's second-order equation for forms of weight (6n+1)/5")
    fitting = resolve_derivative_convention(n_ord)
    if not log.require("n = 0 with f = A", bool(fitting), "no derivative convention has zero residual"):
        return log.report()
    label, scale = fitting[0]
    others = [name for name, _ in fitting[1:]]
    log.note(f"derivative convention {label}" + (f" (same operator: {', '.join(others)})" if others else ""))
    for sol in kaneko_polynomials(max_n):
        for which in ("f", "g"):
            lhs, rhs = kaneko_residual(sol.series(which, n_ord), sol.n, n_ord)
            log.compare(f"n = {sol.n} solution {which}", lhs if scale is None else lhs * scale, rhs, n_ord)
    table = published("kaneko").data
    for n, printed in table.items():
        coeffs = tuple(int(c) for c in kaneko_solution(n).coefficients)
        log.require(f"f_{n} coefficients", coeffs == tuple(printed), f"computed {coeffs}")
    log.note("n = 0 solutions are A and B")
    return log.report()


def _poly_product(f: tuple[Fraction, ...], g: tuple[Fraction, ...], terms: int) -> list[Fraction]:
    out = [Fraction(0)] * terms
    for i, a in enumerate(f[:terms]):
        if not a:
            continue
        for j, b in enumerate(g[: terms - i]):
            out[i + j] += a * b
    return out


def kaneko_recursion_rhs(n: int, terms: int) -> list[Fraction]:
    """E_6(t) f_(n-5) + 12 (6n-29)(6n-49)/((n-4)(n-9)) t (1 - 11t - t^2)^5 f_(n-10)."""
    if n < 10 or n % 5 == 4:
        raise SeriesError(f"the step recurrence needs n >= 10 and n != 4 mod 5, got {n}")
    e6 = tuple(Fraction(c.to_rational()) for c in HomPoly.of(*published("E6").data).coeffs)
    # (1 - 11t - t^2)^5 in ascending powers of t
    delta = (Fraction(0),) + tuple(
        Fraction(c.to_rational()) for c in (HomPoly.of(1, -11, -1) ** 5).coeffs
    )
    scale = Fraction(12 * (6 * n - 29) * (6 * n - 49), (n - 4) * (n - 9))
    first = _poly_product(e6, frobenius_coefficients(n - 5, terms), terms)
    second = _poly_product(delta, frobenius_coefficients(n - 10, terms), terms)
    return [x + scale * y for x, y in zip(first, second)]


def schwarzian(f: QSeries) -> QSeries:
    """(2 theta^3 f theta f - 3 (theta^2 f)^2) / (theta f)^2."""
    d1 = f.theta_derivative()
    d2 = d1.theta_derivative()
    d3 = d2.theta_derivative()
    return (d3 * d1 * 2 - d2 * d2 * 3) / (d1 * d1)

def schwarzian_factor(order: OrderLike = 30) -> tuple[FieldElement, QSeries, QSeries]:
    """(c, Schwarzian of A^5/B^5, icosian form) with c read off the constant terms."""
    n = int_order(order)
    a5, b5 = fifth_powers(n + 2)
    schwarz = schwarzian(a5 / b5)
    icosian = HomPoly.of(*published("icosian").data).series(n)
    return schwarz.coeff(0) / icosian.coeff(0), schwarz, icosian


def verify_kaneko_recursion(order: OrderLike = 30, n_values: tuple[int, ...] = (10, 11, 12, 13)) -> IdentityReport:
    """Kaneko's five-step recurrence on the Frobenius series, and the Schwarzian of A^5/B^5.

    The Schwarzian is a constant multiple c of the icosian form; c is
    determined from the constant terms and the whole series is then checked.
    """
    n_ord = int_order(order)
    log = CheckLog("kaneko-recursion", "five-step recurrence for f_n and the icosian form")
    for n in n_values:
        terms = n + 6
        lhs = list(frobenius_coefficients(n, terms))
        rhs = kaneko_recursion_rhs(n, terms)
        bad = next((k for k, (x, y) in enumerate(zip(lhs, rhs)) if x != y), None)
        log.require(f"f_{n} recurrence", bad is None, f"t^{bad} differs")
    log.order = Fraction(n_ord)

    factor, schwarz, icosian = schwarzian_factor(n_ord)
    log.compare(f"Schwarzian of A^5/B^5 = ({factor}) icosian", schwarz, icosian * factor, n_ord)
    log.note(f"theta-Schwarzian factor c = {factor}")
    return log.report()
