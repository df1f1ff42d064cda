"""q-series building blocks: q-Pochhammer products, eta powers and theta sums."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from quintic_theta.core.exactfield import ONE, FieldElement, Scalar
from quintic_theta.core.qseries import QSeries
from quintic_theta.errors import SeriesError

OrderLike = Fraction | int


def _index_count(order: OrderLike, grid_den: int = 1) -> int:
    """Number of grid points 0, 1/D, ... strictly below *order* (at least one)."""
    return max(math.ceil(Fraction(order) * grid_den), 1)


def pentagonal_terms(limit: int) -> Iterator[tuple[int, int]]:
    """(exponent, sign) pairs of Euler's product (q;q)_inf below *limit*."""
    yield 0, 1
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        if e1 >= limit:
            break
        sign = -1 if k % 2 else 1
        yield e1, sign
        e2 = k * (3 * k + 1) // 2
        if e2 < limit:
            yield e2, sign
        k += 1


@lru_cache(maxsize=256)
def _euler_power(exponent: Fraction, n: int) -> tuple[Fraction, ...]:
    """First n coefficients of (q;q)_inf ** exponent (Miller recurrence on the sparse product)."""
    support = sorted(pentagonal_terms(n))[1:]
    g: list[Fraction] = [Fraction(1)] + [Fraction(0)] * (n - 1)
    r1 = exponent + 1
    for m in range(1, n):
        acc = Fraction(0)
        for j, sign in support:
            if j > m:
                break
            gm = g[m - j]
            if gm:
                acc += sign * gm * (r1 * j - m)
        g[m] = acc / m
    return tuple(g)


def euler_product(order: OrderLike, scale: int = 1) -> QSeries:
    """(q^scale; q^scale)_inf known below *order*."""
    n = _index_count(Fraction(order) / scale)
    coeffs = [0] * n
    for e, sign in pentagonal_terms(n):
        coeffs[e] = sign
    return QSeries(coeffs, 0, 1).substitute_power(scale).truncate(order)


def eta_power(num_exp: int, den_exp: int, scale: int, order: OrderLike) -> QSeries:
    """(q^scale; q^scale)_inf ** (num_exp/den_exp), principal branch, known below *order*."""
    if den_exp < 1 or scale < 1:
        raise SeriesError(f"bad eta power ({num_exp}/{den_exp}, scale {scale})")
    n = _index_count(Fraction(order) / scale)
    coeffs = _euler_power(Fraction(num_exp, den_exp), n)
    return QSeries(coeffs, 0, 1).substitute_power(scale).truncate(order)


def eta_quotient(exponents: Mapping[int, Fraction | int], order: OrderLike) -> QSeries:
    """Product over s of (q^s; q^s)_inf ** exponents[s]."""
    result = QSeries.constant(1, order)
    for scale, e in sorted(exponents.items()):
        e = Fraction(e)
        if e:
            result = result * eta_power(e.numerator, e.denominator, scale, order)
    return result


@dataclass(frozen=True)
class PochhammerSpec:
    """(z q^a; q^b)_inf."""

    z: FieldElement = ONE
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", FieldElement.coerce(self.z))
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b <= 0:
            raise SeriesError(f"Pochhammer modulus must be positive, got {self.b}")
        if self.a < 0:
            raise SeriesError(f"Pochhammer offset {self.a} < 0 diverges formally")
        if self.a == 0 and self.z == 1:
            raise SeriesError("(1; q^b)_inf vanishes identically")

    def exponents(self, order: OrderLike) -> Iterator[Fraction]:
        e = self.a
        while e < order:
            yield e
            e += self.b


def pochhammer_inf(spec: PochhammerSpec, order: OrderLike) -> QSeries:
    """Truncated product prod_{k>=0} (1 - z q^(a + k b)) known below *order*."""
    order = Fraction(order)
    if order <= 0:
        return QSeries.constant(1, 0)
    if spec.z == 1 and spec.a == spec.b and spec.a.denominator == 1:
        return euler_product(order, int(spec.a))
    grid = math.lcm(spec.a.denominator, spec.b.denominator, order.denominator)
    n = _index_count(order, grid)
    rational = spec.z.is_rational()
    zval = spec.z.to_rational() if rational else spec.z
    coeffs: list = [Fraction(1)] + [Fraction(0)] * (n - 1)
    if not rational:
        coeffs = [FieldElement.coerce(c) for c in coeffs]
    for e in spec.exponents(order):
        s = int(e * grid)
        if s == 0:
            coeffs = [c * (1 - zval) for c in coeffs]
            continue
        for i in range(n - 1, s - 1, -1):
            if coeffs[i - s]:
                coeffs[i] = coeffs[i] - zval * coeffs[i - s]
    return QSeries(coeffs, 0, grid)


def qpoch(a: int, b: int, order: OrderLike, z: FieldElement | Scalar = 1) -> QSeries:
    """Shorthand for (z q^a; q^b)_inf with integer a, b."""
    return pochhammer_inf(PochhammerSpec(FieldElement.coerce(z), Fraction(a), Fraction(b)), order)


def ramanujan_f(
    a_coeff: FieldElement | Scalar,
    a_exp: Fraction | int,
    b_coeff: FieldElement | Scalar,
    b_exp: Fraction | int,
    order: OrderLike,
) -> QSeries:
    """Ramanujan's f(a, b) = sum_n a^(n(n+1)/2) b^(n(n-1)/2) for monomials a, b."""
    a_exp, b_exp, order = Fraction(a_exp), Fraction(b_exp), Fraction(order)
    if a_exp + b_exp <= 0:
        raise SeriesError(f"f(a, b) diverges formally: exponents {a_exp} + {b_exp} <= 0")
    a_coeff = FieldElement.coerce(a_coeff)
    b_coeff = FieldElement.coerce(b_coeff)
    quad = (a_exp + b_exp) / 2
    lin = (a_exp - b_exp) / 2

    def exponent(n: int) -> Fraction:
        return quad * n * n + lin * n

    vertex = math.floor(-lin / (2 * quad))
    terms: list[tuple[Fraction, FieldElement]] = []
    for direction, start in ((1, vertex), (-1, vertex - 1)):
        n = start
        while True:
            e = exponent(n)
            if e >= order and (n - vertex) * direction > 0:
                break
            if e < order:
                up, down = n * (n + 1) // 2, n * (n - 1) // 2
                terms.append((e, a_coeff**up * b_coeff**down))
            n += direction
    grid = math.lcm(order.denominator, *(e.denominator for e, _ in terms)) if terms else 1
    return QSeries.from_terms(terms, order, grid)


def _phase(x: Fraction) -> FieldElement:
    """e^(pi i x) as an element of F; needs 10x to be an integer."""
    t = x * 10
    if t.denominator != 1:
        raise SeriesError(f"phase e^(pi i * {x}) is not a 20th root of unity")
    return FieldElement.zeta(int(t))


def theta_char(
    eps: Fraction | int, eps_prime: Fraction | int, scale: int, order: OrderLike
) -> QSeries:
    """theta[eps; eps'](scale*tau) = e^(pi i eps eps'/2) sum_n e^(pi i n eps') q^(scale (n + eps/2)^2 / 2)."""
    eps, eps_prime, order = Fraction(eps), Fraction(eps_prime), Fraction(order)
    front = _phase(eps * eps_prime / 2)
    step = _phase(eps_prime)
    center = -eps / 2

    def exponent(n: int) -> Fraction:
        return scale * (n - center) ** 2 / 2

    terms: list[tuple[Fraction, FieldElement]] = []
    pivot = math.ceil(center)
    for direction, start in ((1, pivot), (-1, pivot - 1)):
        n = start
        while (e := exponent(n)) < order:
            terms.append((e, front * step**n))
            n += direction
    grid = math.lcm(order.denominator, *(e.denominator for e, _ in terms)) if terms else 1
    return QSeries.from_terms(terms, order, grid)


def jacobi_null_thetas(order: OrderLike) -> tuple[QSeries, QSeries, QSeries]:
    """(theta_2, theta_3, theta_4) with theta_3 = sum q^(n^2); theta_2 lives on grid 4."""
    order = Fraction(order)
    theta3: dict[Fraction, int] = {}
    theta4: dict[Fraction, int] = {}
    theta2: dict[Fraction, int] = {}
    n = 0
    while n * n < order:
        mult = 1 if n == 0 else 2
        theta3[Fraction(n * n)] = mult
        theta4[Fraction(n * n)] = mult * (-1) ** n
        n += 1
    n = 0
    while (e := Fraction(2 * n + 1, 2) ** 2) < order:
        theta2[e] = 2
        n += 1
    return (
        QSeries.from_terms(theta2, order, 4),
        QSeries.from_terms(theta3, order, 1),
        QSeries.from_terms(theta4, order, 1),
    )
