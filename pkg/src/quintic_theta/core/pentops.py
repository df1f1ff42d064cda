"""Quintic operators: pentication, pentamidiation arrays and Hecke matrices.

Homogeneous polynomials in A^5(q), B^5(q) are stored by coefficient
vectors.  Replacing q by q^(1/5) maps a degree d polynomial to a mixed
polynomial sum_r b_r A^r B^(5d - r) with ``b = pent_array(d) @ a``; the
rows r = 0 (mod 5) form the matrix of the quintic multisection Omega_{5,0}.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from quintic_theta.core.eisenstein import divisor_sums, eisenstein_level1, lambert_L
from quintic_theta.core.exactfield import ALPHA, BETA, ZERO, ZETA5, FieldElement, Scalar
from quintic_theta.core.products import OrderLike
from quintic_theta.core.qseries import QSeries, compare_to_order, integer_series, series_sum
from quintic_theta.core.quintic import a_unit, fifth_powers, int_order, quintic_pair, theta_series
from quintic_theta.core.report import CheckLog, IdentityReport
from quintic_theta.core.tables import published
from quintic_theta.errors import SeriesError

logger = logging.getLogger(__name__)

MAX_ARRAY_DEGREE = 12

# B(q^(1/5))^5 = B^5 + 3B^4A + 4B^3A^2 + 2B^2A^3 + BA^4, term i carries A^i
_B_FIFTH = ((1, 0), (3, 1), (4, 2), (2, 3), (1, 4))
# A(q^(1/5))^5 = A^5 - 3A^4B + 4A^3B^2 - 2A^2B^3 + AB^4, term i carries A^(5-i)
_A_FIFTH = ((1, 5), (-3, 4), (4, 3), (-2, 2), (1, 1))


# -- integer matrices -------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Exact integer matrix stored row by row."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError(f"ragged matrix rows: widths {sorted(widths)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.entries)))

    def take_rows(self, indices: Sequence[int]) -> IntMatrix:
        return IntMatrix(tuple(self.entries[i] for i in indices))

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.entries))

    def with_entry(self, i: int, j: int, value: int) -> IntMatrix:
        rows = [list(row) for row in self.entries]
        rows[i][j] = value
        return IntMatrix.from_rows(rows)

    def apply(self, vector: Sequence) -> list:
        """Matrix times a column vector of ints, Fractions or field elements."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for a {self.rows}x{self.cols} matrix")
        out = []
        for row in self.entries:
            acc = 0
            for a, x in zip(row, vector):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = other.transpose().entries
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries)
        )

    def power(self, n: int) -> IntMatrix:
        if n < 0:
            raise ValueError("negative matrix powers are not integral; use solve()")
        result, base = IntMatrix.identity(self.rows), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(row) for row in self.entries]
        n, sign, prev = self.rows, 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k]), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1

    def solve(self, rhs: Sequence[Scalar]) -> list[Fraction]:
        """x with self @ x = rhs, by Gauss-Jordan elimination over Q."""
        n = self.rows
        aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(self.entries, rhs)]
        for col in range(n):
            pivot = next((i for i in range(col, n) if aug[i][col]), None)
            if pivot is None:
                raise ValueError("singular matrix")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for i in range(n):
                if i != col and aug[i][col]:
                    f = aug[i][col]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
        return [row[-1] for row in aug]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        width = max((len(str(x)) for row in self.entries for x in row), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.entries)


# -- polynomial containers --------------------------------------------------


def _as_elements(values: Sequence[FieldElement | Scalar]) -> tuple[FieldElement, ...]:
    return tuple(FieldElement.coerce(v) for v in values)


def _power_ladder(base: QSeries, top: int, order: int) -> list[QSeries]:
    ladder = [QSeries.constant(1, order)]
    for _ in range(top):
        ladder.append((ladder[-1] * base).truncate(order))
    return ladder


@dataclass(frozen=True)
class HomPoly:
    """sum_k a_k A^(5k) B^(5(d-k)), degree d = len(coeffs) - 1."""

    coeffs: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise SeriesError("a homogeneous polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", _as_elements(self.coeffs))

    @classmethod
    def of(cls, *values: FieldElement | Scalar) -> HomPoly:
        return cls(tuple(values))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def series(self, order: OrderLike = 100) -> QSeries:
        """Evaluate at the theta series; the result has integer exponents."""
        n = int_order(order)
        a5, b5 = fifth_powers(n)
        d = self.degree
        a_pows = _power_ladder(a5, d, n)
        b_pows = _power_ladder(b5, d, n)
        terms = [(a_pows[k] * b_pows[d - k]) * c for k, c in enumerate(self.coeffs) if c]
        return series_sum(terms).truncate(n) if terms else QSeries.zero(n)

    def _same_degree(self, other: HomPoly) -> None:
        if other.degree != self.degree:
            raise SeriesError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: HomPoly) -> HomPoly:
        self._same_degree(other)
        return HomPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> HomPoly:
        return HomPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: HomPoly) -> HomPoly:
        return self + (-other)

    def __mul__(self, other: HomPoly | FieldElement | Scalar) -> HomPoly:
        if not isinstance(other, HomPoly):
            c = FieldElement.coerce(other)
            return HomPoly(tuple(x * c for x in self.coeffs))
        out = [ZERO] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return HomPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> HomPoly:
        if k < 0:
            raise SeriesError("homogeneous polynomials have no negative powers")
        result = HomPoly.of(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def rational_coeffs(self) -> tuple[Fraction, ...]:
        return tuple(c.to_rational() for c in self.coeffs)


def fit_hompoly(target: QSeries, degree: int) -> HomPoly:
    """The degree-d polynomial in A^5, B^5 whose series agrees with *target* below q^(d+1).

    A^(5k) B^(5(d-k)) starts at q^k with coefficient 1, so the coefficients
    come out one at a time.  Whether the fit is an identity is for the caller
    to check on the full precision.
    """
    n = degree + 1
    if target.precision < n:
        raise SeriesError(f"need the target below q^{n} to fit degree {degree}")
    a5, b5 = fifth_powers(n)
    a_pows = _power_ladder(a5, degree, n)
    b_pows = _power_ladder(b5, degree, n)
    residual = target.truncate(n)
    coeffs = []
    for k in range(degree + 1):
        c = residual.coeff(k)
        coeffs.append(c)
        if c:
            residual = residual - (a_pows[k] * b_pows[degree - k]) * c
    return HomPoly(tuple(coeffs))


def solve_combination(target: HomPoly, basis: Sequence[HomPoly]) -> list[Fraction] | None:
    """Rational weights w with sum w_j basis_j = target, or None when there are none."""
    for b in basis:
        target._same_degree(b)
    width = len(basis)
    rows = [
        [b.coeffs[i].to_rational() for b in basis] + [target.coeffs[i].to_rational()]
        for i in range(target.degree + 1)
    ]
    pivots = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    weights = [Fraction(0)] * width
    for i, col in enumerate(pivots):
        weights[col] = rows[i][-1]
    return weights


@dataclass(frozen=True)
class MixedPoly:
    """sum_r b_r A^r B^(5d - r) with len(coeffs) = 5d + 1.

    ``residue`` marks a restriction to the indices r = residue (mod 5).
    """

    coeffs: tuple[FieldElement, ...]
    residue: int | None = None

    def __post_init__(self) -> None:
        if len(self.coeffs) % 5 != 1:
            raise SeriesError(f"mixed polynomial needs 5d + 1 coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", _as_elements(self.coeffs))

    @property
    def degree(self) -> int:
        return (len(self.coeffs) - 1) // 5

    def coefficient(self, a_exponent: int) -> FieldElement:
        return self.coeffs[a_exponent]

    def series(self, order: OrderLike = 100) -> QSeries:
        """Evaluate at A(q), B(q); exponents lie on the q^(1/5) grid.

        A^r = q^(r/5) a^r with a = q^(-1/5) A, so term r carries q^(r // 5)
        before its class is shifted by q^(m/5).
        """
        n = int_order(order)
        top = 5 * self.degree
        a = a_unit(n + 1)
        b = theta_series("B", order=n)
        a_pows = _power_ladder(a, top, n)
        b_pows = _power_ladder(b, top, n)
        pieces = []
        for m in range(5):
            terms = [
                ((a_pows[r] * b_pows[top - r]) * c).shift(r // 5)
                for r, c in enumerate(self.coeffs)
                if r % 5 == m and c
            ]
            if terms:
                pieces.append(series_sum(terms).shift(Fraction(m, 5)))
        if not pieces:
            return QSeries.zero(n, 5)
        return series_sum(pieces).on_grid(5).truncate(n)


# -- pentamidiation arrays --------------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of *parts* nonnegative integers summing to *total*."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _multinomial(total: int, parts: tuple[int, ...]) -> int:
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


@lru_cache(maxsize=None)
def _fifth_power_expansion(m: int, terms: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    """Coefficients by A-exponent of (sum_i c_i A^e_i B^(5-e_i))^m."""
    out = [0] * (5 * m + 1)
    for comp in _compositions(m, 5):
        weight = _multinomial(m, comp)
        exponent = 0
        for j, (c, e) in zip(comp, terms):
            weight *= c**j
            exponent += e * j
        out[exponent] += weight
    return tuple(out)


@lru_cache(maxsize=None)
def pent_array(d: int) -> IntMatrix:
    """The (5d+1) x (d+1) pentamidiation array.

    Column k holds the A-exponent coefficients of
    B(q^(1/5))^(5(d-k)) A(q^(1/5))^(5k) in terms of A(q), B(q), summed
    over the compositions of d - k and k into five parts.
    """
    if not 1 <= d <= MAX_ARRAY_DEGREE:
        raise ValueError(f"array degree must be in 1..{MAX_ARRAY_DEGREE}, got {d}")
    columns = []
    for k in range(d + 1):
        left = _fifth_power_expansion(d - k, _B_FIFTH)
        right = _fifth_power_expansion(k, _A_FIFTH)
        column = [0] * (5 * d + 1)
        for i, x in enumerate(left):
            if x:
                for j, y in enumerate(right):
                    if y:
                        column[i + j] += x * y
        columns.append(column)
    logger.debug("built pentamidiation array of degree %d", d)
    return IntMatrix.from_rows(columns).transpose()


def pent_array_via_series(d: int) -> IntMatrix:
    """Same array from polynomial products carried out with QSeries in x = A/B."""
    b_fifth = integer_series([c for c, _ in _B_FIFTH])
    a_fifth = integer_series([0] + [c for c, _ in reversed(_A_FIFTH)])
    width = 5 * d + 1
    columns = []
    for k in range(d + 1):
        product = QSeries.constant(1, width)
        for _ in range(d - k):
            product = _poly_mul(product, b_fifth, width)
        for _ in range(k):
            product = _poly_mul(product, a_fifth, width)
        columns.append([int(product.coeff(r).to_rational()) for r in range(width)])
    return IntMatrix.from_rows(columns).transpose()


def _poly_mul(f: QSeries, g: QSeries, width: int) -> QSeries:
    padded = QSeries(list(g.coeffs) + [0] * (width - len(g.coeffs)), 0, 1)
    return (f * padded).truncate(width)


@lru_cache(maxsize=None)
def hecke_matrix(d: int) -> IntMatrix:
    """Rows 0, 5, ..., 5d of the pentamidiation array: Omega_{5,0} on degree d."""
    return pent_array(d).take_rows(range(0, 5 * d + 1, 5))


def hecke_determinant(d: int) -> int:
    return hecke_matrix(d).det()


def has_unit_eigenvalue(d: int) -> bool:
    """True when det(hecke_matrix(d) - I) vanishes."""
    m = hecke_matrix(d)
    shifted = [[x - (i == j) for j, x in enumerate(row)] for i, row in enumerate(m.entries)]
    return IntMatrix.from_rows(shifted).det() == 0


def five_adic_exponent(value: int) -> tuple[int, int]:
    """(sign, e) with value = sign * 5^e, or (0, -1) when value is not of that form."""
    if value == 0:
        return 0, -1
    sign, rest, e = (1 if value > 0 else -1), abs(value), 0
    while rest % 5 == 0:
        rest //= 5
        e += 1
    return (sign, e) if rest == 1 else (0, -1)


# -- operators on polynomials -----------------------------------------------


def pentamidiate_poly(p: HomPoly, array: IntMatrix | None = None) -> MixedPoly:
    """p evaluated at q^(1/5), re-expressed in A(q), B(q)."""
    array = array or pent_array(p.degree)
    return MixedPoly(tuple(array.apply(p.coeffs)))


def omega_poly(p: HomPoly, m: int) -> MixedPoly:
    """Indices r = m (mod 5) of the pentamidiated coefficients.

    The multisection itself is q^(-m/5) times the restricted polynomial.
    """
    if not 0 <= m < 5:
        raise ValueError(f"residue must be in 0..4, got {m}")
    full = pentamidiate_poly(p).coeffs
    kept = tuple(c if r % 5 == m else ZERO for r, c in enumerate(full))
    return MixedPoly(kept, residue=m)


def omega_series(p: HomPoly, m: int, order: OrderLike = 100) -> QSeries:
    """Omega_{5,m} applied to p, as an integer-exponent series."""
    restricted = omega_poly(p, m)
    return restricted.series(order).shift(Fraction(-m, 5)).compact()


def omega_classes(p: HomPoly, order: OrderLike = 100) -> list[QSeries]:
    """All five Omega_{5,m}(p), m = 0..4, from one evaluation of the pentamidiated polynomial."""
    n = int_order(order)
    mixed = pentamidiate_poly(p).series(n)
    return [
        QSeries(part.coeffs, part.val, 1)
        for part in (mixed.multisect(5, m) for m in range(5))
    ]


def hecke_apply(p: HomPoly, times: int = 1) -> HomPoly:
    """The m-fold quintic multisection of p as a polynomial of the same degree."""
    vec = list(p.coeffs)
    matrix = hecke_matrix(p.degree) if p.degree else IntMatrix.identity(1)
    for _ in range(times):
        vec = matrix.apply(vec)
    return HomPoly(tuple(vec))


def hecke_inverse_apply(p: HomPoly) -> HomPoly:
    """Preimage of p under the multisection matrix (p rational)."""
    values = [c.to_rational() for c in p.coeffs]
    return HomPoly(tuple(hecke_matrix(p.degree).solve(values)))


def pentamidiate_series_check(
    p: HomPoly, order: OrderLike = 80, array: IntMatrix | None = None
) -> IdentityReport:
    """Compare p(q^(1/5)) built from series with the array route, below *order*."""
    n = int_order(order)
    log = CheckLog(f"pentamidiation-d{p.degree}", "pentamidiation array, series route")
    direct = p.series(5 * n).regrid_refine(5)
    via_array = pentamidiate_poly(p, array).series(n)
    log.compare("p(q^(1/5)) vs array route", direct, via_array, n)
    return log.report()


def _basis_routes(d: int, n: int) -> tuple[list[QSeries], list[QSeries]]:
    """Series route and array route for each monomial A^(5k) B^(5(d-k))."""
    direct, via_array = [], []
    for k in range(d + 1):
        unit = HomPoly(tuple(int(j == k) for j in range(d + 1)))
        direct.append(unit.series(5 * n).regrid_refine(5))
        via_array.append(pentamidiate_poly(unit).series(n))
    return direct, via_array


def perturbed_array(d: int = 2, row: int = 5, col: int = 1, delta: int = 1) -> IntMatrix:
    """pent_array(d) with one entry moved by *delta*."""
    array = pent_array(d)
    return array.with_entry(row, col, array.row(row)[col] + delta)


def verify_pentamidiation_arrays(
    order: OrderLike = 80,
    degrees: Sequence[int] = (1, 2, 3, 4),
    count: int = 20,
    seed: int = 5,
) -> IdentityReport:
    """Random integer polynomials of each degree agree on both routes; a perturbed array is caught."""
    n = int_order(order)
    rng = random.Random(seed)
    log = CheckLog("pentamidiation-arrays", "array route against series route")
    for d in degrees:
        direct, via_array = _basis_routes(d, n)
        for trial in range(count):
            vec = [rng.randint(-9, 9) for _ in range(d + 1)]
            lhs = series_sum(s * c for s, c in zip(direct, vec))
            rhs = series_sum(s * c for s, c in zip(via_array, vec))
            log.compare(f"degree {d} vector {vec}", lhs, rhs, n)
        logger.debug("checked %d random polynomials of degree %d", count, d)

    control = pentamidiate_series_check(HomPoly.of(0, 1, 0), min(n, 20), array=perturbed_array())
    log.require("perturbed B_2 is rejected", not control.passed, "perturbed array passed")
    if control.first_failure is not None:
        log.note(f"perturbed B_2 first differs at q^{control.first_failure}")
    log.note(f"{count} random vectors per degree {', '.join(map(str, degrees))}")
    return log.report()


# -- pentication and pentamidiation by radicals -----------------------------


def _fifth_power(f: QSeries) -> QSeries:
    """f**5, computed on the coarsest grid carrying f q^(-val)."""
    f = f.normalized()
    v = f.valuation or 0
    return (f.shift(-v).compact() ** 5).shift(5 * v).compact()


def penticate(a_ser: QSeries, b_ser: QSeries) -> tuple[QSeries, QSeries]:
    """(A(q^5), B(q^5)) from A(q), B(q) through principal fifth roots."""
    a5 = _fifth_power(a_ser)
    b5 = _fifth_power(b_ser)
    c = (b5 - a5 * ALPHA**5).nth_root(5)
    d = (b5 - a5 * BETA**5).nth_root(5)
    gap = (BETA - ALPHA).inverse()
    return (c - d) * gap, (c * BETA - d * ALPHA) * gap


def pentamidiate_radicals(order: OrderLike = 40) -> tuple[QSeries, QSeries]:
    """(A(q^(1/5)), B(q^(1/5))) as fifth roots of the degree five mixed polynomials."""
    a_mixed = MixedPoly(tuple([0] + [c for c, _ in reversed(_A_FIFTH)]))
    b_mixed = MixedPoly(tuple(c for c, _ in _B_FIFTH) + (0,))
    n = int_order(order)
    a_small = a_mixed.series(n).on_grid(25).nth_root(5)
    b_small = b_mixed.series(n).nth_root(5)
    return a_small, b_small


# -- change of sign ---------------------------------------------------------


def change_of_sign(k: int, order: OrderLike = 100) -> tuple[QSeries, QSeries]:
    """(C(zeta_5^k q), D(zeta_5^k q)) from the linear forms in A(q^5), B(q^5)."""
    n = int_order(order)
    small = int_order(Fraction(n, 5)) + 1
    a, b = quintic_pair(small)
    a5 = a.substitute_power(5).compact().truncate(n)
    b5 = b.substitute_power(5).truncate(n)
    turn = ZETA5 ** (k % 5)
    return b5 - a5 * (ALPHA * turn), b5 - a5 * (BETA * turn)


def twisted_fifth_powers(k: int, order: OrderLike = 100) -> tuple[QSeries, QSeries]:
    """(A^5(zeta^k q), B^5(zeta^k q)) recovered from C^5, D^5 at the twisted argument."""
    c, d = change_of_sign(k, order)
    c5, d5 = c**5, d**5
    gap = (BETA**5 - ALPHA**5).inverse()
    return (c5 - d5) * gap, (c5 * BETA**5 - d5 * ALPHA**5) * gap


def verify_change_of_sign(order: OrderLike = 60) -> IdentityReport:
    n = int_order(order)
    log = CheckLog("change-of-sign", "change of sign for C and D")
    c_prod = theta_series("C", "product", n)
    d_prod = theta_series("D", "product", n)
    _, b = quintic_pair(int_order(Fraction(n, 5)) + 1)
    a5, b5 = fifth_powers(n)
    twisted = [change_of_sign(k, n) for k in range(5)]
    for k, (c_k, d_k) in enumerate(twisted):
        log.compare(f"C(zeta^{k} q)", c_k, c_prod.twist(k), n)
        log.compare(f"D(zeta^{k} q)", d_k, d_prod.twist(k), n)
    average = series_sum(c for c, _ in twisted) * Fraction(1, 5)
    log.compare("mean of the C twists", average, b.substitute_power(5), n)
    norm = twisted[0][0]
    for c_k, _ in twisted[1:]:
        norm = norm * c_k
    c_small = theta_series("C", "product", int_order(Fraction(n, 5)) + 1)
    log.compare("product of the C twists", norm, (c_small**5).substitute_power(5), n)
    recovered = [twisted_fifth_powers(k, n) for k in range(5)]
    for m in range(5):
        root = ZETA5 ** ((-m) % 5)
        weights = [root**k for k in range(5)]
        a_part = series_sum(r[0] * w for r, w in zip(recovered, weights)) * Fraction(1, 5)
        b_part = series_sum(r[1] * w for r, w in zip(recovered, weights)) * Fraction(1, 5)
        log.compare(f"A^5 residue class {m}", a_part, _residue_class(a5, m), n)
        log.compare(f"B^5 residue class {m}", b_part, _residue_class(b5, m), n)
    return log.report()


def _residue_class(f: QSeries, m: int) -> QSeries:
    """Terms of an integer-exponent series whose exponent is m (mod 5)."""
    return f.multisect(5, m).substitute_power(5).shift(m).truncate(f.precision)


# -- identity checks built on the operators ---------------------------------


def verify_pentication(order: OrderLike = 100) -> IdentityReport:
    n = int_order(order)
    log = CheckLog("pentication", "pentication by fifth roots")
    a, b = quintic_pair(n)
    big_a, big_b = penticate(a, b)
    small = int_order(Fraction(n, 5)) + 1
    a_s, b_s = quintic_pair(small)
    log.compare("A(q^5)", big_a, a_s.substitute_power(5), n)
    log.compare("B(q^5)", big_b, b_s.substitute_power(5), n)
    return log.report()


def verify_iterated_pentication(order: OrderLike = 60) -> IdentityReport:
    n = int_order(order)
    log = CheckLog("iterated-pentication", "nested radicals for A(q^25), B(q^25)")
    a, b = quintic_pair(n)
    a25, b25 = penticate(*penticate(a, b))
    tiny = int_order(Fraction(n, 25)) + 1
    a_t, b_t = quintic_pair(tiny)
    log.compare("A(q^25)", a25, a_t.substitute_power(25), n)
    log.compare("B(q^25)", b25, b_t.substitute_power(25), n)
    return log.report()


def verify_pentamidiation_radicals(order: OrderLike = 12) -> IdentityReport:
    n = int_order(order)
    log = CheckLog("pentamidiation-radicals", "A(q^(1/5)), B(q^(1/5)) by fifth roots")
    a_small, b_small = pentamidiate_radicals(n)
    a, b = quintic_pair(5 * n)
    log.compare("A(q^(1/5))", a_small, a.regrid_refine(5), n)
    log.compare("B(q^(1/5))", b_small, b.regrid_refine(5), n)
    return log.report()


def verify_array_structure(max_degree: int = 6) -> IdentityReport:
    """Column sums, unit eigenvalue and determinant shape for the Hecke matrices."""
    log = CheckLog("array-structure", "pentamidiation arrays and Hecke matrices")
    exponents = []
    for d in range(1, max_degree + 1):
        sums = pent_array(d).column_sums()
        expected = tuple(11 ** (d - k) for k in range(d + 1))
        log.require(f"column sums of degree {d}", sums == expected, f"{sums} != {expected}")
        log.require(f"unit eigenvalue of degree {d}", has_unit_eigenvalue(d))
        sign, e = five_adic_exponent(hecke_determinant(d))
        log.require(f"determinant of degree {d}", sign != 0, "not a signed power of 5")
        exponents.append(f"d={d}: {'-' if sign < 0 else ''}5^{e}")
    log.note("determinants " + ", ".join(exponents))
    return log.report()


def multisection_eigenvalue(k: int, chi: str, order: OrderLike = 100) -> Fraction | None:
    """lambda with Omega_{5,0} L_{k,chi} = lambda L_{k,chi} below *order*, or None."""
    n = int_order(order)
    series = lambert_L(k, chi, 5 * n)
    image = series.multisect(5, 0)
    lead = series.coeff(1)
    ratio = image.coeff(1) / lead
    if not ratio.is_rational():
        return None
    if not compare_to_order(image, series * ratio, n).agree:
        return None
    return ratio.to_rational()


def verify_multisection_eigenvalues(order: OrderLike = 60) -> IdentityReport:
    log = CheckLog("multisection-eigenvalues", "Omega_{5,0} on L_{k,chi}")
    found = []
    for k, chi in ((2, "chi1"), (2, "chi3"), (3, "chi2"), (3, "chi4"), (4, "chi1"), (4, "chi3")):
        value = multisection_eigenvalue(k, chi, order)
        expected = Fraction(5 ** (k - 1))
        log.require(f"L_{k},{chi} eigen relation", value == expected, f"eigenvalue {value}")
        found.append(f"L_{k},{chi}: {value}")
    log.order = Fraction(int_order(order))
    log.note("computed eigenvalues " + ", ".join(found) + " (5^(k-1))")
    return log.report()


E4_VECTOR = (1, 228, 494, -228, 1)
E4_Q5_VECTOR = (1, -12, 14, 12, 1)


def verify_e4_multisection(order: OrderLike = 60) -> IdentityReport:
    """Iterated multisections of E_4 and the inverse step back to E_4(q^5)."""
    n = int_order(order)
    log = CheckLog("e4-multisection", "Hecke matrix iterates on E_4")
    e4 = HomPoly.of(*E4_VECTOR)
    log.compare("E_4 parameterization", e4.series(n), eisenstein_level1(4, n), n)
    for times in (1, 2):
        scale = 5**times
        sigma = divisor_sums(3, scale * (n - 1) + 1)
        direct = QSeries([1] + [240 * sigma[scale * j] for j in range(1, n)], 0, 1)
        log.compare(f"{times}-fold multisection", hecke_apply(e4, times).series(n), direct, n)
    back = hecke_inverse_apply(e4)
    log.require(
        "inverse maps E_4 to E_4(q^5)",
        back.coeffs == HomPoly.of(*E4_Q5_VECTOR).coeffs,
        f"got {[str(c) for c in back.coeffs]}",
    )
    once = hecke_apply(e4)
    combo = tuple(126 * x - 125 * y for x, y in zip(E4_VECTOR, E4_Q5_VECTOR))
    log.require("Omega E_4 = 126 E_4 - 125 E_4(q^5)", once.coeffs == HomPoly.of(*combo).coeffs)
    e4_q5 = eisenstein_level1(4, int_order(Fraction(n, 5)) + 1).substitute_power(5)
    log.compare("E_4(q^5) parameterization", HomPoly.of(*E4_Q5_VECTOR).series(n), e4_q5, n)
    return log.report()


# -- published arrays ---------------------------------------------------------

PUBLISHED_ARRAYS = {
    ("B", 1): "B1",
    ("B", 2): "B2",
    **{("A", d): f"A{d}" for d in range(2, 7)},
}


def array_for(which: str, d: int) -> IntMatrix:
    """``B`` gives the pentamidiation array, ``A`` the Hecke matrix."""
    if which == "B":
        return pent_array(d)
    if which == "A":
        return hecke_matrix(d)
    raise ValueError(f"array kind must be 'A' or 'B', got {which!r}")


def published_array(which: str, d: int) -> IntMatrix | None:
    name = PUBLISHED_ARRAYS.get((which, d))
    if name is None:
        return None
    matrix = IntMatrix.from_rows(published(name).data)
    return matrix.transpose() if which == "B" else matrix


def compare_published(which: str, d: int) -> list[tuple[int, int, int, int]]:
    """(row, column, computed, printed) for every entry that differs."""
    printed = published_array(which, d)
    if printed is None:
        raise ValueError(f"no printed {which} array of degree {d}")
    computed = array_for(which, d)
    if (computed.rows, len(computed.entries[0])) != (printed.rows, len(printed.entries[0])):
        raise ValueError(f"{which}{d}: shape mismatch with the printed array")
    return [
        (i, j, x, y)
        for i, (crow, prow) in enumerate(zip(computed.entries, printed.entries))
        for j, (x, y) in enumerate(zip(crow, prow))
        if x != y
    ]


def verify_published_arrays() -> IdentityReport:
    log = CheckLog("published-arrays", "printed pentamidiation arrays and Hecke matrices")
    for which, d in sorted(PUBLISHED_ARRAYS):
        diffs = compare_published(which, d)
        log.require(f"{which}{d} matches", not diffs, f"first differences {diffs[:3]}")
    for d in (1, 2, 3, 4):
        log.require(f"B{d} by series products", pent_array_via_series(d) == pent_array(d))
    return log.report()
