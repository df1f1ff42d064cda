"""Truncated formal series in x = q^(1/D) with coefficients in Q(zeta_20).

A :class:`QSeries` knows the coefficients of every exponent below its
*precision*.  Exponents below the valuation are known zeros; everything at or
above the precision is UNKNOWN, never implicitly zero.  Every operation shrinks
the known range to what can actually be derived from its inputs, which is what
makes a "PASS to order M" verdict honest.

Multiplication packs both operands into single big integers (Kronecker
substitution in q and in the zeta_20 power basis) and lets the interpreter's
integer multiplication do the convolution.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Sequence

from quintic_theta.core.exactfield import (
    DEGREE,
    ONE,
    ZERO,
    ZETA5,
    FieldElement,
    Scalar,
    _reduce_ints,
    nth_root_in_field,
)
from quintic_theta.errors import SeriesError

logger = logging.getLogger(__name__)

Coefficient = FieldElement | Scalar


def _coerce_list(values: Iterable[Coefficient]) -> list[FieldElement]:
    return [FieldElement.coerce(v) for v in values]


def format_exponent(e: Fraction) -> str:
    return f"{e.numerator}/{e.denominator}"


# -- convolution kernel -----------------------------------------------------


def _pack(rows: Sequence[Sequence[int]], width: int, slot_bytes: int) -> tuple[int, int]:
    """Pack signed integer rows into (positive, negative) Kronecker integers."""
    zero = bytes(slot_bytes)
    pos: list[bytes] = []
    neg: list[bytes] = []
    for row in rows:
        for k in range(width):
            c = row[k] if k < len(row) else 0
            if c > 0:
                pos.append(c.to_bytes(slot_bytes, "little"))
                neg.append(zero)
            elif c < 0:
                pos.append(zero)
                neg.append((-c).to_bytes(slot_bytes, "little"))
            else:
                pos.append(zero)
                neg.append(zero)
    return int.from_bytes(b"".join(pos), "little"), int.from_bytes(b"".join(neg), "little")


def _unpack(value: int, count: int, slot_bytes: int) -> list[int]:
    raw = value.to_bytes(count * slot_bytes, "little") if value else bytes(count * slot_bytes)
    return [
        int.from_bytes(raw[i * slot_bytes : (i + 1) * slot_bytes], "little")
        for i in range(count)
    ]


def _as_int_rows(coeffs: Sequence[FieldElement]) -> tuple[list[tuple[int, ...]], int, int]:
    """Scale coefficients to one common denominator; return rows, denominator, zeta width."""
    den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
    width = 1 + max((c.zeta_degree() for c in coeffs), default=0)
    width = max(width, 1)
    rows = []
    for c in coeffs:
        s = den // c.denominator
        rows.append(tuple(n * s for n in c.numerators[:width]) if s != 1 else c.numerators[:width])
    return rows, den, width


def convolve(a: Sequence[FieldElement], b: Sequence[FieldElement], n: int) -> list[FieldElement]:
    """First *n* coefficients of the Cauchy product of two coefficient lists."""
    a = a[:n]
    b = b[:n]
    if not a or not b:
        return [ZERO] * n
    if len(a) == 1 or len(b) == 1:
        short, long_ = (a, b) if len(a) == 1 else (b, a)
        c0 = short[0]
        out = [c0 * x for x in long_[:n]]
        return out + [ZERO] * (n - len(out))
    rows_a, den_a, wa = _as_int_rows(a)
    rows_b, den_b, wb = _as_int_rows(b)
    width = wa + wb - 1
    max_a = max((abs(x) for r in rows_a for x in r), default=0)
    max_b = max((abs(x) for r in rows_b for x in r), default=0)
    if max_a == 0 or max_b == 0:
        return [ZERO] * n
    bound = max_a * max_b * min(len(a), len(b)) * min(wa, wb)
    slot_bytes = (bound.bit_length() + 8) // 8
    ap, an = _pack(rows_a, width, slot_bytes)
    bp, bn = _pack(rows_b, width, slot_bytes)
    count = (len(a) + len(b) - 1) * width
    plus = _unpack(ap * bp, count, slot_bytes) if ap and bp else [0] * count
    if an and bn:
        plus = [x + y for x, y in zip(plus, _unpack(an * bn, count, slot_bytes))]
    minus = [0] * count
    if ap and bn:
        minus = _unpack(ap * bn, count, slot_bytes)
    if an and bp:
        minus = [x + y for x, y in zip(minus, _unpack(an * bp, count, slot_bytes))]
    den = den_a * den_b
    out: list[FieldElement] = []
    for i in range(min(n, len(a) + len(b) - 1)):
        block = [plus[i * width + k] - minus[i * width + k] for k in range(width)]
        nums = _reduce_ints(block) if width > DEGREE else block + [0] * (DEGREE - width)
        out.append(FieldElement._raw(nums, den))
    return out + [ZERO] * (n - len(out))


def _is_sparse(coeffs: Sequence[FieldElement]) -> bool:
    nonzero = sum(1 for c in coeffs if c)
    return nonzero * 4 <= len(coeffs)


def unit_power(f: Sequence[FieldElement], r: Fraction, n: int) -> list[FieldElement]:
    """Coefficients of f^r for a unit series f with f[0] = 1 (J.C.P. Miller recurrence)."""
    g = [ONE] + [ZERO] * (n - 1)
    support = [(j, f[j]) for j in range(1, min(len(f), n)) if f[j]]
    for m in range(1, n):
        acc = ZERO
        for j, fj in support:
            if j > m:
                break
            gm = g[m - j]
            if gm:
                acc = acc + fj * gm * ((r + 1) * j - m)
        g[m] = acc / m
    return g


def _scale(coeffs: Sequence[FieldElement], factor: Coefficient) -> list[FieldElement]:
    return [c * factor for c in coeffs]


def unit_inverse(f: Sequence[FieldElement], n: int) -> list[FieldElement]:
    """1/f for f[0] = 1 by Newton iteration g <- g(2 - f g)."""
    if _is_sparse(f[:n]):
        return unit_power(f, Fraction(-1), n)
    g = [ONE]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        e = convolve(f[:prec], g, prec)
        e = [-c for c in e]
        e[0] = e[0] + 2
        g = convolve(g, e, prec)
    return g[:n]


def _unit_pow_int(f: Sequence[FieldElement], k: int, n: int) -> list[FieldElement]:
    result: list[FieldElement] = [ONE] + [ZERO] * (n - 1)
    base = list(f[:n])
    while k:
        if k & 1:
            result = convolve(result, base, n)
        k >>= 1
        if k:
            base = convolve(base, base, n)
    return result


def unit_root(f: Sequence[FieldElement], k: int, n: int) -> list[FieldElement]:
    """Principal k-th root of a unit series with f[0] = 1."""
    if k == 1:
        return list(f[:n])
    if _is_sparse(f[:n]):
        return unit_power(f, Fraction(1, k), n)
    # h -> f^(-1/k) by h <- h((k+1) - f h^k)/k, then f^(1/k) = f h^(k-1)
    h = [ONE]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        t = convolve(_unit_pow_int(h, k, prec), f[:prec], prec)
        u = [c * Fraction(-1, k) for c in t]
        u[0] = u[0] + Fraction(k + 1, k)
        h = convolve(h, u, prec)
    return convolve(list(f[:n]), _unit_pow_int(h, k - 1, n), n)


# -- the series type --------------------------------------------------------


class QSeries:
    """Truncated series sum_j coeffs[j] q^((val + j)/grid_den).

    ``known_len`` coefficients are known; the precision (first unknown
    exponent) is ``(val + known_len)/grid_den``.
    """

    __slots__ = ("grid_den", "val", "coeffs")

    def __init__(
        self,
        coeffs: Iterable[Coefficient],
        val: int = 0,
        grid_den: int = 1,
    ) -> None:
        if grid_den < 1:
            raise SeriesError(f"grid denominator must be positive, got {grid_den}")
        self.grid_den = grid_den
        self.val = val
        self.coeffs: tuple[FieldElement, ...] = tuple(_coerce_list(coeffs))

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c: Coefficient, order: Fraction | int, grid_den: int = 1) -> QSeries:
        n = max(math.ceil(Fraction(order) * grid_den), 1)
        return cls([c] + [0] * (n - 1), 0, grid_den)

    @classmethod
    def zero(cls, order: Fraction | int, grid_den: int = 1) -> QSeries:
        return cls.constant(0, order, grid_den)

    @classmethod
    def monomial(
        cls, c: Coefficient, exponent: Fraction | int, order: Fraction | int
    ) -> QSeries:
        """c q^exponent known below *order* (at least up to the monomial itself)."""
        e = Fraction(exponent)
        d = e.denominator
        order = Fraction(order)
        d = math.lcm(d, order.denominator)
        v = int(e * d)
        n = max(math.ceil(order * d) - v, 1)
        return cls([c] + [0] * (n - 1), v, d)

    @classmethod
    def from_terms(
        cls,
        terms: dict[Fraction, Coefficient] | Iterable[tuple[Fraction, Coefficient]],
        order: Fraction | int,
        grid_den: int = 1,
    ) -> QSeries:
        """Series with the given terms, every other exponent below *order* zero."""
        items = terms.items() if isinstance(terms, dict) else terms
        bucket: dict[int, FieldElement] = {}
        for e, c in items:
            idx = Fraction(e) * grid_den
            if idx.denominator != 1:
                raise SeriesError(f"exponent {e} is not on grid 1/{grid_den}")
            if e < order:
                bucket[int(idx)] = bucket.get(int(idx), ZERO) + FieldElement.coerce(c)
        end = math.ceil(Fraction(order) * grid_den)
        v = min(min(bucket, default=0), 0)
        coeffs = [bucket.get(i, ZERO) for i in range(v, end)]
        return cls(coeffs, v, grid_den)

    # -- inspection -----------------------------------------------------

    @property
    def known_len(self) -> int:
        return len(self.coeffs)

    @property
    def precision(self) -> Fraction:
        return Fraction(self.val + len(self.coeffs), self.grid_den)

    @property
    def valuation(self) -> Fraction | None:
        """Exponent of the first nonzero known coefficient, or None."""
        for j, c in enumerate(self.coeffs):
            if c:
                return Fraction(self.val + j, self.grid_den)
        return None

    def leading_coefficient(self) -> FieldElement:
        for c in self.coeffs:
            if c:
                return c
        raise SeriesError("series has no nonzero known coefficient")

    def coeff(self, exponent: Fraction | int) -> FieldElement:
        """Coefficient of q^exponent; raises if that coefficient is unknown."""
        idx = Fraction(exponent) * self.grid_den
        if exponent >= self.precision:
            raise SeriesError(
                f"coefficient of q^{exponent} is unknown (precision {self.precision})"
            )
        if idx.denominator != 1:
            return ZERO
        j = int(idx) - self.val
        return self.coeffs[j] if j >= 0 else ZERO

    def items(self) -> Iterator[tuple[Fraction, FieldElement]]:
        """Nonzero (exponent, coefficient) pairs in increasing order."""
        for j, c in enumerate(self.coeffs):
            if c:
                yield Fraction(self.val + j, self.grid_den), c

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        """Coefficients of q^0, q^1, ... below the precision for an integer-grid series."""
        if self.grid_den != 1:
            raise SeriesError("integer_coeffs needs an integer grid")
        out = []
        for n in range(0, max(int(math.ceil(self.precision)), 0)):
            r = self.coeff(n).to_rational()
            if r.denominator != 1:
                raise SeriesError(f"coefficient of q^{n} is not an integer: {r}")
            out.append(int(r))
        return out

    def __repr__(self) -> str:
        head = " + ".join(
            f"({c})*q^{format_exponent(e)}" for e, c in list(self.items())[:4]
        )
        return f"QSeries({head or '0'} + O(q^{format_exponent(self.precision)}))"

    # -- grid handling --------------------------------------------------

    def on_grid(self, grid_den: int) -> QSeries:
        """Re-express on a finer grid (a multiple of the current one)."""
        if grid_den == self.grid_den:
            return self
        if grid_den % self.grid_den:
            raise SeriesError(f"grid {grid_den} does not refine grid {self.grid_den}")
        m = grid_den // self.grid_den
        spaced = [ZERO] * (len(self.coeffs) * m)
        spaced[::m] = self.coeffs
        return QSeries(spaced, self.val * m, grid_den)

    def compact(self) -> QSeries:
        """Move to the coarsest grid that still carries every nonzero term."""
        g = self.grid_den
        for j, c in enumerate(self.coeffs):
            if c:
                g = math.gcd(g, self.val + j)
                if g == 1:
                    return self
        if g == 1:
            return self
        end = (self.val + len(self.coeffs)) // g
        start = -((-self.val) // g)
        coeffs = [self.coeffs[i * g - self.val] for i in range(start, end)]
        return QSeries(coeffs, start, self.grid_den // g)

    def normalized(self) -> QSeries:
        """Strip leading known zeros into the valuation."""
        for j, c in enumerate(self.coeffs):
            if c:
                if j == 0:
                    return self
                return QSeries(self.coeffs[j:], self.val + j, self.grid_den)
        return self

    def truncate(self, order: Fraction | int) -> QSeries:
        """Forget every coefficient at or above *order*."""
        end = math.floor(Fraction(order) * self.grid_den)
        if end >= self.val + len(self.coeffs):
            return self
        keep = max(end - self.val, 0)
        return QSeries(self.coeffs[:keep], self.val, self.grid_den)

    def _aligned(self, other: QSeries) -> tuple[QSeries, QSeries]:
        d = math.lcm(self.grid_den, other.grid_den)
        return self.on_grid(d), other.on_grid(d)

    # -- ring operations ------------------------------------------------

    def __add__(self, other: QSeries | Coefficient) -> QSeries:
        if not isinstance(other, QSeries):
            other = QSeries.constant(other, self.precision, self.grid_den)
        f, g = self._aligned(other)
        v = min(f.val, g.val)
        end = min(f.val + len(f.coeffs), g.val + len(g.coeffs))
        out = [ZERO] * max(end - v, 0)
        for s in (f, g):
            for j, c in enumerate(s.coeffs):
                i = s.val + j - v
                if i >= len(out):
                    break
                if c:
                    out[i] = out[i] + c
        return QSeries(out, v, f.grid_den)

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries([-c for c in self.coeffs], self.val, self.grid_den)

    def __sub__(self, other: QSeries | Coefficient) -> QSeries:
        if not isinstance(other, QSeries):
            other = QSeries.constant(other, self.precision, self.grid_den)
        return self + (-other)

    def __rsub__(self, other: Coefficient) -> QSeries:
        return (-self) + other

    def __mul__(self, other: QSeries | Coefficient) -> QSeries:
        if not isinstance(other, QSeries):
            c = FieldElement.coerce(other)
            return QSeries([x * c for x in self.coeffs], self.val, self.grid_den)
        f, g = self._aligned(other)
        f, g = f.normalized(), g.normalized()
        n = min(len(f.coeffs), len(g.coeffs))
        return QSeries(convolve(f.coeffs, g.coeffs, n), f.val + g.val, f.grid_den)

    __rmul__ = __mul__

    def __truediv__(self, other: QSeries | Coefficient) -> QSeries:
        if isinstance(other, QSeries):
            return self * other.invert()
        c = FieldElement.coerce(other)
        return self * c.inverse()

    def __rtruediv__(self, other: Coefficient) -> QSeries:
        return self.invert() * other

    def __pow__(self, k: int) -> QSeries:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        lead, unit = self._unit_part()
        n = len(unit.coeffs)
        coeffs = _unit_pow_int(unit.coeffs, k, n) if not _is_sparse(unit.coeffs) else (
            unit_power(unit.coeffs, Fraction(k), n)
        )
        return QSeries(_scale(coeffs, lead**k), unit.val * k, unit.grid_den)

    def _unit_part(self) -> tuple[FieldElement, QSeries]:
        """Split into leading coefficient c and c^-1 * self (normalized)."""
        f = self.normalized()
        if not f.coeffs or not f.coeffs[0]:
            raise SeriesError("series has no nonzero known coefficient")
        lead = f.coeffs[0]
        if lead == 1:
            return lead, f
        inv = lead.inverse()
        return lead, QSeries([c * inv for c in f.coeffs], f.val, f.grid_den)

    def invert(self) -> QSeries:
        """Multiplicative inverse; the valuation is negated."""
        f = self.normalized()
        if not f.coeffs or not f.coeffs[0]:
            raise SeriesError("cannot invert: leading known coefficient is zero")
        lead, unit = f._unit_part()
        inv = unit_inverse(unit.coeffs, len(unit.coeffs))
        return QSeries(_scale(inv, lead.inverse()), -unit.val, unit.grid_den)

    def nth_root(self, n: int) -> QSeries:
        """Principal n-th root (leading coefficient = principal root in F)."""
        if n < 1:
            raise SeriesError(f"root index must be positive, got {n}")
        lead, unit = self._unit_part()
        if unit.val % n:
            raise SeriesError(
                f"valuation {unit.val}/{unit.grid_den} is not divisible by {n}; "
                "refine the grid first"
            )
        c = nth_root_in_field(lead, n)
        if c is None:
            raise SeriesError(f"leading coefficient {lead} has no {n}-th root in Q(zeta_20)")
        root = unit_root(unit.coeffs, n, len(unit.coeffs))
        return QSeries(_scale(root, c), unit.val // n, unit.grid_den)

    def power(self, exponent: Fraction | int) -> QSeries:
        """Rational power with the principal branch; the grid is refined when needed."""
        e = Fraction(exponent)
        if e.denominator == 1:
            return self ** e.numerator
        lead, unit = self._unit_part()
        c = nth_root_in_field(lead, e.denominator)
        if c is None:
            raise SeriesError(
                f"leading coefficient {lead} has no {e.denominator}-th root in Q(zeta_20)"
            )
        n = len(unit.coeffs)
        if _is_sparse(unit.coeffs):
            coeffs = unit_power(unit.coeffs, e, n)
        else:
            root = QSeries(unit_root(unit.coeffs, e.denominator, n), 0, unit.grid_den)
            coeffs = list((root ** e.numerator).coeffs)
        tail = QSeries(_scale(coeffs, c**e.numerator), 0, unit.grid_den)
        return tail.shift(Fraction(unit.val, unit.grid_den) * e).compact()

    # -- operators ------------------------------------------------------

    def theta_derivative(self) -> QSeries:
        """q d/dq: multiply the coefficient of q^e by e."""
        d = self.grid_den
        return QSeries(
            [c * Fraction(self.val + j, d) if c else c for j, c in enumerate(self.coeffs)],
            self.val,
            d,
        )

    def substitute_power(self, k: int) -> QSeries:
        """f(q^k)."""
        if k < 1:
            raise SeriesError(f"substitution power must be positive, got {k}")
        if k == 1:
            return self
        spaced = [ZERO] * (len(self.coeffs) * k)
        spaced[::k] = self.coeffs
        return QSeries(spaced, self.val * k, self.grid_den)

    def regrid_refine(self, m: int) -> QSeries:
        """f(q^(1/m)): same coefficients read on the grid D*m."""
        if m < 1:
            raise SeriesError(f"refinement factor must be positive, got {m}")
        return QSeries(self.coeffs, self.val, self.grid_den * m)

    def multisect(self, k: int, m: int) -> QSeries:
        """Keep indices i = k*t + m (on this grid) and send them to index t."""
        if k < 1 or not 0 <= m < k:
            raise SeriesError(f"bad multisection ({k}, {m})")
        end = self.val + len(self.coeffs)
        start = -((m - self.val) // k)
        stop = -((m - end) // k)
        coeffs = []
        for t in range(start, stop):
            j = k * t + m - self.val
            coeffs.append(self.coeffs[j] if j >= 0 else ZERO)
        return QSeries(coeffs, start, self.grid_den)

    def twist(self, j: int) -> QSeries:
        """f(zeta_5^j q) for an integer-grid series."""
        if self.grid_den != 1:
            raise SeriesError("twist by a fifth root of unity needs an integer grid")
        unit = ZETA5**(j % 5)
        powers = [ONE]
        for _ in range(4):
            powers.append(powers[-1] * unit)
        return QSeries(
            [c * powers[(self.val + i) % 5] if c else c for i, c in enumerate(self.coeffs)],
            self.val,
            1,
        )

    def shift(self, exponent: Fraction | int) -> QSeries:
        """Multiply by q^exponent."""
        e = Fraction(exponent)
        f = self.on_grid(math.lcm(self.grid_den, e.denominator))
        return QSeries(f.coeffs, f.val + int(e * f.grid_den), f.grid_den)

    def map_coeffs(self, fn) -> QSeries:
        return QSeries([fn(c) for c in self.coeffs], self.val, self.grid_den)

    # -- serialisation --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "grid": self.grid_den,
            "precision": format_exponent(self.precision),
            "terms": [
                {"exponent": format_exponent(e), "coeff": str(c)} for e, c in self.items()
            ],
        }


# -- comparison -------------------------------------------------------------


@dataclass(frozen=True)
class Comparison:
    """Outcome of comparing two truncated series below an order."""

    agree: bool
    order: Fraction
    first_failure: Fraction | None = None


def compare_to_order(f: QSeries, g: QSeries, order: Fraction | int) -> Comparison:
    """Compare coefficients of every exponent below min(order, both precisions)."""
    f, g = f._aligned(g)
    effective = min(Fraction(order), f.precision, g.precision)
    d = f.grid_den
    end = math.ceil(effective * d)
    start = min(f.val, g.val)
    for i in range(start, end):
        a = f.coeffs[i - f.val] if 0 <= i - f.val < len(f.coeffs) else ZERO
        b = g.coeffs[i - g.val] if 0 <= i - g.val < len(g.coeffs) else ZERO
        if a != b:
            return Comparison(False, effective, Fraction(i, d))
    return Comparison(True, effective)


def series_sum(terms: Iterable[QSeries]) -> QSeries:
    items = list(terms)
    if not items:
        raise SeriesError("series_sum needs at least one term")
    return reduce(lambda a, b: a + b, items)


def integer_series(values: Sequence[int], val: int = 0) -> QSeries:
    return QSeries(values, val, 1)
