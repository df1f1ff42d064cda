"""Exact arithmetic in the cyclotomic field F = Q(zeta_20).

Elements are stored in the power basis 1, z, ..., z^7 of z = zeta_20 = e^(2 pi i/20),
reduced modulo Phi_20(x) = x^8 - x^6 + x^4 - x^2 + 1.  Internally an element is a
tuple of eight integer numerators over one positive common denominator, kept in
lowest terms, so equality is componentwise and hashing is cheap.

Every constant the quintic theta calculus needs lives here: i = z^5, zeta_5 = z^4,
zeta_10 = z^2, sqrt(5) as a quadratic Gauss sum, the golden ratio alpha and its
conjugate beta.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from quintic_theta.errors import FieldError

DEGREE = 8
CONDUCTOR = 20
UNITS = (1, 3, 7, 9, 11, 13, 17, 19)

Scalar = Union[int, Fraction]


def _reduce_ints(poly: list[int]) -> list[int]:
    """Reduce an integer polynomial modulo Phi_20 in place and return its low part."""
    # x^8 = x^6 - x^4 + x^2 - 1
    for k in range(len(poly) - 1, DEGREE - 1, -1):
        c = poly[k]
        if c:
            poly[k - 2] += c
            poly[k - 4] -= c
            poly[k - 6] += c
            poly[k - 8] -= c
    if len(poly) < DEGREE:
        poly.extend([0] * (DEGREE - len(poly)))
    return poly[:DEGREE]


def _zeta_power_table() -> tuple[tuple[int, ...], ...]:
    table = []
    current = [1] + [0] * (DEGREE - 1)
    for _ in range(CONDUCTOR):
        table.append(tuple(current))
        current = _reduce_ints([0] + current)
    return tuple(table)


_ZETA_POWERS = _zeta_power_table()


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to a rational")


class FieldElement:
    """Immutable element of Q(zeta_20)."""

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        fracs = [_as_fraction(c) for c in coeffs]
        den = reduce(math.lcm, (f.denominator for f in fracs), 1)
        nums = [f.numerator * (den // f.denominator) for f in fracs]
        if len(nums) > DEGREE:
            nums = _reduce_ints(nums)
        else:
            nums = nums + [0] * (DEGREE - len(nums))
        self._set(nums, den)

    def _set(self, nums: list[int], den: int) -> None:
        g = reduce(math.gcd, nums, den)
        if g > 1:
            nums = [n // g for n in nums]
            den //= g
        if not any(nums):
            den = 1
        self._num = tuple(nums)
        self._den = den

    @classmethod
    def _raw(cls, nums: list[int], den: int = 1) -> FieldElement:
        """Build from integer numerators already reduced mod Phi_20."""
        obj = cls.__new__(cls)
        obj._set(nums, den)
        return obj

    @classmethod
    def rational(cls, value: Scalar) -> FieldElement:
        f = _as_fraction(value)
        return cls._raw([f.numerator] + [0] * (DEGREE - 1), f.denominator)

    @classmethod
    def zeta(cls, k: int = 1) -> FieldElement:
        """Return zeta_20 ** k for any integer k."""
        return cls._raw(list(_ZETA_POWERS[k % CONDUCTOR]))

    @classmethod
    def coerce(cls, value: FieldElement | Scalar) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        return cls.rational(value)

    # -- inspection -----------------------------------------------------

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def zeta_degree(self) -> int:
        """Highest power of z with a nonzero coefficient (-1 for zero)."""
        for k in range(DEGREE - 1, -1, -1):
            if self._num[k]:
                return k
        return -1

    def galois(self, k: int) -> FieldElement:
        """Apply the automorphism z -> z^k (k coprime to 20)."""
        k %= CONDUCTOR
        if k not in UNITS:
            raise FieldError(f"z -> z^{k} is not an automorphism of Q(zeta_20)")
        acc = [0] * DEGREE
        for j, c in enumerate(self._num):
            if c:
                row = _ZETA_POWERS[(j * k) % CONDUCTOR]
                for t in range(DEGREE):
                    acc[t] += c * row[t]
        return FieldElement._raw(acc, self._den)

    def conjugate(self) -> FieldElement:
        return self.galois(-1)

    def in_real_quadratic(self) -> bool:
        """True when the element lies in Q(sqrt 5), the fixed field of z -> z^9, z^11."""
        return self.galois(9) == self and self.galois(11) == self

    def norm(self) -> Fraction:
        prod = FieldElement.rational(1)
        for k in UNITS:
            prod = prod * self.galois(k)
        return prod.to_rational()

    def __complex__(self) -> complex:
        z = cmath.exp(1j * math.pi / 10)
        return sum((n * z**k for k, n in enumerate(self._num) if n), 0j) / self._den

    def embed(self, root):
        """Evaluate the power-basis polynomial at *root* (any numeric type)."""
        total = 0
        for k, n in enumerate(self._num):
            if n:
                total += n * root**k
        return total / self._den

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: FieldElement | Scalar) -> FieldElement:
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            den = math.lcm(self._den, f.denominator)
            s = den // self._den
            nums = [n * s for n in self._num]
            nums[0] += f.numerator * (den // f.denominator)
            return FieldElement._raw(nums, den)
        if not isinstance(other, FieldElement):
            return NotImplemented
        den = math.lcm(self._den, other._den)
        a, b = den // self._den, den // other._den
        return FieldElement._raw([x * a + y * b for x, y in zip(self._num, other._num)], den)

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement._raw([-n for n in self._num], self._den)

    def __sub__(self, other: FieldElement | Scalar) -> FieldElement:
        if isinstance(other, (int, Fraction, FieldElement)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: FieldElement | Scalar) -> FieldElement:
        return (-self) + other

    def __mul__(self, other: FieldElement | Scalar) -> FieldElement:
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            return FieldElement._raw(
                [n * f.numerator for n in self._num], self._den * f.denominator
            )
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.is_rational():
            return FieldElement._raw(
                [n * other._num[0] for n in self._num], self._den * other._den
            )
        if self.is_rational():
            return other * self
        prod = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(self._num):
            if x:
                for j, y in enumerate(other._num):
                    if y:
                        prod[i + j] += x * y
        return FieldElement._raw(_reduce_ints(prod), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        """Multiplicative inverse by the extended Euclidean algorithm modulo Phi_20."""
        if self.is_zero():
            raise FieldError("division by zero in Q(zeta_20)")
        if self.is_rational():
            return FieldElement.rational(Fraction(self._den, self._num[0]))
        inv = _poly_inverse([Fraction(n, self._den) for n in self._num])
        return FieldElement(inv)

    def __truediv__(self, other: FieldElement | Scalar) -> FieldElement:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise FieldError("division by zero in Q(zeta_20)")
            return self * (1 / _as_fraction(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: FieldElement | Scalar) -> FieldElement:
        return FieldElement.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> FieldElement:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self._num, self._den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- text -----------------------------------------------------------

    def __str__(self) -> str:
        parts: list[str] = []
        for k, n in enumerate(self._num):
            if not n:
                continue
            c = Fraction(n, self._den)
            mag = str(abs(c))
            if k == 0:
                term = mag
            else:
                power = "z" if k == 1 else f"z^{k}"
                term = power if abs(c) == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"FieldElement({self})"


# -- polynomial helpers for inversion --------------------------------------

_PHI20 = [Fraction(c) for c in (1, 0, -1, 0, 1, 0, -1, 0, 1)]


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
    return _trim(q), a


def _poly_sub_mul(s0: list[Fraction], q: list[Fraction], s1: list[Fraction]) -> list[Fraction]:
    out = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
    for i, x in enumerate(q):
        for j, y in enumerate(s1):
            out[i + j] -= x * y
    return _trim(out)


def _poly_inverse(a: list[Fraction]) -> list[Fraction]:
    r0, r1 = list(_PHI20), _trim(list(a))
    s0: list[Fraction] = []
    s1: list[Fraction] = [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if len(r0) != 1:
        raise FieldError("element is not invertible modulo Phi_20")
    return [c / r0[0] for c in s0]


# -- named constants -------------------------------------------------------

ZERO = FieldElement.rational(0)
ONE = FieldElement.rational(1)
ZETA20 = FieldElement.zeta(1)
ZETA10 = FieldElement.zeta(2)
ZETA5 = FieldElement.zeta(4)
I = FieldElement.zeta(5)
SQRT5 = ZETA5 - ZETA5**2 - ZETA5**3 + ZETA5**4
ALPHA = (1 + SQRT5) / 2
BETA = (1 - SQRT5) / 2

_CONSTANTS = {
    "i": I,
    "sqrt5": SQRT5,
    "zeta5": ZETA5,
    "zeta10": ZETA10,
    "zeta20": ZETA20,
    "alpha": ALPHA,
    "beta": BETA,
}


def field_constant(name: str) -> FieldElement:
    """Return one of the named constants ``i, sqrt5, zeta5, zeta10, zeta20, alpha, beta``."""
    try:
        return _CONSTANTS[name]
    except KeyError:
        raise FieldError(
            f"unknown field constant {name!r}; expected one of {', '.join(_CONSTANTS)}"
        ) from None


def iroot(n: int, k: int) -> int | None:
    """Exact integer k-th root of n >= 0, or None."""
    if n < 0:
        raise FieldError("iroot expects a nonnegative integer")
    if n < 2:
        return n
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def rational_root(value: Fraction, n: int) -> Fraction | None:
    """Real n-th root of a rational, when it is rational (negative only for odd n)."""
    if value < 0:
        if n % 2 == 0:
            return None
        root = rational_root(-value, n)
        return None if root is None else -root
    num = iroot(value.numerator, n)
    den = iroot(value.denominator, n)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def nth_root_in_field(a: FieldElement, n: int) -> FieldElement | None:
    """Find the principal n-th root of *a* in F, or ``None``.

    Candidates are ``zeta_20^k * sqrt5^e * r`` with ``r`` rational.  Among the
    candidates that exist, the one whose argument is closest to ``Arg(a)/n`` is
    returned, so a positive rational gets its positive real root.
    """
    if n < 1:
        raise FieldError(f"root index must be positive, got {n}")
    if n == 1 or a.is_zero():
        return a
    candidates: list[FieldElement] = []
    for e in (0, 1):
        radical = SQRT5**e
        for k in range(CONDUCTOR):
            unit = FieldElement.zeta(k) * radical
            quotient = a / unit**n
            if not quotient.is_rational():
                continue
            r = rational_root(quotient.to_rational(), n)
            if r is not None:
                candidates.append(unit * r)
        if candidates:
            break
    if not candidates:
        return None
    target = cmath.phase(complex(a)) / n

    def distance(x: FieldElement) -> float:
        d = cmath.phase(complex(x)) - target
        return abs(math.remainder(d, 2 * math.pi))

    return min(candidates, key=distance)
