"""Dirichlet characters mod 5, Eisenstein series of level 1 and 5, and t_1 ... t_6.

All Lambert series are built from one integer sieve that sums d^p over the
divisors of every N, split by the residue of d (or of N/d) modulo 5.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from quintic_theta.core.exactfield import I, ONE, SQRT5, ZERO, ZETA5, FieldElement
from quintic_theta.core.products import OrderLike, qpoch
from quintic_theta.core.qseries import QSeries
from quintic_theta.core.quintic import int_order
from quintic_theta.errors import CharacterError, ConstantsError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DirichletChar5:
    """A Dirichlet character modulo 5 given by its values on 0, 1, 2, 3, 4."""

    label: str
    values: tuple[FieldElement, ...]

    def __call__(self, n: int) -> FieldElement:
        return self.values[n % 5]

    @property
    def parity(self) -> int:
        """chi(-1) as +1 or -1."""
        return 1 if self(-1) == 1 else -1

    def conjugate(self) -> DirichletChar5:
        conj = tuple(v.conjugate() for v in self.values)
        for other in CHARACTERS.values():
            if other.values == conj:
                return other
        raise CharacterError(f"conjugate of {self.label} is not a known character")


def _char(label: str, *values: FieldElement | int) -> DirichletChar5:
    return DirichletChar5(label, tuple(FieldElement.coerce(v) for v in values))


CHI1 = _char("chi1", 0, 1, 1, 1, 1)
CHI2 = _char("chi2", 0, 1, I, -I, -1)
CHI3 = _char("chi3", 0, 1, -1, -1, 1)
CHI4 = _char("chi4", 0, 1, -I, I, -1)

CHARACTERS = {c.label: c for c in (CHI1, CHI2, CHI3, CHI4)}


def character(label: str | DirichletChar5) -> DirichletChar5:
    if isinstance(label, DirichletChar5):
        return label
    try:
        return CHARACTERS[label]
    except KeyError:
        raise CharacterError(
            f"unknown character {label!r}; expected one of {', '.join(CHARACTERS)}"
        ) from None


def _check_parity(k: int, chi: DirichletChar5) -> None:
    if k < 1:
        raise CharacterError(f"weight must be positive, got {k}")
    if chi.parity != (-1) ** k:
        raise CharacterError(f"{chi.label}(-1) = {chi.parity} does not match weight {k}")


# -- Bernoulli numbers and L-values -----------------------------------------


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    return -sum(comb(n + 1, j) * bernoulli(j) for j in range(n)) / (n + 1)


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    return sum(comb(n, j) * bernoulli(j) * x ** (n - j) for j in range(n + 1))


def generalized_bernoulli(k: int, chi: DirichletChar5) -> FieldElement:
    """B_{k,chi} = 5^(k-1) sum_{a=1}^{5} chi(a) B_k(a/5)."""
    total = ZERO
    for a in range(1, 6):
        total = total + chi(a) * bernoulli_poly(k, Fraction(a, 5))
    return total * 5 ** (k - 1)


def l_value(k: int, chi: DirichletChar5) -> FieldElement:
    """L(1 - k, chi) = -B_{k,chi}/k."""
    return generalized_bernoulli(k, chi) * Fraction(-1, k)


# Normalisations quoted for the weight one and two series.
PUBLISHED_CONSTANTS: dict[tuple[int, str], FieldElement] = {
    (1, "chi2"): 3 - I,
    (1, "chi4"): 3 + I,
    (2, "chi1"): FieldElement.rational(6),
    (2, "chi3"): FieldElement.rational(-5),
}


@lru_cache(maxsize=None)
def eisenstein_constant(k: int, chi_label: str) -> FieldElement:
    """2/L(1 - k, chi) for a level 5 Eisenstein series."""
    chi = character(chi_label)
    _check_parity(k, chi)
    value = 2 / l_value(k, chi)
    quoted = PUBLISHED_CONSTANTS.get((k, chi.label))
    if quoted is not None and quoted != value:
        raise ConstantsError(
            f"2/L({1 - k}, {chi.label}) = {value} disagrees with the quoted {quoted}"
        )
    return value


def level1_constant(k: int) -> Fraction:
    """2/zeta(1 - k) = -2k/B_k."""
    return Fraction(-2 * k) / bernoulli(k)


# -- divisor sieve ----------------------------------------------------------


@lru_cache(maxsize=64)
def residue_divisor_table(power: int, n: int, codivisor: bool = False) -> tuple[tuple[int, ...], ...]:
    """T[r][N] = sum of d^power over d | N, 0 < N < n, with d = r (mod 5).

    With ``codivisor`` the residue is taken of N/d instead of d.
    """
    table = [[0] * n for _ in range(5)]
    for d in range(1, n):
        dp = d**power
        if codivisor:
            for j, big in enumerate(range(d, n, d), start=1):
                table[j % 5][big] += dp
        else:
            row = table[d % 5]
            for big in range(d, n, d):
                row[big] += dp
    return tuple(tuple(row) for row in table)


def divisor_sums(power: int, n: int, chi: DirichletChar5 | None = None, codivisor: bool = False) -> list[FieldElement]:
    """[sum_{d|N} chi(d or N/d) d^power for N in range(n)], zero at N = 0."""
    table = residue_divisor_table(power, n, codivisor)
    weights = [ONE] * 5 if chi is None else list(chi.values)
    out: list[FieldElement] = [ZERO] * n
    for big in range(1, n):
        acc = ZERO
        for r in range(5):
            t = table[r][big]
            if t and weights[r]:
                acc = acc + weights[r] * t
        out[big] = acc
    return out


# -- Eisenstein series ------------------------------------------------------


@lru_cache(maxsize=32)
def _level1(k: int, n: int) -> QSeries:
    c = level1_constant(k)
    sums = divisor_sums(k - 1, n)
    coeffs = [ONE] + [s * c for s in sums[1:]]
    return QSeries(coeffs, 0, 1)


def eisenstein_level1(k: int, order: OrderLike = 100) -> QSeries:
    """E_2, E_4 or E_6 on the full modular group."""
    if k not in (2, 4, 6):
        raise CharacterError(f"level one Eisenstein series of weight {k} is not provided")
    return _level1(k, int_order(order))


@lru_cache(maxsize=64)
def _level5(k: int, label: str, n: int) -> QSeries:
    chi = character(label)
    c = eisenstein_constant(k, label)
    sums = divisor_sums(k - 1, n, chi)
    return QSeries([ONE] + [s * c for s in sums[1:]], 0, 1)


def eisenstein_level5(k: int, chi: str | DirichletChar5, order: OrderLike = 100) -> QSeries:
    """E_{k,chi}(q) = 1 + 2/L(1-k, chi) sum_N (sum_{d|N} chi(d) d^(k-1)) q^N."""
    chi = character(chi)
    _check_parity(k, chi)
    if k == 3:
        validate_weight3_constants()
    return _level5(k, chi.label, int_order(order))


@lru_cache(maxsize=64)
def _lambert(k: int, label: str, n: int) -> QSeries:
    sums = divisor_sums(k - 1, n, character(label), codivisor=True)
    return QSeries(sums, 0, 1)


def lambert_L(k: int, chi: str | DirichletChar5, order: OrderLike = 100) -> QSeries:
    """L_{k,chi}(q) = sum_N (sum_{d|N} chi(N/d) d^(k-1)) q^N."""
    chi = character(chi)
    _check_parity(k, chi)
    return _lambert(k, chi.label, int_order(order))


@lru_cache(maxsize=1)
def validate_weight3_constants(order: int = 30) -> None:
    """Cross-check 2/L(-2, chi) against E_{3,chi} = E_{1,conj chi} E_{2,chi3}."""
    e2 = _level5(2, "chi3", order)
    for label, partner in (("chi2", "chi4"), ("chi4", "chi2")):
        product = _level5(1, partner, order) * e2
        direct = _level5(3, label, order)
        if direct.coeffs != product.coeffs[: len(direct.coeffs)]:
            raise ConstantsError(
                f"E_3,{label} with 2/L(-2, {label}) = {eisenstein_constant(3, label)} "
                f"does not factor as E_1,{partner} * E_2,chi3"
            )
    logger.debug("weight three normalisations cross-checked to order %d", order)


# -- t_1 ... t_6 ------------------------------------------------------------

_HALF = Fraction(1, 2)


@lru_cache(maxsize=64)
def _t_cached(index: int, n: int) -> QSeries:
    if index in (1, 2):
        e2, e4 = _level5(1, "chi2", n), _level5(1, "chi4", n)
        if index == 1:
            return e2 * ((1 + 2 * I) * _HALF) + e4 * ((1 - 2 * I) * _HALF)
        return (e2 - e4) * (2 * I).inverse()
    if index in (3, 4):
        e21, e23 = _level5(2, "chi1", n), _level5(2, "chi3", n)
        e2q5 = _level1(2, -(-n // 5) + 1).substitute_power(5).truncate(n)
        if index == 3:
            return e21 * Fraction(5, 24) - e23 * Fraction(1, 4) + e2q5 * Fraction(25, 24)
        return e23 * Fraction(1, 4) - e21 * Fraction(1, 24) - e2q5 * Fraction(5, 24)
    validate_weight3_constants()
    e32, e34 = _level5(3, "chi2", n), _level5(3, "chi4", n)
    if index == 5:
        return e32 * (_HALF + I * Fraction(11, 4)) + e34 * (_HALF - I * Fraction(11, 4))
    if index == 6:
        return e34 * (I * Fraction(5, 4)) - e32 * (I * Fraction(5, 4))
    raise CharacterError(f"t-series index must be 1..6, got {index}")


def t_series(index: int, order: OrderLike = 100) -> QSeries:
    """The series t_1 ... t_6, with coefficients in Q."""
    if not 1 <= index <= 6:
        raise CharacterError(f"t-series index must be 1..6, got {index}")
    return _t_cached(index, int_order(order))


def elliptic_parameters(alpha: str, order: OrderLike = 100) -> tuple[QSeries, QSeries, QSeries]:
    """(e_a, P_a, Q_a) for a = 1/5 or 2/5 as t-combinations with +sqrt5 or -sqrt5."""
    sign = {"1/5": 1, "2/5": -1}.get(alpha)
    if sign is None:
        raise CharacterError(f"elliptic parameters are provided for 1/5 and 2/5, not {alpha}")
    root = SQRT5 * sign
    t = [t_series(i, order) for i in range(1, 7)]
    return t[0] + t[1] * root, t[2] + t[3] * root, t[4] + t[5] * root


def trigonometric_parameters(alpha: str, order: OrderLike = 100) -> tuple[QSeries, QSeries, QSeries]:
    """(e_a, P_a, Q_a) from their sine/cosine Lambert series, exactly in Q(zeta_20)."""
    a = {"1/5": 1, "2/5": 2}.get(alpha)
    if a is None:
        raise CharacterError(f"elliptic parameters are provided for 1/5 and 2/5, not {alpha}")
    n = int_order(order)
    rot = FieldElement.zeta(2 * a)  # e^(i pi a/5)
    sin_pa = (rot - rot.inverse()) / (2 * I)
    cos_pa = (rot + rot.inverse()) / 2
    tan_pa = sin_pa / cos_pa
    sin2 = [(rot ** (2 * r) - rot ** (-2 * r)) / (2 * I) for r in range(5)]
    cos2 = [(rot ** (2 * r) + rot ** (-2 * r)) / 2 for r in range(5)]

    def lambert(power: int, weights: list[FieldElement], scale: FieldElement) -> QSeries:
        table = residue_divisor_table(power, n)
        coeffs = [ONE]
        for big in range(1, n):
            acc = ZERO
            for r in range(5):
                if table[r][big] and weights[r]:
                    acc = acc + weights[r] * table[r][big]
            coeffs.append(acc * scale)
        return QSeries(coeffs, 0, 1)

    e = lambert(0, sin2, 4 * tan_pa)
    p = lambert(1, cos2, -8 * sin_pa * sin_pa)
    q = lambert(2, sin2, -8 * tan_pa * sin_pa * sin_pa)
    return e, p, q


def golden_product(which: str, order: OrderLike = 100) -> QSeries:
    """prod_{n>=1} (1 + alpha q^n + q^2n) or the same with beta."""
    n = int_order(order)
    j, k = {"alpha": (2, 3), "beta": (1, 4)}[which]
    return qpoch(1, 1, n, ZETA5**j) * qpoch(1, 1, n, ZETA5**k)

