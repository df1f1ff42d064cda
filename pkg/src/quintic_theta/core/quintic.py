"""The quintic theta functions A, B, C, D, the Rogers-Ramanujan functions and R(q).

A and B carry q^(1/5) exponents; C and D live on the integer grid.  Each
function is available in several equivalent forms so identities between the
forms can be checked:

* ``sum``     - theta sum over an eta power,
* ``product`` - infinite product form,
* ``linear``  - C and D only: B(q^5) - alpha A(q^5), B(q^5) - beta A(q^5).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from quintic_theta.core.exactfield import ALPHA, BETA, ZETA5, FieldElement
from quintic_theta.core.products import OrderLike, eta_power, qpoch, ramanujan_f
from quintic_theta.core.qseries import QSeries
from quintic_theta.errors import SeriesError

THETA_NAMES = ("A", "B", "C", "D")
PRIMARY_FORM = {"A": "sum", "B": "sum", "C": "linear", "D": "linear"}

# w in sum_n w^n q^((n^2 - n)/2): e^(3 pi i/5) for C, e^(pi i/5) for D
_CD_PHASE = {"C": FieldElement.zeta(6), "D": FieldElement.zeta(2)}
# (z q; q)_inf factors of the C, D products
_CD_ROOTS = {"C": (1, 4), "D": (2, 3)}


def int_order(order: OrderLike) -> int:
    """Smallest positive integer >= order."""
    return max(math.ceil(Fraction(order)), 1)


def _a_sum(n: int) -> QSeries:
    theta = ramanujan_f(-1, 1, -1, 4, n)
    return (theta * eta_power(-3, 5, 1, n)).shift(Fraction(1, 5))


def _b_sum(n: int) -> QSeries:
    return ramanujan_f(-1, 2, -1, 3, n) * eta_power(-3, 5, 1, n)


def _a_product(n: int) -> QSeries:
    denom = qpoch(2, 5, n) * qpoch(3, 5, n)
    return (eta_power(2, 5, 1, n) / denom).shift(Fraction(1, 5))


def _b_product(n: int) -> QSeries:
    denom = qpoch(1, 5, n) * qpoch(4, 5, n)
    return eta_power(2, 5, 1, n) / denom


def _cd_sum(which: str, n: int) -> QSeries:
    w = _CD_PHASE[which]
    theta = ramanujan_f(w, 0, w.inverse(), 1, n)
    return theta * eta_power(-3, 5, 5, n) * (1 + w).inverse()


def _cd_product(which: str, n: int) -> QSeries:
    j, k = _CD_ROOTS[which]
    series = qpoch(1, 1, n, ZETA5**j) * qpoch(1, 1, n, ZETA5**k)
    return series * eta_power(1, 1, 1, n) * eta_power(-3, 5, 5, n)


def _cd_linear(which: str, n: int) -> QSeries:
    small = int_order(Fraction(n, 5)) + 1
    a5 = theta_series("A", "sum", small).substitute_power(5).compact()
    b5 = theta_series("B", "sum", small).substitute_power(5).compact()
    coefficient = ALPHA if which == "C" else BETA
    return (b5 - a5 * coefficient).truncate(n)


@lru_cache(maxsize=128)
def _theta_cached(which: str, form: str, n: int) -> QSeries:
    if which == "A":
        builders = {"sum": _a_sum, "product": _a_product}
    elif which == "B":
        builders = {"sum": _b_sum, "product": _b_product}
    else:
        builders = {
            "sum": lambda m: _cd_sum(which, m),
            "product": lambda m: _cd_product(which, m),
            "linear": lambda m: _cd_linear(which, m),
        }
    try:
        builder = builders[form]
    except KeyError:
        raise SeriesError(f"{which}(q) has no {form!r} form") from None
    return builder(n)


def theta_series(which: str, form: str | None = None, order: OrderLike = 100) -> QSeries:
    """One of the quintic theta functions A, B, C, D, known below *order*."""
    if which not in THETA_NAMES:
        raise SeriesError(f"unknown quintic theta function {which!r}")
    return _theta_cached(which, form or PRIMARY_FORM[which], int_order(order))


def quintic_pair(order: OrderLike) -> tuple[QSeries, QSeries]:
    """(A(q), B(q)) on the q^(1/5) grid."""
    return theta_series("A", order=order), theta_series("B", order=order)


# -- Rogers-Ramanujan ------------------------------------------------------


def _rr_sum(shift: int, n: int) -> QSeries:
    """sum_k q^(k^2 + shift*k)/(q;q)_k."""
    total = [0] * n
    partial = [0] * n  # 1/(q;q)_k
    partial[0] = 1
    k = 0
    while k * k + shift * k < n:
        if k:
            for i in range(k, n):
                partial[i] += partial[i - k]
        offset = k * k + shift * k
        for i in range(n - offset):
            total[i + offset] += partial[i]
        k += 1
    return QSeries(total, 0, 1)


@lru_cache(maxsize=32)
def _rr_cached(which: str, form: str, n: int) -> QSeries:
    shift = {"G": 0, "H": 1}[which]
    if form == "sum":
        return _rr_sum(shift, n)
    if form == "product":
        r1, r2 = (1, 4) if which == "G" else (2, 3)
        return (qpoch(r1, 5, n) * qpoch(r2, 5, n)).invert()
    raise SeriesError(f"{which}(q) has no {form!r} form")


def rogers_ramanujan(which: str, form: str = "product", order: OrderLike = 100) -> QSeries:
    """G(q) or H(q) in sum or product form."""
    if which not in ("G", "H"):
        raise SeriesError(f"unknown Rogers-Ramanujan function {which!r}")
    return _rr_cached(which, form, int_order(order))


@lru_cache(maxsize=32)
def _rr_fraction(form: str, n: int) -> QSeries:
    if form == "product":
        num = qpoch(1, 5, n) * qpoch(4, 5, n)
        den = qpoch(2, 5, n) * qpoch(3, 5, n)
        return (num / den).shift(Fraction(1, 5))
    if form == "quotient":
        a, b = quintic_pair(n)
        return a / b
    raise SeriesError(f"R(q) has no {form!r} form")


def rr_continued_fraction(order: OrderLike = 100, form: str = "product") -> QSeries:
    """R(q) = A(q)/B(q) = q^(1/5) (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5))."""
    return _rr_fraction(form, int_order(order))


def a_unit(order: OrderLike = 100) -> QSeries:
    """q^(-1/5) A(q), an integer-exponent series starting at 1."""
    return theta_series("A", order=order).shift(Fraction(-1, 5)).compact()


@lru_cache(maxsize=32)
def _fifth_powers(n: int) -> tuple[QSeries, QSeries]:
    b = theta_series("B", order=n)
    return (a_unit(n) ** 5).shift(1).truncate(n), (b**5).truncate(n)


def fifth_powers(order: OrderLike = 100) -> tuple[QSeries, QSeries]:
    """(A^5(q), B^5(q)); both have integer exponents."""
    return _fifth_powers(int_order(order))
