"""Published coefficient tables, kept as data so computations can be diffed against them.

Vectors of homogeneous polynomials are indexed by the A^5 exponent (entry k
multiplies A^(5k) B^(5(d-k))); mixed vectors by the A exponent.  Where the
printed form carries a misprint the stored value is the corrected one and
``correction`` says what changed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from quintic_theta.core.exactfield import I
from quintic_theta.errors import RegistryError


@dataclass(frozen=True)
class PublishedTable:
    name: str
    source: str
    data: Any
    correction: str = ""


_TABLES: dict[str, PublishedTable] = {}


def _register(name: str, source: str, data: Any, correction: str = "") -> PublishedTable:
    table = PublishedTable(name, source, data, correction)
    _TABLES[name] = table
    return table


def published(name: str) -> PublishedTable:
    try:
        return _TABLES[name]
    except KeyError:
        raise RegistryError(
            f"no published table {name!r}; known tables: {', '.join(sorted(_TABLES))}"
        ) from None


def table_names() -> list[str]:
    return sorted(_TABLES)


# -- pentamidiation arrays and Hecke matrices (printed transposed for B) ----

_register(
    "B1",
    "first pentamidiation array, printed as its transpose",
    ((1, 3, 4, 2, 1, 0), (0, 1, -2, 4, -3, 1)),
)
_register(
    "B2",
    "second pentamidiation array, printed as its transpose",
    (
        (1, 6, 17, 28, 30, 22, 12, 4, 1, 0, 0),
        (0, 1, 1, 2, 3, 5, -3, 2, -1, 1, 0),
        (0, 0, 1, -4, 12, -22, 30, -28, 17, -6, 1),
    ),
)
_register("A2", "Hecke matrix of degree 2", ((1, 0, 0), (22, 5, -22), (0, 0, 1)))
_register(
    "A3",
    "Hecke matrix of degree 3",
    ((1, 0, 0, 0), (264, 25, 0, 24), (24, 0, 25, -264), (0, 0, 0, 1)),
)
_register(
    "A4",
    "Hecke matrix of degree 4",
    (
        (1, 0, 0, 0, 0),
        (1356, 115, 10, 10, -8),
        (1462, 110, 15, -110, 1462),
        (8, 10, -10, 115, -1356),
        (0, 0, 0, 0, 1),
    ),
)
_register(
    "A5",
    "Hecke matrix of degree 5",
    (
        (1, 0, 0, 0, 0, 0),
        (4603, 410, 35, 5, -5, 1),
        (25494, 2360, 235, -20, 270, -2272),
        (2272, 270, 20, 235, -2360, 25494),
        (1, 5, 5, -35, 410, -4603),
        (0, 0, 0, 0, 0, 1),
    ),
)
_register(
    "A6",
    "Hecke matrix of degree 6",
    (
        (1, 0, 0, 0, 0, 0, 0),
        (12228, 1126, 102, 9, -2, 1, 0),
        (232494, 21353, 1931, 177, 94, -647, 1626),
        (108772, 8994, 688, 71, -688, 8994, -108772),
        (1626, 647, 94, -177, 1931, -21353, 232494),
        (0, 1, 2, 9, -102, 1126, -12228),
        (0, 0, 0, 0, 0, 0, 1),
    ),
)

# -- Eisenstein parameterizations -------------------------------------------

_register("E4", "E_4 = B^20 + 228 A^5 B^15 + 494 A^10 B^10 - 228 A^15 B^5 + A^20", (1, 228, 494, -228, 1))
_register(
    "E6",
    "E_6 as a degree six polynomial in A^5, B^5",
    (1, -522, -10005, 0, -10005, 522, 1),
    correction="printed with six entries; the vanishing A^15 B^15 term is restored",
)
_register("E4_q5", "E_4(q^5) = B^20 - 12 B^15 A^5 + 14 B^10 A^10 + 12 B^5 A^15 + A^20", (1, -12, 14, 12, 1))
_register(
    "E6_q5",
    "E_6(q^5) as a degree six polynomial in A^5, B^5",
    (1, -18, 75, 0, 75, 18, 1),
    correction="printed with a B^20 A^5 term; the A-exponents run 0, 5, ..., 30",
)
_register(
    "E4_root",
    "E_4(q^(1/5)) as a mixed polynomial of degree 20 in A, B",
    (
        1, 240, 2160, 6720, 17520, 30228, 57840, 60960, 79920, 41520, 60494,
        -41520, 79920, -60960, 57840, -30228, 17520, -6720, 2160, -240, 1,
    ),
)
_register(
    "E6_root",
    "E_6(q^(1/5)) as a mixed polynomial of degree 30 in A, B",
    (
        1, -504, -16632, -122976, -532728, -1575522, -4049640, -8205120,
        -15203160, -22425480, -31510005, -32502960, -37633680, -21450240,
        -26046720, 0, -26046720, 21450240, -37633680, 32502960, -31510005,
        22425480, -15203160, 8205120, -4049640, 1575522, -532728, 122976,
        -16632, 504, 1,
    ),
    correction="the printed form omits the A^15 B^15 slot; stored as 0",
)
_register("E2chi3", "E_{2,chi3} = B^10 - 11 A^5 B^5 - A^10", (1, -11, -1))
_register("E2chi1", "E_{2,chi1} = A^10 + B^10", (1, 0, 1))
_register("E1chi4", "E_{1,chi4} = B^5 + i A^5", (1, I))
_register("E1chi2", "E_{1,chi2} = B^5 - i A^5", (1, -I))
_register("L2chi3", "L_{2,chi3} = A^5 B^5", (0, 1, 0))
_register(
    "L4chi3",
    "L_{4,chi3} = B^15 A^5 + B^5 A^15",
    (0, 1, 0, 1, 0),
    correction="printed with B A^15 in place of B^5 A^15",
)
_register("L6chi3", "L_{6,chi3} in A^5, B^5 of degree six", (0, 1, 18, 14, -18, 1, 0))
_register("L4chi1", "L_{4,chi1} = B^15 A^5 + 2 B^10 A^10 - B^5 A^15", (0, 1, 2, -1, 0))
_register(
    "L6chi1",
    "L_{6,chi1} in A^5, B^5 of degree six",
    (0, 1, 20, 0, 20, -1, 0),
    correction="printed with a B^5 A^20 term that does not fit degree six; fitted vector reported",
)

# -- residue-class decompositions (ascending A exponent within a class) -----

_register(
    "sigma3_classes",
    "E_4 multisected by residue: sum sigma_3(5n+r) q^n as A, B polynomials over 240",
    {1: (1, 241, -173, 73), 2: (9, 254, 333, -28), 3: (28, 333, -254, 9), 4: (73, 173, 241, -1)},
)
_register(
    "he5_classes",
    "5 E_2(q^5) - E_2 = 4 E_{2,chi1} multisected by residue, scale 24",
    {1: (1, 7), 2: (3, -4), 3: (4, 3), 4: (7, -1)},
)
_register(
    "he6_classes",
    "E_{2,chi3} multisected by residue, scale -5",
    {1: (1, -3), 2: (-1, -2), 3: (-2, 1), 4: (3, 1)},
)
_register(
    "pr5_mixed",
    "E_{1,chi4}(q^(1/5)) = B^5 + (3+i) B^4 A + (4-2i) B^3 A^2 + (2+4i) B^2 A^3 + (1-3i) B A^4 + i A^5",
    (1, 3 + I, 4 - 2 * I, 2 + 4 * I, 1 - 3 * I, I),
)
_register(
    "pr5_classes",
    "E_{1,chi4} multisected by residue over 3+i",
    {1: (1,), 2: (1 - I,), 3: (1 + I,), 4: (-I,)},
)
_register(
    "tau_classes",
    "sum tau(5n+r) q^n as A, B polynomials of A-exponent r, r+5, ...",
    {
        1: (1, -6083, 716495, -14213080, 83214230, -21441266, -426443402,
            -41743460, 22164065, 2946185, 66539, -1472),
        2: (-24, -15928, 104720, -2608430, 71302530, -377079066, 86337768,
            179092490, 37021490, 2846410, 76164, -252),
        4: (-1472, -66539, 2946185, -22164065, -41743460, 426443402,
            -21441266, -83214230, -14213080, -716495, -6083, -1),
    },
    correction="the residue 3 class is printed with a misprint and is not stored",
)

# -- partitions -------------------------------------------------------------

_register(
    "L_root",
    "L_{2,chi3}(q^(1/5)) = A B^9 + A^2 B^8 + 2 A^3 B^7 + 3 A^4 B^6 + 5 A^5 B^5 - 3 A^6 B^4 + ...",
    (0, 1, 1, 2, 3, 5, -3, 2, -1, 1, 0),
)
_register(
    "partition_classes",
    "(q;q)^5 sum p(5n+r-1) q^n as A, B polynomials, residue r",
    {1: (1, -3), 2: (1, 2), 3: (2, -1), 4: (3, 1), 0: (5,)},
)
_register(
    "p25_polynomial",
    "numerator polynomial for sum p(25n+24) q^n, over 25 A^10 B^10",
    (63, 3728, 27861, 25404, 21285, -25404, 27861, -3728, 63),
)
_register(
    "p25_coefficients",
    "sum p(25n+24) q^n = sum c_j q^(j-1) (q^5;q^5)^(6j) / (q;q)^(6j+1)",
    (5**2 * 63, 5**5 * 52, 5**7 * 63, 5**10 * 6, 5**12),
)
_register(
    "watson",
    "q E5^6 / E1^6 = sum c_j q^j E25^j / E1^j for j = 1..5",
    (1, 5, 15, 25, 25),
)
_register(
    "multipartition_dissections",
    "sum p_k(5n+b) q^n = sum c q^s (q^5;q^5)^e5 (q;q)^e1",
    {
        # k: (b, [(c, q power, E5 exponent, E1 exponent), ...])
        2: (3, [(10, 0, 4, -6), (125, 1, 10, -12)]),
        -2: (2, [(-1, 0, 2, 0)]),
        3: (2, [(9, 0, 3, -6), (375, 1, 9, -12), (3125, 2, 15, -18)]),
        -3: (3, [(5, 0, 3, 0)]),
        -4: (4, [(-5, 0, 4, 0)]),
        4: (1, [(4, 0, 2, -6), (550, 1, 8, -12), (12500, 2, 14, -18), (78125, 3, 20, -24)]),
        -5: (0, [(1, 0, -1, 6)]),
        5: (
            0,
            [(1, 0, 1, -6), (500, 1, 7, -12), (25000, 2, 13, -18),
             (390625, 3, 19, -24), (1953125, 4, 25, -30)],
        ),
    },
    correction=(
        "powers of q on the later terms are absent from the printed display; "
        "for k = -2, -3, -4 the printed (q^5;q^5)(q;q)^(5j) is (q^5;q^5)^(j+1)"
    ),
)

# -- tau multisection -------------------------------------------------------

_register("tau_start", "P_0 coefficients a_{1,0} .. a_{5,0}", (1, 44, 722, 5192, 13195))
_register(
    "tau_step",
    "integer step: 5 a_{n+1} = S a_n for the P_n coefficients",
    (
        (4465, -440, 45, -5, 1),
        (-331760, 28510, -2530, 245, -44),
        (5407380, -516505, 47515, -4435, 722),
        (-38890280, 3700355, -362890, 34960, -5192),
        (98835800, -9405550, 917650, -97600, 13195),
    ),
)
_register(
    "tau_matrix",
    "a_n = M^n a_0 for the P_n coefficients",
    (
        (893, -88, 9, -1, Fraction(1, 5)),
        (66352, -5702, 506, -49, Fraction(44, 5)),
        (1081476, -103301, 9503, -887, Fraction(722, 5)),
        (7778056, -740071, 72578, -6992, Fraction(5192, 5)),
        (19767160, -1881110, 183530, -19520, 2639),
    ),
)

# -- Kaneko polynomials -----------------------------------------------------

_register(
    "kaneko",
    "f_n(t) coefficient lists from the Frobenius recurrence",
    {
        1: (1, 7),
        2: (1, 39, -26),
        3: (1, 171, 247, -57),
        5: (1, -465, -10385, -2945, -8370, 682),
        6: (1, -333, -17390, -54390, 26640, -64158, 3774),
        7: (1, -301, -36421, -310245, 10535, -422303, 283843, -12857),
        8: (1, -294, -101528, -1798692, -2747430, -387933, -2086028, 740544, -26999),
    },
)
_register(
    "icosian",
    "A^20 + 12 A^15 B^5 + 134 A^10 B^10 - 12 A^5 B^15 + B^20",
    (1, -12, 134, 12, 1),
)
