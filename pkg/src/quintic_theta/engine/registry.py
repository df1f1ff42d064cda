"""Named identity checks that the CLI and the dashboard run uniformly."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

from quintic_theta.core import dynamics, identities, numeric, partitions, pentops
from quintic_theta.core.report import IdentityReport
from quintic_theta.errors import RegistryError

logger = logging.getLogger(__name__)

Builder = Callable[[int], IdentityReport]


@dataclass(frozen=True)
class RegistryEntry:
    """One verifiable identity: a builder taking the truncation order."""

    name: str
    anchor: str
    default_order: int
    builder: Builder
    tags: tuple[str, ...] = field(default_factory=tuple)

    def run(self, order: int | None = None) -> IdentityReport:
        report = self.builder(order if order is not None else self.default_order)
        # builders label themselves; the registry name is authoritative
        report.name = self.name
        report.anchor = self.anchor
        return report

    def to_json(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "default_order": self.default_order}


def _entries() -> list[RegistryEntry]:
    return [
        # quintic theta functions
        RegistryEntry("thm1.1-quintic", "C^5 = B^5 - alpha^5 A^5 and C = B(q^5) - alpha A(q^5)",
                      100, identities.verify_quintic_relation, ("theta",)),
        RegistryEntry("theta-forms", "sum, product and Eisenstein forms of A, B, C, D",
                      60, identities.verify_theta_forms, ("theta",)),
        RegistryEntry("jacobi-quartic", "theta_3^4 = theta_2^4 + theta_4^4",
                      100, identities.verify_jacobi_quartic, ("theta",)),
        RegistryEntry("theta-characteristics", "A, B, C, D as theta constants with characteristics",
                      40, identities.verify_theta_characteristics, ("theta",)),
        RegistryEntry("ramanujan-t-products", "continued fraction products with square roots of t",
                      50, identities.verify_t_products, ("theta",)),
        RegistryEntry("rr-quintic", "1/R^5 - 11 - R^5 = (q;q)^6 / (q (q^5;q^5)^6)",
                      100, identities.verify_rr_quintic, ("theta",)),
        RegistryEntry("rr-quartet", "Rogers-Ramanujan functions at q and q^5",
                      60, identities.verify_rr_quartet, ("theta",)),
        # operators
        RegistryEntry("pentication", "A(q^5), B(q^5) as fifth roots of C, D combinations",
                      100, pentops.verify_pentication, ("operators",)),
        RegistryEntry("iterated-pentication", "nested radicals for A(q^25), B(q^25)",
                      60, pentops.verify_iterated_pentication, ("operators",)),
        RegistryEntry("pentamidiation-radicals", "A(q^(1/5)), B(q^(1/5)) by fifth roots",
                      12, pentops.verify_pentamidiation_radicals, ("operators",)),
        RegistryEntry("pentamidiation-arrays", "20 random polynomials per degree 1 to 4 on both routes, perturbed B_2 rejected",
                      80, pentops.verify_pentamidiation_arrays, ("operators",)),
        RegistryEntry("change-of-sign", "C(zeta^k q), D(zeta^k q) and the twisted A, B",
                      60, pentops.verify_change_of_sign, ("operators",)),
        RegistryEntry("array-structure", "column sums, unit eigenvalue and determinants",
                      6, lambda order: pentops.verify_array_structure(), ("operators",)),
        RegistryEntry("published-arrays", "printed pentamidiation arrays and Hecke matrices",
                      6, lambda order: pentops.verify_published_arrays(), ("operators", "tables")),
        RegistryEntry("multisection-eigenvalues", "Omega_{5,0} L_{k,chi} = 5^(k-1) L_{k,chi}",
                      60, pentops.verify_multisection_eigenvalues, ("operators", "eisenstein")),
        RegistryEntry("e4-multisection", "Hecke iterates of E_4 and the inverse step",
                      60, pentops.verify_e4_multisection, ("operators", "eisenstein")),
        # Eisenstein series
        RegistryEntry("eisenstein-parameterizations", "Eisenstein series as polynomials in A^5, B^5",
                      60, identities.verify_eisenstein_parameterizations, ("eisenstein",)),
        RegistryEntry("discriminant-forms", "the discriminant from A^5 B^5",
                      60, identities.verify_discriminant_forms, ("eisenstein",)),
        RegistryEntry("eisenstein-roots", "pentamidiated E_4 and E_6",
                      10, identities.verify_eisenstein_roots, ("eisenstein",)),
        RegistryEntry("elliptic-parameters", "elliptic parameters at 1/5 and 2/5",
                      40, identities.verify_elliptic_parameters, ("eisenstein",)),
        RegistryEntry("elliptic-system", "differential system for the elliptic parameters",
                      40, identities.verify_elliptic_system, ("eisenstein", "dynamics")),
        RegistryEntry("weight-one-products", "chi4 divisor sums by residue as eta products",
                      60, identities.verify_weight_one_products, ("eisenstein",)),
        RegistryEntry("residue-classes", "Eisenstein coefficients split by residue class",
                      40, identities.verify_residue_classes, ("eisenstein",)),
        RegistryEntry("quotient-fifth-power", "E_2,chi3 / L_2,chi3 under pentamidiation",
                      30, identities.verify_quotient_fifth_power, ("eisenstein",)),
        # partitions and tau
        RegistryEntry("partition-dissection", "generating functions for p(5n + r)",
                      60, partitions.verify_dissection_5_1, ("partitions",)),
        RegistryEntry("partition-25n+24", "Ramanujan's expansion for p(25n + 24)",
                      60, lambda order: partitions.verify_p25(order, min(order, 40)), ("partitions",)),
        RegistryEntry("partition-5^2", "partition classes modulo 25",
                      15, lambda order: partitions.verify_nm1(2, order), ("partitions",)),
        RegistryEntry("multipartition-dissections", "dissections of (q;q)^k for small k",
                      60, partitions.verify_pminus_family, ("partitions",)),
        RegistryEntry("watson-modular-eq", "Watson's modular equation of degree five",
                      100, partitions.verify_watson, ("partitions",)),
        RegistryEntry("congruence-scans", "multipartition congruences and conjecture support",
                      200, lambda order: partitions.verify_congruences(None), ("partitions", "scan")),
        RegistryEntry("tau-multisection", "tau(5m) as a degree 12 polynomial",
                      40, lambda order: partitions.tau_multisection(1, order), ("partitions", "tau")),
        RegistryEntry("tau-multisection-25", "tau(25m) from two multisections, divisible by 25",
                      30, lambda order: partitions.tau_multisection(2, order), ("partitions", "tau")),
        RegistryEntry("tau-classes", "tau(5n + r) as polynomials in A, B",
                      20, identities.verify_tau_classes, ("partitions", "tau")),
        RegistryEntry("five-cores", "5-core counts under multisection",
                      60, lambda order: partitions.five_core_check(1, order), ("partitions",)),
        RegistryEntry("five-cores-25", "5-core counts under two multisections",
                      40, lambda order: partitions.five_core_check(2, order), ("partitions",)),
        # differential equations
        RegistryEntry("quintic-ode", "coupled differential system for A, B and E_2(q^5)",
                      100, dynamics.verify_quintic_ode, ("dynamics",)),
        RegistryEntry("t-system", "first-order system for t_1 ... t_6",
                      80, dynamics.verify_t_system, ("dynamics",)),
        RegistryEntry("e2-forms", "E_2 and logarithmic derivatives in A and B",
                      80, dynamics.verify_e2_forms, ("dynamics",)),
        RegistryEntry("kaneko-ode", "Kaneko's equation for forms of weight (6n+1)/5",
                      40, dynamics.verify_kaneko_ode, ("dynamics",)),
        RegistryEntry("kaneko-recursion", "five-step recurrence and the icosian Schwarzian",
                      30, dynamics.verify_kaneko_recursion, ("dynamics",)),
        # numerics
        RegistryEntry("fricke", "Fricke involution on A, B and C, D",
                      80, numeric.verify_fricke, ("numeric",)),
        RegistryEntry("fuls", "continued fraction under the Fricke involution",
                      80, numeric.fuls_check, ("numeric",)),
    ]


REGISTRY: dict[str, RegistryEntry] = {entry.name: entry for entry in _entries()}


def registry_names() -> list[str]:
    return sorted(REGISTRY)


def get_entry(name: str) -> RegistryEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise RegistryError(f"unknown identity {name!r}; run 'quintic-theta list'") from None


def list_registry() -> list[dict]:
    """Registry listing as ``[{name, anchor, default_order}]``, sorted by name."""
    return [REGISTRY[name].to_json() for name in registry_names()]


def resolve_names(names: list[str] | None) -> list[str]:
    """Expand ``all`` (or an empty selection) and reject unknown names."""
    if not names or "all" in names:
        return registry_names()
    for name in names:
        get_entry(name)
    return sorted(set(names))


def verify_registry(name: str, order: int | None = None) -> IdentityReport:
    """Run one registry entry at *order* (its default order when omitted)."""
    entry = get_entry(name)
    logger.debug("verifying %s to order %s", name, order or entry.default_order)
    return entry.run(order)
