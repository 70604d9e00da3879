"""Deterministic analysis reports aggregating the package's computations.

One entry point builds a JSON-ready dictionary for a system: classification,
Mobius matrix and characteristic polynomial, characteristic root, and on
request the uniform-measure block, the deterministic-system report, the
spectral table, and growth matrices up to a given order.  Every number is
rendered as a 17-significant-digit decimal, with the exact fraction kept
alongside whenever the value is rational.
"""

from __future__ import annotations

from fractions import Fraction

from .chain import null_nodes
from .dcs import dcs_report
from .errors import PcsError
from .jsonio import SCHEMA_VERSION
from .measure import uniform_measure
from .policy import DEFAULT_POLICY, NumericPolicy
from .roots import RootResult, validate_smallest_modulus
from .system import ConcurrentSystem


def render_number(value) -> dict:
    """Decimal rendering plus the exact form when one exists."""
    out = {"decimal": format(float(value), ".17g")}
    if isinstance(value, (Fraction, int)):
        out["exact"] = str(value)
    return out


def render_root(root: RootResult) -> dict:
    if root.is_infinity:
        return {"is_infinity": True}
    out = {"is_infinity": False, **render_number(root.value)}
    out["exact_rational"] = root.exact
    out["multiplicity"] = root.multiplicity
    if root.bracket:
        lo, hi = root.bracket
        out["bracket"] = [format(float(lo), ".17g"), format(float(hi), ".17g")]
    return out


def _node_json(node) -> list:
    alpha, c = node
    return [alpha, list(c)]


def analysis_report(
    system: ConcurrentSystem,
    uniform: bool = False,
    dcs: bool = False,
    spectral: bool = False,
    order: int = 0,
    policy: NumericPolicy = DEFAULT_POLICY,
) -> dict:
    mu = system.mobius_matrix()
    theta = system.characteristic_polynomial()
    root = system.characteristic_root(policy)
    report = {
        "schema_version": SCHEMA_VERSION,
        "states": list(system.states),
        "alphabet": list(system.monoid.letters),
        "classification": system.classify().to_json(),
        "mobius_matrix": [[entry.to_json() for entry in row] for row in mu],
        "characteristic_polynomial": theta.to_json(),
        "characteristic_root": render_root(root),
        "smallest_modulus_validated": validate_smallest_modulus(theta, root),
    }
    if order > 0:
        report["growth_matrices"] = system.growth_matrix_counts(order)
    if uniform:
        try:
            um = uniform_measure(system, policy)
            states = system.states
            report["uniform"] = {
                "root": render_number(um.root),
                "exact": um.exact,
                "kernel": {alpha: render_number(v) for alpha, v in zip(states, um.kernel)},
                "cocycle": {
                    f"{a}->{b}": render_number(um.cocycle(a, b))
                    for a in states
                    for b in states
                },
                "first_clique_laws": {
                    alpha: {
                        ",".join(c): render_number(p)
                        for c, p in um.valuation.first_clique_distribution(alpha).items()
                    }
                    for alpha in states
                },
                "null_nodes": [
                    _node_json(n) for n in null_nodes(system, um.valuation)
                ],
            }
        except PcsError as exc:
            report["uniform"] = {"error": str(exc)}
    if dcs:
        report["dcs"] = dcs_report(system).to_json()
    if spectral:
        report["spectral"] = system.spectral_check(policy)
    return report
