"""The uniform measure of an irreducible concurrent system.

The construction: take the characteristic root r, evaluate the Mobius
matrix at r (singular there), extract the one-dimensional kernel vector v,
and set f_alpha(x) = r^|x| * v_{alpha . x} / v_alpha.  When r is rational
the whole computation stays in exact arithmetic; otherwise the kernel is
taken by SVD at the bisected root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AlgebraError, ValidationError
from .policy import DEFAULT_POLICY, NumericPolicy
from .roots import kernel_vector_exact, kernel_vector_float
from .system import ConcurrentSystem
from .traces import Trace
from .valuation import Valuation


@dataclass(frozen=True)
class UniformMeasure:
    system: ConcurrentSystem
    root: object            # Fraction when exact, float otherwise
    exact: bool
    kernel: tuple          # v indexed like system.states
    valuation: Valuation

    def cocycle(self, alpha: str, beta: str):
        """Parry cocycle v_beta / v_alpha."""
        i = self.system.states.index(alpha)
        j = self.system.states.index(beta)
        return self.kernel[j] / self.kernel[i]

    def trace_weight(self, alpha: str, x: Trace):
        """f_alpha(x) = r^|x| Gamma(alpha, alpha.x); 0 past the sink."""
        beta = self.system.act(alpha, x)
        if beta is None:
            return 0
        return self.root ** x.length * self.cocycle(alpha, beta)


def uniform_measure(
    system: ConcurrentSystem, policy: NumericPolicy = DEFAULT_POLICY
) -> UniformMeasure:
    cls = system.classify()
    if not cls.irreducible:
        raise ValidationError(
            "uniform measure requires an irreducible system",
            witness=cls.to_json(),
        )
    root = system.characteristic_root(policy)
    if not root.found:
        raise ValidationError("characteristic root is infinite, no uniform measure")
    mu = system.mobius_matrix()
    if root.exact:
        r = root.value
        matrix = [[entry(r) for entry in row] for row in mu]
        kernel = kernel_vector_exact(matrix)
    else:
        r = root.as_float()
        matrix = [[entry(r) for entry in row] for row in mu]
        kernel = kernel_vector_float(matrix, policy)
    if any(v == 0 for v in kernel) or not (
        all(v > 0 for v in kernel) or all(v < 0 for v in kernel)
    ):
        raise AlgebraError("kernel vector is not strictly one-signed")
    if kernel[0] < 0:
        kernel = [-v for v in kernel]
    weights = {}
    for (alpha, a), beta in system.action.items():
        i = system.states.index(alpha)
        j = system.states.index(beta)
        weights[(alpha, a)] = r * kernel[j] / kernel[i]
    valuation = Valuation(system, weights, policy)
    valuation.require_probabilistic()
    return UniformMeasure(system, r, root.exact, tuple(kernel), valuation)
