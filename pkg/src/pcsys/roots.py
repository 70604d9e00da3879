"""Root isolation and kernel extraction for the characteristic machinery.

The characteristic polynomial has exact rational coefficients, so the
smallest root in (0, 1] is isolated with a Sturm sequence and then narrowed
by dyadic bisection; rational candidates (from the integer-cleared leading
and constant coefficients) inside the final bracket are snapped to exactly.

Kernel vectors of a rational matrix are computed exactly by Gaussian
elimination when the evaluation point is rational, and by SVD otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import AlgebraError
from .policy import DEFAULT_POLICY, NumericPolicy
from .polynomials import Polynomial


@dataclass(frozen=True)
class RootResult:
    """Smallest root of a polynomial in (0, 1], if any.

    value is a Fraction for exact (rational) roots and a float otherwise;
    bracket is the final isolating interval (lo, hi] with hi - lo below the
    policy width.  value=None means no root in (0, 1].
    """

    value: object | None
    exact: bool
    bracket: tuple[Fraction, Fraction] | None
    multiplicity: int = 0
    residual_bound: float = 0.0

    @property
    def found(self) -> bool:
        return self.value is not None

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def as_float(self) -> float:
        if self.value is None:
            raise AlgebraError("no root to convert")
        return float(self.value)


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero:
        rem = seq[-2].divmod(seq[-1])[1]
        seq.append(-rem)
    seq.pop()
    return seq


def _sign_changes(seq: Sequence[Polynomial], x: Fraction) -> int:
    signs = []
    for q in seq:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    from .polynomials import poly_gcd

    if p.is_zero:
        raise AlgebraError("root count of the zero polynomial")
    sf = p.exact_div(poly_gcd(p, p.derivative())) if p.degree > 0 else p
    if sf.degree <= 0:
        return 0
    seq = sturm_sequence(sf)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def _rational_candidates(p: Polynomial) -> list[Fraction]:
    """Candidate rational roots num/den with num | constant, den | leading,
    after clearing denominators."""
    from math import gcd, lcm

    denom = lcm(*[c.denominator for c in p.coeffs])
    ints = [int(c * denom) for c in p.coeffs]
    while ints and ints[0] == 0:
        ints = ints[1:]
    if not ints:
        return []
    c0, ck = abs(ints[0]), abs(ints[-1])

    def divisors(v: int) -> list[int]:
        out = [d for d in range(1, int(v ** 0.5) + 1) if v % d == 0]
        return out + [v // d for d in out]

    return sorted({Fraction(n, d) for n in divisors(c0) for d in divisors(ck)})


def multiplicity(p: Polynomial, r: Fraction) -> int:
    k = 0
    while not p.is_zero and p(r) == 0:
        k += 1
        p = p.derivative()
    return k


def smallest_positive_root(
    p: Polynomial, policy: NumericPolicy = DEFAULT_POLICY, upper: Fraction = Fraction(1)
) -> RootResult:
    """Smallest root of p in (0, upper], exact when rational.

    The bracket is maintained as (lo, hi] with exactly one distinct root of
    the square-free part inside, halved until the policy width is reached;
    rational candidates falling in the final bracket give an exact answer.
    """
    if p.is_zero:
        raise AlgebraError("root of the zero polynomial requested")
    if p.degree <= 0:
        return RootResult(None, True, None)
    from .polynomials import poly_gcd

    sf = p.exact_div(poly_gcd(p, p.derivative()))
    seq = sturm_sequence(sf)
    lo, hi = Fraction(0), Fraction(upper)
    if _sign_changes(seq, lo) - _sign_changes(seq, hi) == 0:
        return RootResult(None, True, None)
    # keep the leftmost root only
    changes_lo = _sign_changes(seq, lo)
    while hi - lo > policy.root_width:
        mid = (lo + hi) / 2
        if p(mid) == 0:
            return RootResult(mid, True, (lo, hi), multiplicity(p, mid))
        if changes_lo - _sign_changes(seq, mid) > 0:
            hi = mid
        else:
            lo = mid
            changes_lo = _sign_changes(seq, mid)
    for cand in _rational_candidates(p):
        if lo < cand <= hi and p(cand) == 0:
            return RootResult(cand, True, (lo, hi), multiplicity(p, cand))
    approx = float(lo + hi) / 2
    # simple-root assumption for the float report is checked by the caller
    return RootResult(approx, False, (lo, hi), 1, abs(p(approx)))


def companion_smallest_modulus(p: Polynomial) -> complex:
    """Smallest-modulus root via the companion matrix, as a cross-check."""
    coeffs = [float(c) for c in reversed(p.coeffs)]
    roots = np.roots(coeffs)
    return complex(min(roots, key=abs))


def validate_smallest_modulus(p: Polynomial, result: RootResult, tol: float = 1e-6) -> bool:
    """Cross-check that no complex root beats the reported one in modulus.
    Informative only: callers report disagreement instead of failing."""
    if not result.found or p.degree <= 0:
        return True
    return abs(companion_smallest_modulus(p)) >= result.as_float() - tol


def kernel_vector_float(matrix: Sequence[Sequence[float]], policy: NumericPolicy = DEFAULT_POLICY) -> list[float]:
    """Kernel vector of a singular real matrix via SVD; requires a
    one-dimensional kernel at the policy tolerance."""
    arr = np.asarray(matrix, dtype=float)
    _, s, vt = np.linalg.svd(arr)
    small = int(np.sum(s <= policy.kernel_tol * max(1.0, s[0])))
    if small != 1:
        raise AlgebraError(f"kernel dimension {small}, expected 1")
    v = vt[-1]
    # sign convention: first nonzero coordinate positive
    pivot = next(x for x in v if abs(x) > policy.kernel_tol)
    if pivot < 0:
        v = -v
    return [float(x) for x in v]


kernel_vector = kernel_vector_float


def kernel_vector_exact(matrix: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Kernel vector of a singular rational matrix by exact elimination;
    requires a one-dimensional kernel."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, n) if m[r][col] != 0), None)
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise AlgebraError(f"kernel dimension {len(free)}, expected 1")
    fc = free[0]
    v = [Fraction(0)] * n
    v[fc] = Fraction(1)
    for r, pc in enumerate(pivots):
        v[pc] = -m[r][fc]
    pivot = next(x for x in v if x != 0)
    if pivot < 0:
        v = [-x for x in v]
    return v
