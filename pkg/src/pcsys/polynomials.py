"""Exact univariate polynomials over the rationals, and polynomial matrices.

Coefficients are `Fraction`s, constant term first, no trailing zeros stored.
Determinants use fraction-free (Bareiss) elimination over the polynomial
ring; the intermediate divisions are exact by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AlgebraError


def _strip(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Fraction, ...]  # constant term first; () is the zero polynomial

    @staticmethod
    def of(coeffs: Sequence) -> "Polynomial":
        return Polynomial(_strip([Fraction(c) for c in coeffs]))

    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial.of([c])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(_strip([self[k] + other[k] for k in range(n)]))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(_strip([self[k] - other[k] for k in range(n)]))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(_strip(out))

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(_strip([c * a for a in self.coeffs]))

    def __call__(self, z):
        """Horner evaluation; exact for Fraction arguments, float otherwise."""
        acc = 0 if not isinstance(z, Fraction) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + (c if isinstance(z, Fraction) else float(c))
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(_strip([k * c for k, c in enumerate(self.coeffs)][1:]))

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise AlgebraError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and any(rem):
            if rem[-1] == 0:
                rem.pop()
                continue
            k = len(rem) - 1 - d
            q = rem[-1] / lead
            quo[k] = q
            for j in range(d + 1):
                rem[k + j] -= q * other.coeffs[j]
            rem.pop()
        return Polynomial(_strip(quo)), Polynomial(_strip(rem))

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise AlgebraError("polynomial division was expected to be exact")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.coeffs[-1])

    def to_json(self) -> list[str]:
        """Coefficient array of exact strings, constant term first."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(coeffs: Sequence[str]) -> "Polynomial":
        return Polynomial.of([Fraction(c) for c in coeffs])

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                parts.append(f"{c}*{mono}" if abs(c) != 1 else ("-" + mono if c < 0 else mono))
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Polynomial(())
ONE = Polynomial.of([1])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero else a


PolyMatrix = list  # list[list[Polynomial]], square


def identity_matrix(n: int) -> PolyMatrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def det(matrix: PolyMatrix) -> Polynomial:
    """Determinant by fraction-free Bareiss elimination over the
    polynomial ring, with row/column pivoting."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise AlgebraError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    m = [[entry for entry in row] for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero:
            # find any nonzero pivot in the remaining block
            found = False
            for i in range(k, n):
                for j in range(k, n):
                    if not m[i][j].is_zero:
                        if i != k:
                            m[k], m[i] = m[i], m[k]
                            sign = -sign
                        if j != k:
                            for row in m:
                                row[k], row[j] = row[j], row[k]
                            sign = -sign
                        found = True
                        break
                if found:
                    break
            if not found:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = ZERO
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return result if sign == 1 else -result


def series_inverse_coeffs(coeff_matrices: Sequence, n: int) -> list:
    """Truncated power-series inverse of a matrix polynomial given by its
    coefficient matrices M_0, M_1, ...; requires M_0 = Id.

    Returns G_0..G_n (nested lists of Fractions) with
    sum_j G_j M_{k-j} = delta_{k0} Id.
    """
    if not coeff_matrices:
        raise AlgebraError("empty coefficient list")
    dim = len(coeff_matrices[0])
    ident = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    if coeff_matrices[0] != ident:
        raise AlgebraError("matrix series must start with the identity")

    def mat(k):
        if k < len(coeff_matrices):
            return coeff_matrices[k]
        return [[Fraction(0)] * dim for _ in range(dim)]

    def mul(a, b):
        return [
            [sum(a[i][t] * b[t][j] for t in range(dim)) for j in range(dim)]
            for i in range(dim)
        ]

    out = [ident]
    for k in range(1, n + 1):
        acc = [[Fraction(0)] * dim for _ in range(dim)]
        for j in range(k):
            prod = mul(out[j], mat(k - j))
            for i in range(dim):
                for t in range(dim):
                    acc[i][t] += prod[i][t]
        out.append([[-acc[i][j] for j in range(dim)] for i in range(dim)])
    return out


def matrix_coefficients(matrix: PolyMatrix) -> list:
    """Coefficient matrices M_0, M_1, ... of a polynomial matrix."""
    top = max((entry.degree for row in matrix for entry in row), default=0)
    top = max(top, 0)
    dim = len(matrix)
    return [
        [[matrix[i][j][k] for j in range(dim)] for i in range(dim)]
        for k in range(top + 1)
    ]
