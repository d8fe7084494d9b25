"""Truncated matrix-valued Laurent series with pessimistic precision.

A series stores coefficients for exponents valuation..trunc in one local
coordinate w. Coefficients above trunc are unknown and never assumed zero;
coefficients below valuation are exactly zero. The stored coefficient at
the valuation itself may be zero (valuation is a storage bound, not the
exact order).

Coordinate convention, fixed artifact-wide: at a weak singularity located
at z_s the local coordinate is w = z - z_s; at the puncture z = 0 it is
w = z; at the puncture z = infinity it is w = 1/z.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InsufficientPrecision, SizeMismatch
from .linalg import Matrix
from .scalars import GR_ZERO


@dataclass(frozen=True)
class MatrixLaurentSeries:
    size: int
    valuation: int
    trunc: int
    coeffs: tuple  # Matrix for each exponent valuation..trunc

    def __post_init__(self):
        if self.trunc < self.valuation:
            raise ValueError("trunc below valuation")
        if len(self.coeffs) != self.trunc - self.valuation + 1:
            raise ValueError("coefficient count does not match exponent range")
        for c in self.coeffs:
            if c.rows != self.size or c.cols != self.size:
                raise SizeMismatch("coefficient matrix has wrong size")

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, size, valuation, trunc):
        n = trunc - valuation + 1
        return cls(size, valuation, trunc, tuple(Matrix.zeros(size) for _ in range(n)))

    @classmethod
    def from_terms(cls, size, terms, trunc, valuation=None):
        """Series with the given {exponent: Matrix} terms, exact up to trunc."""
        if valuation is None:
            valuation = min(terms) if terms else 0
        valuation = min(valuation, trunc)
        coeffs = []
        for k in range(valuation, trunc + 1):
            coeffs.append(terms.get(k, Matrix.zeros(size)))
        return cls(size, valuation, trunc, tuple(coeffs))

    def coeff(self, k) -> Matrix:
        """Coefficient at exponent k; exact zero below valuation."""
        if k > self.trunc:
            raise InsufficientPrecision(
                f"coefficient at exponent {k} requested, series exact only up to {self.trunc}"
            )
        if k < self.valuation:
            return Matrix.zeros(self.size)
        return self.coeffs[k - self.valuation]

    def exact_order(self):
        """First exponent with a nonzero coefficient, or None if the
        series is zero through trunc."""
        for k in range(self.valuation, self.trunc + 1):
            if not self.coeffs[k - self.valuation].is_zero():
                return k
        return None

    def truncate(self, trunc) -> MatrixLaurentSeries:
        if trunc > self.trunc:
            raise InsufficientPrecision("cannot extend precision by truncation")
        v = min(self.valuation, trunc)
        return MatrixLaurentSeries(
            self.size, v, trunc, tuple(self.coeff(k) for k in range(v, trunc + 1))
        )

    def is_zero_through_trunc(self) -> bool:
        return self.exact_order() is None

    # -- arithmetic --------------------------------------------------------

    def _check_size(self, other):
        if self.size != other.size:
            raise SizeMismatch(f"series sizes {self.size} vs {other.size}")

    def __add__(self, other):
        self._check_size(other)
        v = min(self.valuation, other.valuation)
        t = min(self.trunc, other.trunc)
        return MatrixLaurentSeries(
            self.size, v, t, tuple(self.coeff(k) + other.coeff(k) for k in range(v, t + 1))
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MatrixLaurentSeries(
            self.size, self.valuation, self.trunc, tuple(-c for c in self.coeffs)
        )

    def scale(self, scalar) -> MatrixLaurentSeries:
        return MatrixLaurentSeries(
            self.size, self.valuation, self.trunc, tuple(c * scalar for c in self.coeffs)
        )

    def __mul__(self, other):
        """Cauchy product; coefficient order matters (matrix product).

        Precision: valuation v1+v2, trunc min(v1+T2, v2+T1), the standard
        pessimistic rule. Never fabricates coefficients beyond trunc.
        """
        self._check_size(other)
        v = self.valuation + other.valuation
        t = min(self.valuation + other.trunc, other.valuation + self.trunc)
        coeffs = []
        for k in range(v, t + 1):
            acc = Matrix.zeros(self.size)
            lo = max(self.valuation, k - other.trunc)
            hi = min(self.trunc, k - other.valuation)
            for i in range(lo, hi + 1):
                acc = acc + (self.coeff(i) @ other.coeff(k - i))
            coeffs.append(acc)
        return MatrixLaurentSeries(self.size, v, t, tuple(coeffs))

    def bracket(self, other) -> MatrixLaurentSeries:
        return self * other - other * self

    def derivative(self) -> MatrixLaurentSeries:
        """Termwise d/dw: k -> k * coeff(k) at exponent k-1."""
        coeffs = tuple(
            self.coeffs[k - self.valuation] * k
            for k in range(self.valuation, self.trunc + 1)
        )
        return MatrixLaurentSeries(self.size, self.valuation - 1, self.trunc - 1, coeffs)

    def trace_coeff(self, k):
        return self.coeff(k).trace()


def residue_trace_pairing(a, b, use_derivative=False):
    """Coefficient of w^-1 of tr(a*b) or tr(a*db), the local residue pairing.

    b is read as the coefficient of a 1-form b*dw when use_derivative is
    false. Raises InsufficientPrecision if the product's guaranteed range
    does not reach exponent -1.
    """
    a._check_size(b)
    if use_derivative:
        b = b.derivative()
    prod = a * b
    if prod.trunc < -1:
        raise InsufficientPrecision(
            f"product exact only up to exponent {prod.trunc}, residue needs -1"
        )
    return prod.coeff(-1).trace()
