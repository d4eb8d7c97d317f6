"""Exact truncated power series and polynomials with integer coefficients.

Coefficients are Python ints, so nothing can overflow.  Both types are
immutable; every operation returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from circleweights.errors import InvalidWeightError, TruncationMismatchError


def _convolve(a: Sequence[int], b: Sequence[int], limit: int | None = None) -> list[int]:
    """Integer convolution of ``a`` and ``b``, optionally keeping indices <= limit."""
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if limit is not None:
        size = min(size, limit + 1)
    # factors here are mostly sparse; loop over nonzeros of the sparser side
    sa = [(i, x) for i, x in enumerate(a[:size]) if x]
    sb = [(j, y) for j, y in enumerate(b[:size]) if y]
    if len(sa) < len(sb):
        sa, sb = sb, sa
    out = [0] * size
    for j, y in sb:
        for i, x in sa:
            k = i + j
            if k >= size:
                break
            out[k] += x * y
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series c_0 + c_1 t + ... + c_W t^W, truncated at order W."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"truncation order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int) -> TruncatedSeries:
        """Build a series of the given order, padding with zeros or truncating."""
        c = [int(x) for x in coeffs][: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        return cls(order, tuple(c))

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls(order, (0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls(order, (1,) + (0,) * order)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise TruncationMismatchError(
                f"cannot extend a series of order {self.order} to {order}"
            )
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def _check(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise TruncationMismatchError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(
            self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(
            self.order, tuple(x - y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, tuple(-x for x in self.coeffs))

    def scale(self, c: int) -> TruncatedSeries:
        return TruncatedSeries(self.order, tuple(c * x for x in self.coeffs))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)


@dataclass(frozen=True)
class ExactPolynomial:
    """Integer polynomial, coefficient of t^k at index k.

    The canonical form has no trailing zeros; the zero polynomial is the
    empty tuple, so structural equality is polynomial equality.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficients have trailing zeros; use ExactPolynomial.of")

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> ExactPolynomial:
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> ExactPolynomial:
        return cls.of([0] * degree + [coeff])

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: ExactPolynomial) -> ExactPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] += y
        return ExactPolynomial.of(out)

    def __neg__(self) -> ExactPolynomial:
        return ExactPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: ExactPolynomial) -> ExactPolynomial:
        return self + (-other)

    def scale(self, c: int) -> ExactPolynomial:
        return ExactPolynomial.of(c * x for x in self.coeffs)

    def __mul__(self, other: ExactPolynomial) -> ExactPolynomial:
        return poly_mul(self, other)

    def to_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs(self.coeffs, order)


def geometric_factor(w: int, order: int) -> TruncatedSeries:
    """Expansion of (1 + t^w)/(1 - t^w) = 1 + 2(t^w + t^2w + ...) up to t^order."""
    if isinstance(w, bool) or not isinstance(w, int) or w < 1:
        raise InvalidWeightError(f"weight must be a positive integer, got {w!r}")
    if order < 0:
        raise ValueError(f"truncation order must be >= 0, got {order}")
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(w, order + 1, w):
        c[k] = 2
    return TruncatedSeries(order, tuple(c))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product of two series of equal truncation order."""
    a._check(b)
    return TruncatedSeries.from_coeffs(_convolve(a.coeffs, b.coeffs, a.order), a.order)


def poly_mul(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    return ExactPolynomial.of(_convolve(a.coeffs, b.coeffs))
