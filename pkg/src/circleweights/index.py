"""The Atiyah-Singer signature expression of a fixed-point dataset.

For a dataset the expression is

    sum over points p of  sign(p) * prod_i (1 + t^w_pi) / (1 - t^w_pi)

and it is a constant (the signature) whenever the data comes from an
actual manifold.  Each factor expands as 1 + 2(t^w + t^2w + ...), which
is how the truncated-series functions below evaluate it.

Constancy is decided exactly.  Points with equal weight multisets are
merged first (their terms differ only by sign).  Over the common
denominator D = product of (1 - t^w) over the slots of one point per
multiset, the expression is N/D with deg N, deg D <= W*, W* being the sum
of all weights.  Hence the expression equals the constant
c = sum of signs iff N = c*D, and, equivalently, iff its power series has
vanishing coefficients at orders 1..W* (N - cD has degree <= W* and D is
invertible as a power series).  :func:`exact_constancy` evaluates both
and insists they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from circleweights.errors import InconsistentDataError
from circleweights.model import Dataset, FixedPoint
from circleweights.series import ExactPolynomial, TruncatedSeries, geometric_factor


@dataclass(frozen=True)
class ConstancyVerdict:
    is_constant: bool
    constant_value: int | None
    first_failing_order: int | None

    def __post_init__(self):
        if self.is_constant != (self.first_failing_order is None):
            raise ValueError("is_constant must hold exactly when there is no failing order")


def default_order(d: Dataset) -> int:
    """W*: the sum of all weights, enough to decide constancy."""
    return d.weight_sum()


def contribution_series(p: FixedPoint, order: int) -> TruncatedSeries:
    """sign(p) * prod_i (1 + 2 sum_j t^(j w_pi)), truncated at ``order``."""
    s = TruncatedSeries.one(order)
    for w in p.weights:
        s = s * geometric_factor(w, order)
    return s.scale(p.sign)


def grouped_terms(d: Dataset) -> list[tuple[tuple[int, ...], int]]:
    """(sorted weights, summed sign) for each distinct weight multiset, dropping zero sums.

    Points with equal weight multisets contribute equal rational terms, so
    the expression is the sum of these groups.
    """
    groups: dict[tuple[int, ...], int] = {}
    for p in d.points:
        key = tuple(sorted(p.weights))
        groups[key] = groups.get(key, 0) + p.sign
    return [(ws, e) for ws, e in sorted(groups.items()) if e]


def signature_series(d: Dataset, order: int | None = None) -> TruncatedSeries:
    """Sum of the contributions of all points; ``order`` defaults to W*."""
    if order is None:
        order = default_order(d)
    total = TruncatedSeries.zero(order)
    for ws, e in grouped_terms(d):
        total = total + contribution_series(FixedPoint("", 1, ws), order).scale(e)
    return total


def exponent_combinations(weights: Sequence[int], w: int) -> Iterator[tuple[int, ...]]:
    """All (j_1..j_n) >= 0 with sum j_i * weights[i] == w, in lexicographic order."""
    n = len(weights)
    if n == 0:
        if w == 0:
            yield ()
        return
    js = [0] * n

    def rec(i: int, rem: int):
        wi = weights[i]
        if i == n - 1:
            if rem % wi == 0:
                js[i] = rem // wi
                yield tuple(js)
            return
        for j in range(rem // wi + 1):
            js[i] = j
            yield from rec(i + 1, rem - j * wi)

    yield from rec(0, w)


def coefficient_terms(p: FixedPoint, w: int) -> list[tuple[tuple[int, ...], int]]:
    """Each exponent combination for t^w at ``p`` with its term sign(p) * 2^m.

    m is the number of positive exponents in the combination.
    """
    return [(js, p.sign * 2 ** sum(1 for j in js if j > 0))
            for js in exponent_combinations(p.weights, w)]


def closed_form_coefficient(p: FixedPoint, w: int) -> int:
    """Coefficient of t^w in the contribution of ``p``, by enumerating combinations."""
    if w < 1:
        raise ValueError(f"w must be >= 1, got {w}")
    total = 0
    for js in exponent_combinations(p.weights, w):
        m = 0
        for j in js:
            if j:
                m += 1
        total += 1 << m
    return p.sign * total


def _poly_binomial(w: int, sign: int) -> ExactPolynomial:
    """1 + sign * t^w."""
    return ExactPolynomial.of([1] + [0] * (w - 1) + [sign])


def _product(polys: Sequence[ExactPolynomial]) -> ExactPolynomial:
    out = ExactPolynomial.of([1])
    for f in polys:
        out = out * f
    return out


def constancy_numerator(d: Dataset) -> tuple[ExactPolynomial, ExactPolynomial]:
    """(N, D) with the signature expression equal to N/D.

    Over the groups of :func:`grouped_terms` (weights ws, summed sign e),
    D = prod_g prod_{w in ws_g} (1 - t^w) and
    N = sum_g e_g prod_{w in ws_g} (1 + t^w) prod_{h != g} prod_{w in ws_h} (1 - t^w).
    D divides the product over all slots, so deg N, deg D <= W* still.
    """
    groups = grouped_terms(d)
    dens = [_product([_poly_binomial(w, -1) for w in ws]) for ws, _ in groups]
    k = len(dens)
    # prefix[i] = dens[0..i-1], suffix[i] = dens[i..k-1]
    prefix = [ExactPolynomial.of([1])]
    for f in dens:
        prefix.append(prefix[-1] * f)
    suffix = [ExactPolynomial.of([1])]
    for f in reversed(dens):
        suffix.append(suffix[-1] * f)
    suffix.reverse()
    num = ExactPolynomial()
    for i, (ws, e) in enumerate(groups):
        nums = _product([_poly_binomial(w, 1) for w in ws])
        num = num + (nums * prefix[i] * suffix[i + 1]).scale(e)
    return num, prefix[-1]


def constant_by_polynomials(d: Dataset) -> bool:
    """Whether N == c*D exactly, with c the sum of signs."""
    num, den = constancy_numerator(d)
    return num == den.scale(d.sign_sum())


def first_nonzero_order(d: Dataset, order: int | None = None) -> int | None:
    """Smallest k in 1..order with a nonzero t^k coefficient, or None."""
    s = signature_series(d, order)
    for k in range(1, s.order + 1):
        if s[k]:
            return k
    return None


def exact_constancy(d: Dataset) -> ConstancyVerdict:
    """Decide whether the signature expression of ``d`` is a constant."""
    by_poly = constant_by_polynomials(d)
    failing = first_nonzero_order(d)
    if by_poly != (failing is None):
        raise AssertionError(
            f"constancy branches disagree: polynomial={by_poly}, series failing order={failing}"
        )
    if by_poly:
        return ConstancyVerdict(True, d.sign_sum(), None)
    return ConstancyVerdict(False, None, failing)


def signature(d: Dataset) -> int:
    """The signature: the constant value of the expression.

    Raises InconsistentDataError if the expression is not constant.
    """
    verdict = exact_constancy(d)
    if not verdict.is_constant:
        raise InconsistentDataError(verdict.first_failing_order)
    return verdict.constant_value
