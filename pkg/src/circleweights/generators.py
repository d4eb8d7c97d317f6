"""Fixed-point data of standard circle actions, and ways to combine them."""

from __future__ import annotations

from typing import Sequence

from circleweights.errors import InvalidWeightError
from circleweights.model import Dataset, FixedPoint


def sphere(weights: Sequence[int]) -> Dataset:
    """Rotation of S^2n with the given speeds: two poles of opposite sign."""
    ws = tuple(weights)
    if not ws:
        raise InvalidWeightError("sphere needs at least one weight")
    if any(isinstance(w, bool) or not isinstance(w, int) or w < 1 for w in ws):
        raise InvalidWeightError(f"weights must be positive integers, got {list(ws)}")
    return Dataset(len(ws), (FixedPoint("p0", 1, ws), FixedPoint("p1", -1, ws)))


def complex_projective(n: int, a: Sequence[int]) -> Dataset:
    """The action t.[z_0:...:z_n] = [t^a_0 z_0 : ... : t^a_n z_n] on CP^n.

    Fixed point p_k is the k-th coordinate point, with complex weights
    a_j - a_k.  Making every weight positive reverses one complex line per
    a_j < a_k; the sign is (-1)^#{j : a_j > a_k}, which differs from that
    count's parity only by a global orientation choice (for increasing a,
    point k gets (-1)^(n-k)).  Weights are listed in ascending order.
    """
    a = [int(x) for x in a]
    if n < 1 or len(a) != n + 1:
        raise ValueError(f"need n >= 1 and n + 1 = {n + 1} exponents, got {len(a)}")
    if len(set(a)) != len(a):
        raise ValueError(f"exponents {a} repeat; the fixed points would not be isolated")
    points = []
    for k, ak in enumerate(a):
        ws = sorted(abs(aj - ak) for j, aj in enumerate(a) if j != k)
        above = sum(1 for aj in a if aj > ak)
        points.append(FixedPoint(f"p{k}", (-1) ** above, tuple(ws)))
    return Dataset(n, tuple(points))


def product(d1: Dataset, d2: Dataset) -> Dataset:
    """Diagonal action on M1 x M2; the point (p, q) gets id ``"(p|q)"``."""
    points = tuple(
        FixedPoint(f"({p.id}|{q.id})", p.sign * q.sign, p.weights + q.weights)
        for p in d1.points
        for q in d2.points
    )
    return Dataset(d1.n + d2.n, points)


def reverse_orientation(d: Dataset) -> Dataset:
    return Dataset(d.n, tuple(FixedPoint(p.id, -p.sign, p.weights) for p in d.points))
