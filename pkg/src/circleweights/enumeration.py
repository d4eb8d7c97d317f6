"""Exhaustive search for consistent fixed-point datasets with small parameters.

A search space fixes the half-dimension n, the number of fixed points k
and a bound B on the weights.  Each point is one of the 2 * C(B+n-1, n)
choices of a sign and a sorted weight multiset ("candidates", kept in
ascending (sign, weights) order).  A dataset is a multiset of k
candidates; it is emitted when its signature expression is constant.

The search keeps exactness while cutting the tree with necessary
conditions only, each of which can be switched off (see :class:`Pruning`):

``symmetry``
    only visit non-decreasing candidate index sequences, so relabelings of
    one dataset are generated once.  Without it every ordered sequence is
    visited and duplicates are merged at the end.
``low_order``
    after fixing a prefix of points, the t^1..t^B coefficients of the
    remaining points must be able to cancel those of the prefix; the
    remaining points' coefficients are bounded by per-order minima and
    maxima over the candidates still allowed.
``min_weight_balance``
    at a full assignment, reject before the full series check unless the
    smallest weight occurs equally often at positive and negative points.

Work is split by the first point's candidate; partitions may run in
worker processes and are merged in order, so output is identical for any
worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from circleweights.errors import SearchLimitExceeded
from circleweights.index import contribution_series, exact_constancy
from circleweights.model import Dataset, FixedPoint
from circleweights.theorems import distinct_pairing_feasible

Key = tuple  # (sign, sorted weights)


@dataclass(frozen=True)
class SearchSpace:
    n: int
    k: int
    B: int

    def __post_init__(self):
        if self.n < 1 or self.k < 0 or self.B < 1:
            raise ValueError(f"need n >= 1, k >= 0, B >= 1; got {self}")

    def candidates(self) -> list[Key]:
        """Every (sign, weights) a single point can take, ascending."""
        multisets = list(itertools.combinations_with_replacement(range(1, self.B + 1), self.n))
        return sorted((s, ws) for s in (-1, 1) for ws in multisets)

    @property
    def order(self) -> int:
        """Truncation order covering W* of every dataset in the space."""
        return self.k * self.n * self.B

    def size(self) -> int:
        """Number of datasets up to relabeling of points."""
        m = 2 * comb(self.B + self.n - 1, self.n)
        return comb(m + self.k - 1, self.k)


@dataclass(frozen=True)
class Pruning:
    symmetry: bool = True
    low_order: bool = True
    min_weight_balance: bool = True

    @classmethod
    def none(cls) -> Pruning:
        return cls(False, False, False)


@dataclass
class _Tables:
    keys: list[Key]
    series: list[tuple[int, ...]]
    lo: list[list[int]]  # lo[start][j]: min coefficient of t^j over candidates >= start
    hi: list[list[int]]
    minw: list[int]


@lru_cache(maxsize=8)
def _tables(space: SearchSpace) -> _Tables:
    keys = space.candidates()
    W = space.order
    series = [contribution_series(FixedPoint("", s, ws), W).coeffs for s, ws in keys]
    m = len(keys)
    depth = min(space.B, W)
    lo = [[0] * (depth + 1) for _ in range(m + 1)]
    hi = [[0] * (depth + 1) for _ in range(m + 1)]
    for start in range(m - 1, -1, -1):
        c = series[start]
        for j in range(1, depth + 1):
            if start == m - 1:
                lo[start][j] = hi[start][j] = c[j]
            else:
                lo[start][j] = min(c[j], lo[start + 1][j])
                hi[start][j] = max(c[j], hi[start + 1][j])
    return _Tables(keys, series, lo, hi, [ws[0] for _, ws in keys])


def _balanced(tab: _Tables, idx: Sequence[int]) -> bool:
    w = min(tab.minw[i] for i in idx)
    diff = 0
    for i in idx:
        s, ws = tab.keys[i]
        diff += s * ws.count(w)
    return diff == 0


class _Abort(Exception):
    pass


def _search_partition(space: SearchSpace, pruning: Pruning, first: int,
                      limit: int | None) -> tuple[list[tuple[int, ...]], int, bool]:
    """All consistent index sequences starting with candidate ``first``.

    Returns (sequences, leaves examined, aborted).  Sequences are sorted
    (non-decreasing) in every mode.
    """
    tab = _tables(space)
    m = len(tab.keys)
    k = space.k
    W = space.order
    depth = len(tab.lo[0]) - 1
    found: list[tuple[int, ...]] = []
    examined = 0
    idx = [first]
    acc = list(tab.series[first])

    def leaf():
        nonlocal examined
        examined += 1
        if limit is not None and examined > limit:
            raise _Abort
        if pruning.min_weight_balance and not _balanced(tab, idx):
            return
        if any(acc[1:]):
            return
        found.append(tuple(sorted(idx)))

    def rec():
        if len(idx) == k:
            leaf()
            return
        start = idx[-1] if pruning.symmetry else 0
        if pruning.low_order:
            r = k - len(idx)
            lo, hi = tab.lo[start], tab.hi[start]
            for j in range(1, depth + 1):
                if not r * lo[j] <= -acc[j] <= r * hi[j]:
                    return
        for i in range(start, m):
            c = tab.series[i]
            for j in range(W + 1):
                acc[j] += c[j]
            idx.append(i)
            rec()
            idx.pop()
            for j in range(W + 1):
                acc[j] -= c[j]

    try:
        rec()
    except _Abort:
        return found, examined, True
    return found, examined, False


def _run(args):
    return _search_partition(*args)


def _to_dataset(space: SearchSpace, keys: list[Key], seq: Sequence[int]) -> Dataset:
    return Dataset(space.n, tuple(FixedPoint(f"p{t}", *keys[i]) for t, i in enumerate(seq)))


def enumerate_consistent(space: SearchSpace, *, workers: int = 1,
                         max_candidates: int | None = None,
                         pruning: Pruning = Pruning()) -> Iterator[Dataset]:
    """Yield every consistent dataset of ``space`` once, in canonical order.

    Datasets are canonical: weights sorted within points, points sorted by
    (sign, weights), ids p0, p1, ...  ``max_candidates`` caps the number of
    full assignments examined; past it SearchLimitExceeded is raised after
    the results of all completed partitions have been yielded.
    """
    keys = space.candidates()
    if space.k == 0:
        # the empty dataset: constant 0
        yield Dataset(space.n, ())
        return
    tasks = [(space, pruning, i, max_candidates) for i in range(len(keys))]
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_run, tasks)
    else:
        pool = None
        results = map(_run, tasks)
    examined = 0
    emitted = 0
    seen: set[tuple[int, ...]] = set()
    try:
        for done, (found, count, aborted) in enumerate(results):
            examined += count
            if aborted or (max_candidates is not None and examined > max_candidates):
                raise SearchLimitExceeded(max_candidates, examined, done, emitted)
            if pruning.symmetry:
                for seq in found:
                    emitted += 1
                    yield _to_dataset(space, keys, seq)
            else:
                seen.update(found)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    for seq in sorted(seen):
        yield _to_dataset(space, keys, seq)


def brute_force_consistent(space: SearchSpace) -> list[Dataset]:
    """Reference result: every ordered assignment, decided by exact_constancy.

    Shares nothing with the pruned search beyond the candidate list; meant
    for cross-checking it on tiny spaces.
    """
    keys = space.candidates()
    found = set()
    for seq in itertools.product(range(len(keys)), repeat=space.k):
        d = _to_dataset(space, keys, seq)
        if exact_constancy(d).is_constant:
            found.add(tuple(sorted(seq)))
    return [_to_dataset(space, keys, seq) for seq in sorted(found)]


@dataclass(frozen=True)
class QuestionCandidate:
    """A dataset whose even weights cannot all be paired across distinct points."""

    dataset: Dataset
    failing_values: tuple[int, ...]
    consistent: bool


def question_failures(d: Dataset) -> tuple[int, ...]:
    """Even weight values of ``d`` that admit no distinct-point pairing."""
    out = []
    for w in d.weight_values():
        if w % 2 == 0 and not distinct_pairing_feasible(p.multiplicity(w) for p in d.points):
            out.append(w)
    return tuple(out)


def question_check(d: Dataset) -> QuestionCandidate | None:
    """Flag ``d`` if some even weight cannot be paired across distinct points.

    The flag records whether ``d`` is consistent at all; an inconsistent
    dataset is not a meaningful candidate.
    """
    failing = question_failures(d)
    if not failing:
        return None
    return QuestionCandidate(d, failing, exact_constancy(d).is_constant)


@dataclass(frozen=True)
class QuestionReport:
    space: SearchSpace
    scanned: int
    candidates: tuple[QuestionCandidate, ...] = field(default=())

    @property
    def anomalous(self) -> bool:
        """Candidates in dimension <= 4, where none can come from a manifold."""
        return self.space.n <= 2 and bool(self.candidates)


def question_scan(space: SearchSpace, **kwargs) -> QuestionReport:
    """Run every consistent dataset of ``space`` through :func:`question_check`.

    Anything reported is a combinatorial candidate only; whether such data
    comes from an actual manifold is not decided here.
    """
    scanned = 0
    found = []
    for d in enumerate_consistent(space, **kwargs):
        scanned += 1
        failing = question_failures(d)
        if failing:
            found.append(QuestionCandidate(d, failing, True))
    return QuestionReport(space, scanned, tuple(found))
