"""Fixed-point datasets: points with a sign and a list of weights.

A :class:`Dataset` stands in for a compact oriented 2n-manifold with a
circle action: each isolated fixed point carries a sign (+1 or -1) and n
positive weights.  Weights keep their slot order so that pairings can name
individual occurrences.

Constructors do not validate; call :func:`validate` (or
:func:`require_valid`) on data from untrusted sources.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from circleweights.errors import EmptyDatasetError, InvalidDatasetError, PartitionError


@dataclass(frozen=True)
class FixedPoint:
    id: str
    sign: int
    weights: tuple[int, ...]

    def __post_init__(self):
        # accept lists for convenience, store tuples so the record is hashable
        if not isinstance(self.weights, tuple):
            object.__setattr__(self, "weights", tuple(self.weights))

    def multiplicity(self, w: int) -> int:
        return self.weights.count(w)

    @property
    def key(self) -> tuple:
        """Sort key used for canonical ordering: (sign, sorted weights)."""
        return (self.sign, tuple(sorted(self.weights)))


@dataclass(frozen=True)
class Dataset:
    n: int
    points: tuple[FixedPoint, ...] = ()

    def __post_init__(self):
        if not isinstance(self.points, tuple):
            object.__setattr__(self, "points", tuple(self.points))

    @classmethod
    def from_records(cls, n: int, records: Iterable[tuple]) -> Dataset:
        """Build from ``(id, sign, weights)`` triples."""
        return cls(n, tuple(FixedPoint(pid, s, tuple(ws)) for pid, s, ws in records))

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, Sequence[int]]], prefix: str = "p") -> Dataset:
        """Build from ``(sign, weights)`` pairs, naming points p0, p1, ..."""
        if not pairs:
            raise ValueError("from_pairs needs at least one point to infer n")
        n = len(pairs[0][1])
        return cls(n, tuple(FixedPoint(f"{prefix}{k}", s, tuple(ws))
                            for k, (s, ws) in enumerate(pairs)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def dimension(self) -> int:
        return 2 * self.n

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.points)

    def point(self, pid: str) -> FixedPoint:
        for p in self.points:
            if p.id == pid:
                return p
        raise KeyError(f"no fixed point with id {pid!r}")

    def weight_values(self) -> list[int]:
        """Distinct weight values occurring anywhere, ascending."""
        return sorted({w for p in self.points for w in p.weights})

    def weight_sum(self) -> int:
        """Sum of all weights; the degree bound for the constancy decision."""
        return sum(sum(p.weights) for p in self.points)

    def sign_sum(self) -> int:
        return sum(p.sign for p in self.points)

    def canonical(self) -> Dataset:
        """Weights sorted within points, points sorted by (sign, weights), ids p0, p1, ..."""
        keys = sorted(p.key for p in self.points)
        return Dataset(self.n, tuple(FixedPoint(f"p{k}", s, ws)
                                     for k, (s, ws) in enumerate(keys)))

    def canonical_key(self) -> tuple:
        return tuple(sorted(p.key for p in self.points))


@dataclass(frozen=True)
class ComponentEntry:
    point: str
    epsilon_f: int | None = None


@dataclass(frozen=True)
class ComponentPartition:
    """Fixed points carrying an odd weight w, grouped into Z_w-components.

    ``epsilon_f`` is the sign of the point relative to a chosen orientation
    of its component; it may be omitted when only the grouping matters.
    Partitions are trusted input: nothing here can tell whether a grouping
    is geometrically possible.
    """

    weight_value: int
    components: tuple[tuple[ComponentEntry, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, w: int, components: Iterable[Iterable]) -> ComponentPartition:
        """Build from lists of point ids or ``(id, epsilon_f)`` tuples."""
        out = []
        for comp in components:
            entries = []
            for e in comp:
                if isinstance(e, ComponentEntry):
                    entries.append(e)
                elif isinstance(e, str):
                    entries.append(ComponentEntry(e))
                else:
                    entries.append(ComponentEntry(*e))
            out.append(tuple(entries))
        return cls(w, tuple(out))

    def has_signs(self) -> bool:
        return all(e.epsilon_f is not None for comp in self.components for e in comp)

    def check_against(self, d: Dataset) -> None:
        """Raise PartitionError unless the partition covers exactly the points with weight w."""
        w = self.weight_value
        seen: set[str] = set()
        known = set(d.ids)
        for comp in self.components:
            for e in comp:
                if e.point in seen:
                    raise PartitionError(f"point {e.point!r} listed twice in partition for w={w}")
                seen.add(e.point)
                if e.point not in known:
                    raise PartitionError(f"unknown point {e.point!r} in partition for w={w}")
                if w not in d.point(e.point).weights:
                    raise PartitionError(f"point {e.point!r} has no weight {w}")
                if e.epsilon_f not in (None, 1, -1):
                    raise PartitionError(f"bad epsilon_f {e.epsilon_f!r} for point {e.point!r}")
        missing = [p.id for p in d.points if w in p.weights and p.id not in seen]
        if missing:
            raise PartitionError(f"points {missing} have weight {w} but are in no component")


@dataclass(frozen=True)
class Violation:
    kind: str  # weight-count | nonpositive-weight | duplicate-id | bad-sign | bad-n
    point: str | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    gcd: int | None = None
    normalized: Dataset | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def effective(self) -> bool:
        return self.gcd == 1

    def __bool__(self) -> bool:
        return self.ok


def validate(d: Dataset) -> ValidationReport:
    """Check the dataset invariants and report every violation found.

    For a valid dataset whose weights share a common factor g > 1, the
    report also carries ``normalized``, the dataset with every weight
    divided by g (the induced effective action of the quotient circle).
    """
    out: list[Violation] = []
    if isinstance(d.n, bool) or not isinstance(d.n, int) or d.n < 1:
        out.append(Violation("bad-n", None, f"half-dimension must be a positive integer, got {d.n!r}"))
    counts = Counter(p.id for p in d.points)
    for pid, c in counts.items():
        if c > 1:
            out.append(Violation("duplicate-id", pid, f"id {pid!r} used {c} times"))
    for p in d.points:
        if isinstance(p.sign, bool) or p.sign not in (1, -1):
            out.append(Violation("bad-sign", p.id, f"sign must be +1 or -1, got {p.sign!r}"))
        if len(p.weights) != d.n:
            out.append(Violation("weight-count", p.id,
                                 f"expected {d.n} weights, got {len(p.weights)}"))
        for i, w in enumerate(p.weights, 1):
            if isinstance(w, bool) or not isinstance(w, int):
                out.append(Violation("nonpositive-weight", p.id, f"slot {i}: {w!r} is not an integer"))
            elif w < 1:
                out.append(Violation("nonpositive-weight", p.id, f"slot {i}: weight {w} is not positive"))
    if out:
        return ValidationReport(tuple(out))
    g = effectiveness_gcd(d) if d.points else None
    normalized = normalize_by_gcd(d) if g is not None and g > 1 else None
    return ValidationReport((), g, normalized)


def require_valid(d: Dataset) -> Dataset:
    report = validate(d)
    if not report.ok:
        msg = "; ".join(f"{v.kind}: {v.message}" for v in report.violations)
        raise InvalidDatasetError(f"invalid dataset: {msg}", report.violations)
    return d


def multiplicity(d: Dataset, pid: str, w: int) -> int:
    """N_p(w): how many slots of point ``pid`` carry the weight ``w``."""
    return d.point(pid).multiplicity(w)


def effectiveness_gcd(d: Dataset) -> int:
    """gcd of all weights; 1 exactly when the data is compatible with an effective action."""
    if not d.points or not any(p.weights for p in d.points):
        raise EmptyDatasetError("gcd of weights is undefined for a dataset without weights")
    return reduce(math.gcd, (w for p in d.points for w in p.weights))


def normalize_by_gcd(d: Dataset) -> Dataset:
    g = effectiveness_gcd(d)
    if g == 1:
        return d
    return Dataset(d.n, tuple(FixedPoint(p.id, p.sign, tuple(w // g for w in p.weights))
                              for p in d.points))
