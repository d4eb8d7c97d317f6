"""Weight-pairing checks and pairing construction.

Consequences of the constancy of the signature expression that are
checked here:

* every weight value occurs an even number of times over all points;
* for the smallest weight w, the copies of w at positive points and at
  negative points are equally many;
* for odd w, the same balance holds inside each Z_w-component when signs
  are taken relative to an orientation of the component, so copies of w
  can be paired across distinct points of one component.

Pairings are built greedily per weight value: repeatedly join one copy at
each of the two points holding the most remaining copies.  For a list of
counts this succeeds with distinct points in every pair exactly when the
total T is even and no count exceeds T/2.  A greedy step keeps both
conditions: the two largest counts drop by one and T by two, so they stay
<= T/2 - 1; any third nonzero count c is at most the two above it, hence
3c <= T, and T/3 <= T/2 - 1 whenever T >= 6 (for T = 4 it is 1 <= 1).
"""

from __future__ import annotations

import heapq
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from circleweights.errors import (
    DomainError,
    EmptyDatasetError,
    IncompletePartitionError,
    InfeasiblePairingError,
    NonEffectiveWarning,
    ParityError,
)
from circleweights.model import ComponentPartition, Dataset, effectiveness_gcd


@dataclass(frozen=True, order=True)
class Occurrence:
    """The weight ``value`` in slot ``slot`` (1-based) of point ``point``."""

    point: str
    slot: int
    value: int

    def __str__(self):
        return f"({self.point},{self.slot},{self.value})"


@dataclass(frozen=True)
class Pairing:
    pairs: tuple[tuple[Occurrence, Occurrence], ...]
    # odd values paired without a component partition: only distinct points
    # are guaranteed, not a shared Z_w-component
    global_odd_values: tuple[int, ...] = ()

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def by_value(self) -> dict[int, list[tuple[Occurrence, Occurrence]]]:
        out: dict[int, list] = defaultdict(list)
        for a, b in self.pairs:
            out[a.value].append((a, b))
        return dict(out)


@dataclass(frozen=True)
class BalanceReport:
    weight_value: int
    plus_count: int
    minus_count: int
    component: int | None = None

    @property
    def balanced(self) -> bool:
        return self.plus_count == self.minus_count


class ParityResult(NamedTuple):
    total: int
    even: bool


@dataclass(frozen=True)
class PointBound:
    weight_value: int
    point: str
    own: int
    others: int

    @property
    def holds(self) -> bool:
        return self.own <= self.others

    def __bool__(self):
        return self.holds


def _warn_if_not_effective(d: Dataset) -> None:
    if d.points and effectiveness_gcd(d) != 1:
        warnings.warn(
            f"weights share the factor {effectiveness_gcd(d)}; the action is not "
            "effective and the odd-weight results assume it is",
            NonEffectiveWarning,
            stacklevel=3,
        )


def _require_odd(w: int) -> None:
    if w < 1 or w % 2 == 0:
        raise DomainError(
            f"weight value {w} is not odd; Z_w-components are only orientable for odd w"
        )


def check_parity(d: Dataset, w: int) -> ParityResult:
    """Total number of copies of ``w`` over all points, and whether it is even."""
    total = sum(p.multiplicity(w) for p in d.points)
    return ParityResult(total, total % 2 == 0)


def check_min_weight_balance(d: Dataset) -> BalanceReport:
    """Copies of the smallest weight at positive versus negative points."""
    values = d.weight_values()
    if not values:
        raise EmptyDatasetError("minimum weight is undefined for a dataset without weights")
    w = values[0]
    plus = sum(p.multiplicity(w) for p in d.points if p.sign == 1)
    minus = sum(p.multiplicity(w) for p in d.points if p.sign == -1)
    return BalanceReport(w, plus, minus)


def check_component_balance(d: Dataset, partition: ComponentPartition) -> list[BalanceReport]:
    """One balance report per component, signs taken relative to the component.

    Flipping every relative sign in a component swaps its two counts, so
    whether it is balanced does not depend on the orientation chosen.
    """
    w = partition.weight_value
    _require_odd(w)
    if not partition.has_signs():
        raise IncompletePartitionError(f"partition for w={w} lacks epsilon_f for some points")
    partition.check_against(d)
    _warn_if_not_effective(d)
    reports = []
    for k, comp in enumerate(partition.components):
        plus = sum(d.point(e.point).multiplicity(w) for e in comp if e.epsilon_f == 1)
        minus = sum(d.point(e.point).multiplicity(w) for e in comp if e.epsilon_f == -1)
        reports.append(BalanceReport(w, plus, minus, component=k))
    return reports


def check_point_bound(d: Dataset, w: int, q: str) -> PointBound:
    """Whether N_q(w) <= sum of N_p(w) over the other points, for odd w."""
    _require_odd(w)
    own = d.point(q).multiplicity(w)
    _warn_if_not_effective(d)
    others = sum(p.multiplicity(w) for p in d.points if p.id != q)
    return PointBound(w, q, own, others)


def distinct_pairing_feasible(counts: Iterable[int]) -> bool:
    """Whether copies held with these per-point counts pair up across distinct points."""
    counts = [c for c in counts if c]
    total = sum(counts)
    return total % 2 == 0 and all(2 * c <= total for c in counts)


def _greedy_pairs(slots: Mapping[str, list[int]], value: int, allow_same_point: bool):
    """Pair the occurrences in ``slots`` (point id -> its slots holding ``value``)."""
    heap = [(-len(s), pid) for pid, s in slots.items() if s]
    heapq.heapify(heap)
    remaining = {pid: list(s) for pid, s in slots.items()}
    pairs = []
    while len(heap) >= 2:
        c1, p1 = heapq.heappop(heap)
        c2, p2 = heapq.heappop(heap)
        a = Occurrence(p1, remaining[p1].pop(0), value)
        b = Occurrence(p2, remaining[p2].pop(0), value)
        pairs.append((min(a, b), max(a, b)))
        if c1 + 1:
            heapq.heappush(heap, (c1 + 1, p1))
        if c2 + 1:
            heapq.heappush(heap, (c2 + 1, p2))
    if heap:
        _, pid = heap[0]
        rest = remaining[pid]
        if not allow_same_point or len(rest) % 2:
            return None
        for i in range(0, len(rest), 2):
            pairs.append((Occurrence(pid, rest[i], value), Occurrence(pid, rest[i + 1], value)))
    return pairs


def build_pairing(d: Dataset,
                  partitions: Sequence[ComponentPartition] | None = None) -> Pairing:
    """Split all weight occurrences into pairs of equal values.

    Odd values are paired across distinct points, inside one component when
    a partition for that value is given.  Even values are paired across
    distinct points as far as the greedy rule gets, then within a point.
    """
    by_value: dict[int, ComponentPartition] = {}
    for part in partitions or ():
        _require_odd(part.weight_value)
        part.check_against(d)
        by_value[part.weight_value] = part

    pairs = []
    global_odd = []
    for w in d.weight_values():
        slots = {p.id: [i for i, x in enumerate(p.weights, 1) if x == w] for p in d.points}
        slots = {pid: s for pid, s in slots.items() if s}
        total = sum(len(s) for s in slots.values())
        if total % 2:
            raise ParityError(f"weight {w} occurs {total} times, an odd number", w)
        if w % 2 == 0:
            pairs.extend(_greedy_pairs(slots, w, allow_same_point=True))
            continue
        if w in by_value:
            groups = [[e.point for e in comp] for comp in by_value[w].components]
        else:
            groups = [list(slots)]
            global_odd.append(w)
        for k, group in enumerate(groups):
            sub = {pid: slots[pid] for pid in group}
            got = _greedy_pairs(sub, w, allow_same_point=False)
            if got is None:
                where = f" in component {k}" if w in by_value else ""
                counts = {pid: len(s) for pid, s in sub.items()}
                raise InfeasiblePairingError(
                    f"weight {w}{where}: counts {counts} cannot be paired across distinct points",
                    w, k if w in by_value else None,
                )
            pairs.extend(got)
    pairs.sort(key=lambda ab: (ab[0].value, ab[0], ab[1]))
    return Pairing(tuple(pairs), tuple(global_odd))


def pairing_violations(d: Dataset, pairing: Pairing,
                       partitions: Sequence[ComponentPartition] | None = None) -> list[str]:
    """Everything wrong with ``pairing`` as a pairing of the weights of ``d``.

    Reads only the dataset and the pairs; an empty list means the pairing
    covers every occurrence once, pairs equal values, keeps odd values on
    distinct points, and keeps odd values in one component where a
    partition is given.
    """
    problems = []
    weights = {p.id: p.weights for p in d.points}
    used: dict[tuple[str, int], int] = {}
    component_of = {}
    for part in partitions or ():
        for k, comp in enumerate(part.components):
            for e in comp:
                component_of[part.weight_value, e.point] = k

    for a, b in pairing.pairs:
        for o in (a, b):
            ws = weights.get(o.point)
            if ws is None or not 1 <= o.slot <= len(ws):
                problems.append(f"{o} does not exist")
                continue
            if ws[o.slot - 1] != o.value:
                problems.append(f"{o} records value {o.value} but the slot holds {ws[o.slot - 1]}")
            used[o.point, o.slot] = used.get((o.point, o.slot), 0) + 1
        if a.value != b.value:
            problems.append(f"pair {a} {b} joins different values")
        if (a.point, a.slot) == (b.point, b.slot):
            problems.append(f"pair {a} {b} uses one occurrence twice")
        if a.value % 2 and a.point == b.point:
            problems.append(f"odd pair {a} {b} stays at one point")
        ka = component_of.get((a.value, a.point))
        kb = component_of.get((b.value, b.point))
        if a.value % 2 and (ka is not None or kb is not None) and ka != kb:
            problems.append(f"odd pair {a} {b} crosses components")

    for pid, ws in weights.items():
        for i in range(1, len(ws) + 1):
            c = used.get((pid, i), 0)
            if c != 1:
                problems.append(f"occurrence ({pid},{i}) used {c} times")
    return problems
