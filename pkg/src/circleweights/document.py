"""JSON dataset documents.

A document looks like::

    {
      "dimension": 4,
      "fixed_points": [
        {"id": "p0", "sign": 1, "weights": [1, 2]},
        ...
      ],
      "components": {
        "1": [[{"point": "p0", "epsilon_f": 1}, {"point": "p1", "epsilon_f": -1}]]
      }
    }

``components`` is optional and maps an odd weight value (as a string) to
its Z_w-components; ``epsilon_f`` is optional per entry.  Weight lists keep
their order, since slot positions are what pairings refer to.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from circleweights.errors import CircleWeightsError
from circleweights.model import ComponentEntry, ComponentPartition, Dataset, FixedPoint


class DocumentError(CircleWeightsError, ValueError):
    """The text is not a well-formed dataset document."""


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(f"{what} must be an integer, got {x!r}")
    return x


def from_obj(obj: Any) -> tuple[Dataset, list[ComponentPartition]]:
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(obj) - {"dimension", "fixed_points", "components"}
    if unknown:
        raise DocumentError(f"unknown fields: {sorted(unknown)}")
    if "dimension" not in obj or "fixed_points" not in obj:
        raise DocumentError("document needs 'dimension' and 'fixed_points'")
    dim = _int(obj["dimension"], "dimension")
    if dim < 2 or dim % 2:
        raise DocumentError(f"dimension must be a positive even integer, got {dim}")
    fps = obj["fixed_points"]
    if not isinstance(fps, list):
        raise DocumentError("'fixed_points' must be a list")
    points = []
    for k, fp in enumerate(fps):
        if not isinstance(fp, dict) or set(fp) != {"id", "sign", "weights"}:
            raise DocumentError(f"fixed point #{k} must have exactly 'id', 'sign', 'weights'")
        if not isinstance(fp["id"], str):
            raise DocumentError(f"fixed point #{k}: id must be a string")
        if not isinstance(fp["weights"], list):
            raise DocumentError(f"fixed point #{k}: weights must be a list")
        points.append(FixedPoint(
            fp["id"],
            _int(fp["sign"], f"sign of {fp['id']!r}"),
            tuple(_int(w, f"weight of {fp['id']!r}") for w in fp["weights"]),
        ))
    partitions = []
    comps = obj.get("components", {})
    if not isinstance(comps, dict):
        raise DocumentError("'components' must be an object keyed by weight value")
    for key, groups in comps.items():
        try:
            w = int(key)
        except ValueError:
            raise DocumentError(f"component key {key!r} is not an integer") from None
        if not isinstance(groups, list) or not all(isinstance(g, list) for g in groups):
            raise DocumentError(f"components for {key} must be a list of lists")
        parsed = []
        for g in groups:
            entries = []
            for e in g:
                if not isinstance(e, dict) or "point" not in e or set(e) - {"point", "epsilon_f"}:
                    raise DocumentError(f"bad component entry {e!r} for weight {key}")
                eps = e.get("epsilon_f")
                if eps is not None:
                    eps = _int(eps, "epsilon_f")
                entries.append(ComponentEntry(str(e["point"]), eps))
            parsed.append(tuple(entries))
        partitions.append(ComponentPartition(w, tuple(parsed)))
    partitions.sort(key=lambda p: p.weight_value)
    return Dataset(dim // 2, tuple(points)), partitions


def to_obj(d: Dataset, partitions: Sequence[ComponentPartition] = ()) -> dict:
    obj: dict[str, Any] = {
        "dimension": 2 * d.n,
        "fixed_points": [{"id": p.id, "sign": p.sign, "weights": list(p.weights)}
                         for p in d.points],
    }
    if partitions:
        obj["components"] = {
            str(part.weight_value): [
                [{"point": e.point} if e.epsilon_f is None
                 else {"point": e.point, "epsilon_f": e.epsilon_f} for e in comp]
                for comp in part.components
            ]
            for part in partitions
        }
    return obj


def loads(text: str) -> tuple[Dataset, list[ComponentPartition]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not valid JSON: {e}") from None
    return from_obj(obj)


def dumps(d: Dataset, partitions: Sequence[ComponentPartition] = (), indent: int | None = 2) -> str:
    return json.dumps(to_obj(d, partitions), indent=indent)


def load(path) -> tuple[Dataset, list[ComponentPartition]]:
    try:
        with open(path) as f:
            return loads(f.read())
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}") from None
