"""Match records against a retrieval condition given as a set of relations.

A condition c names the Allen relations a caller accepts between a record's
interval and a reference interval.  With r the set of relations that are
possible for the pair, the verdict is:

* reliable   when r is a subset of c (every determinate reading matches);
* impossible when r and c are disjoint (no reading matches);
* possible   otherwise (some readings match, some do not).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .allen import (
    AllenRelation,
    RelationProfile,
    _check_kind,
    _profile_from_masks,
    profile,
)
from .core import OperandKind, UncertainInterval, make_uncertain
from .errors import VaguetimeError

Condition = frozenset[AllenRelation]
PossibleSet = frozenset[AllenRelation]


class EmptyCondition(VaguetimeError):
    """A retrieval condition must name at least one relation."""


class EmptyPossibleSet(VaguetimeError):
    """A possible set is never empty for valid operands."""


class UnknownPreset(VaguetimeError):
    """No condition preset registered under that name."""


class MatchClass(enum.Enum):
    RELIABLE = "reliable"
    POSSIBLE = "possible"
    IMPOSSIBLE = "impossible"

    @property
    def sort_key(self) -> int:
        """Most to least certain: reliable < possible < impossible."""
        return _MATCH_ORDER[self]

    def __str__(self) -> str:
        return self.value


_MATCH_ORDER = {
    MatchClass.RELIABLE: 0,
    MatchClass.POSSIBLE: 1,
    MatchClass.IMPOSSIBLE: 2,
}


@dataclass(frozen=True)
class MatchResult:
    record_id: str
    match: MatchClass
    possible_set: PossibleSet
    profile: RelationProfile


@dataclass(frozen=True)
class RecordError:
    record_id: str
    error: VaguetimeError


# A record matches "within" when it lies inside the reference; "alive-during"
# accepts any relation with common time (the intersecting ones).
_WITHIN = frozenset(
    {AllenRelation.STARTS, AllenRelation.DURING, AllenRelation.FINISHES}
)
_INTERSECTS = frozenset(
    {
        AllenRelation.OVERLAPS,
        AllenRelation.STARTS,
        AllenRelation.DURING,
        AllenRelation.FINISHES,
        AllenRelation.OVERLAPPED_BY,
        AllenRelation.STARTED_BY,
        AllenRelation.CONTAINS,
        AllenRelation.FINISHED_BY,
        AllenRelation.EQUALS,
    }
)

PRESETS: dict[str, Condition] = {
    "within": _WITHIN,
    "alive-during": _INTERSECTS,
    "intersects": _INTERSECTS,
}


def preset(name: str) -> Condition:
    try:
        return PRESETS[name.strip().lower()]
    except KeyError:
        raise UnknownPreset(
            f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}"
        ) from None


def as_condition(relations: Iterable[AllenRelation | str]) -> Condition:
    """Normalize an iterable of relations or relation names into a condition."""
    out = frozenset(
        rel if isinstance(rel, AllenRelation) else AllenRelation.from_string(rel)
        for rel in relations
    )
    if not out:
        raise EmptyCondition("condition must contain at least one relation")
    return out


def possible_set(
    record: UncertainInterval,
    reference: UncertainInterval,
    record_kind: OperandKind = OperandKind.INTERVAL,
    reference_kind: OperandKind = OperandKind.INTERVAL,
) -> PossibleSet:
    """Relations that are possible between record and reference."""
    return profile(record, reference, record_kind, reference_kind).possible_set()


def match(condition: Iterable[AllenRelation | str], r: PossibleSet) -> MatchClass:
    """Verdict for a possible set r against a condition."""
    c = as_condition(condition)
    if not r:
        raise EmptyPossibleSet("possible set must contain at least one relation")
    common = c & r
    if common == r:
        return MatchClass.RELIABLE
    if not common:
        return MatchClass.IMPOSSIBLE
    return MatchClass.POSSIBLE


RecordSpec = UncertainInterval | Sequence[float]


def _coerce_record(value: RecordSpec) -> UncertainInterval:
    if isinstance(value, UncertainInterval):
        return value
    return make_uncertain(*value)


def query(
    records: Iterable[tuple[str, RecordSpec]],
    reference: UncertainInterval,
    condition: Iterable[AllenRelation | str],
    record_kind: OperandKind = OperandKind.INTERVAL,
    reference_kind: OperandKind = OperandKind.INTERVAL,
) -> list[MatchResult | RecordError]:
    """Classify every record against the reference, preserving input order.

    Records that fail validation yield a RecordError entry instead of
    aborting the batch.  Valid records are evaluated in one kernel batch.
    """
    c = as_condition(condition)
    entries = list(records)
    results: list[MatchResult | RecordError | None] = [None] * len(entries)
    valid_idx: list[int] = []
    valid: list[UncertainInterval] = []
    for i, (record_id, spec) in enumerate(entries):
        try:
            w = _coerce_record(spec)
            _check_kind(w, record_kind, repr(record_id))
        except VaguetimeError as exc:
            results[i] = RecordError(str(record_id), exc)
            continue
        valid_idx.append(i)
        valid.append(w)
    if valid:
        _check_kind(reference, reference_kind, "reference")
        a = np.array([w.as_tuple() for w in valid], dtype=np.float64)
        b = np.tile(
            np.array(reference.as_tuple(), dtype=np.float64), (len(valid), 1)
        )
        pos, rel = kernels.pair_states(
            a, b,
            record_kind is OperandKind.INSTANT,
            reference_kind is OperandKind.INSTANT,
        )
        for row, i in enumerate(valid_idx):
            prof = _profile_from_masks(pos[row], rel[row])
            r = prof.possible_set()
            results[i] = MatchResult(
                record_id=str(entries[i][0]),
                match=match(c, r),
                possible_set=r,
                profile=prof,
            )
    return [res for res in results if res is not None]
