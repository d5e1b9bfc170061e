"""Allen relations and their three-state classification over uncertain intervals.

Between two determinate proper intervals exactly one of the 13 Allen
relations holds.  Between two uncertain intervals each relation is in one
of three states:

* reliable   -- every pair of members satisfies it;
* impossible -- no pair of members satisfies it;
* possible   -- some pair does (this state includes reliable, and testing
  it decides impossible for free, since the two are complements).

The states are computed from closed-form conditions on the eight boundary
values.  `oracle_profile` answers the same question by brute-force member
enumeration and exists to keep the closed forms honest.

Duration-0 intervals double as time instants.  Under instant classification
an instant pair can only be before/equals/after, and an instant against a
proper interval only before/starts/during/finishes/after: a point sitting
on a member's begin counts as starts, on its end as finishes (and
started-by/finished-by for the mirrored operand order).  Callers choose the
reading per operand with `OperandKind`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import kernels
from .core import (
    DeterminateInterval,
    OperandKind,
    UncertainInterval,
    is_instant_shaped,
)
from .errors import VaguetimeError
from .kernels.codes import DURING, FINISHES, NAMES, STARTS


class KindMismatch(VaguetimeError):
    """Instant kind declared for an operand that is not instant-shaped."""


class AllenRelation(enum.Enum):
    BEFORE = "before"
    AFTER = "after"
    DURING = "during"
    CONTAINS = "contains"
    OVERLAPS = "overlaps"
    OVERLAPPED_BY = "overlapped-by"
    MEETS = "meets"
    MET_BY = "met-by"
    STARTS = "starts"
    STARTED_BY = "started-by"
    FINISHES = "finishes"
    FINISHED_BY = "finished-by"
    EQUALS = "equals"

    @property
    def index(self) -> int:
        return _REL_INDEX[self]

    def inverse(self) -> "AllenRelation":
        """The relation seen from the swapped operand order (an involution)."""
        return RELATIONS[kernels.INVERSE[self.index]]

    @classmethod
    def from_string(cls, name: str) -> "AllenRelation":
        key = name.strip().lower().replace("_", "-")
        try:
            return _REL_BY_NAME[key]
        except KeyError:
            raise ValueError(f"unknown Allen relation {name!r}") from None

    def __str__(self) -> str:
        return self.value


RELATIONS: tuple[AllenRelation, ...] = tuple(AllenRelation)
_REL_INDEX = {rel: i for i, rel in enumerate(RELATIONS)}
_REL_BY_NAME = {rel.value: rel for rel in RELATIONS}
assert tuple(r.value for r in RELATIONS) == NAMES


class RelationState(enum.Enum):
    RELIABLE = "reliable"
    POSSIBLE = "possible"
    IMPOSSIBLE = "impossible"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RelationProfile:
    """State of every Allen relation for one operand pair."""

    states: tuple[RelationState, ...]

    def __post_init__(self) -> None:
        if len(self.states) != len(RELATIONS):
            raise ValueError("profile needs one state per relation")

    def __getitem__(self, rel: AllenRelation) -> RelationState:
        return self.states[rel.index]

    def items(self) -> Iterator[tuple[AllenRelation, RelationState]]:
        return iter(zip(RELATIONS, self.states))

    def possible_set(self) -> frozenset[AllenRelation]:
        """Relations that are not impossible (reliable ones included)."""
        return frozenset(
            rel for rel, st in zip(RELATIONS, self.states)
            if st is not RelationState.IMPOSSIBLE
        )

    def reliable_relation(self) -> AllenRelation | None:
        for rel, st in zip(RELATIONS, self.states):
            if st is RelationState.RELIABLE:
                return rel
        return None


def relation_of(a: DeterminateInterval, b: DeterminateInterval) -> AllenRelation:
    """The single relation holding between two determinate intervals.

    Duration-0 operands are read as instants with the collapsed semantics
    described in the module docstring, so the result is always unique.
    """
    code = kernels.numpy_backend.relation_codes(
        np.array([a.begin]), np.array([a.end]),
        np.array([b.begin]), np.array([b.end]),
    )
    return RELATIONS[int(code[0])]


def holds(rel: AllenRelation, a: DeterminateInterval, b: DeterminateInterval) -> bool:
    """Whether the endpoint-order condition of `rel` holds for the pair."""
    return relation_of(a, b) is rel


def _check_kind(w: UncertainInterval, kind: OperandKind, which: str) -> None:
    if kind is OperandKind.INSTANT and not is_instant_shaped(w):
        raise KindMismatch(
            f"operand {which} declared instant but is not instant-shaped: "
            f"{w.as_tuple()}"
        )


def _rows(w: UncertainInterval) -> np.ndarray:
    return np.array([[w.pb, w.rb, w.re, w.pe]], dtype=np.float64)


def _states(
    a: UncertainInterval,
    b: UncertainInterval,
    a_kind: OperandKind,
    b_kind: OperandKind,
    evaluate,
) -> tuple[np.ndarray, np.ndarray]:
    _check_kind(a, a_kind, "a")
    _check_kind(b, b_kind, "b")
    pos, rel = evaluate(
        _rows(a), _rows(b),
        a_kind is OperandKind.INSTANT,
        b_kind is OperandKind.INSTANT,
    )
    return pos[0], rel[0]


def _profile_from_masks(pos: np.ndarray, rel: np.ndarray) -> RelationProfile:
    states = tuple(
        RelationState.RELIABLE if rel[i]
        else RelationState.POSSIBLE if pos[i]
        else RelationState.IMPOSSIBLE
        for i in range(len(RELATIONS))
    )
    return RelationProfile(states)


def profile(
    a: UncertainInterval,
    b: UncertainInterval,
    a_kind: OperandKind = OperandKind.INTERVAL,
    b_kind: OperandKind = OperandKind.INTERVAL,
) -> RelationProfile:
    """Classify all 13 relations for the pair under the declared kinds."""
    pos, rel = _states(a, b, a_kind, b_kind, kernels.pair_states)
    return _profile_from_masks(pos, rel)


def oracle_profile(
    a: UncertainInterval,
    b: UncertainInterval,
    a_kind: OperandKind = OperandKind.INTERVAL,
    b_kind: OperandKind = OperandKind.INTERVAL,
) -> RelationProfile:
    """Brute-force counterpart of `profile` (independent of the closed forms)."""
    pos, rel = _states(a, b, a_kind, b_kind, kernels.oracle_states)
    return _profile_from_masks(pos, rel)


def possible(rel: AllenRelation, a: UncertainInterval, b: UncertainInterval) -> bool:
    """Some member pair satisfies `rel` (interval reading on both sides)."""
    pos, _ = _states(a, b, OperandKind.INTERVAL, OperandKind.INTERVAL,
                     kernels.pair_states)
    return bool(pos[rel.index])


def reliable(rel: AllenRelation, a: UncertainInterval, b: UncertainInterval) -> bool:
    """Every member pair satisfies `rel` (interval reading on both sides)."""
    _, rl = _states(a, b, OperandKind.INTERVAL, OperandKind.INTERVAL,
                    kernels.pair_states)
    return bool(rl[rel.index])


def impossible(rel: AllenRelation, a: UncertainInterval, b: UncertainInterval) -> bool:
    """Complement of `possible`; never derived independently."""
    return not possible(rel, a, b)


def classify(
    rel: AllenRelation, a: UncertainInterval, b: UncertainInterval
) -> RelationState:
    return profile(a, b)[rel]


def classify_instant(
    rel: AllenRelation,
    a: UncertainInterval,
    b: UncertainInterval,
    a_kind: OperandKind,
    b_kind: OperandKind,
) -> RelationState:
    """Classification with instant collapsing; at least one kind must be instant."""
    if a_kind is not OperandKind.INSTANT and b_kind is not OperandKind.INSTANT:
        raise KindMismatch("classify_instant needs at least one instant operand")
    return profile(a, b, a_kind, b_kind)[rel]


def in_relation(t: UncertainInterval, w: UncertainInterval) -> RelationState:
    """State of the OWL-Time "in" relation (starts or during or finishes).

    `t` is read as an instant and must be instant-shaped; `w` as an
    interval.  Possible distributes over the disjunction; reliable holds
    exactly when every point of t falls inside every proper member of w,
    i.e. w.rb <= t.pb and t.pe <= w.re (and w admits proper members at
    all).  The brute-force oracle backs this closed form in the tests.
    """
    if not is_instant_shaped(t):
        raise KindMismatch(f"in_relation needs an instant-shaped t, got {t.as_tuple()}")
    if w.pb < w.pe and w.rb <= t.pb and t.pe <= w.re:
        return RelationState.RELIABLE
    pos, _ = _states(t, w, OperandKind.INSTANT, OperandKind.INTERVAL,
                     kernels.pair_states)
    if pos[STARTS] or pos[DURING] or pos[FINISHES]:
        return RelationState.POSSIBLE
    return RelationState.IMPOSSIBLE
