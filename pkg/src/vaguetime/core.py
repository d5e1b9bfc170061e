"""Value model for determinate and uncertain time intervals.

Positions on the time axis are Julian days: a real-valued day count whose
day 0 starts at noon, so calendar midnights fall on half-integers.  A
determinate interval is a closed interval [begin, end].  An uncertain
interval stores four boundary values (pb, rb, re, pe): its begin lies
somewhere in [pb, rb] and its end somewhere in [re, pe], and it stands for
the whole family of determinate intervals drawn from those ranges.

Two derived spans describe that family:

* the possible interval [pb, pe] -- everything that may belong to it;
* the reliable interval [rb, re] -- everything that certainly belongs to
  it, which is empty when the begin and end ranges overlap (rb > re).

All types here are immutable values and safe to share between threads.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import VaguetimeError

JulianDay = float


class InvalidBounds(VaguetimeError):
    """Boundary values violate an interval invariant."""


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidBounds(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class DeterminateInterval:
    """Closed interval [begin, end] with fixed boundaries; begin == end is an instant."""

    begin: JulianDay
    end: JulianDay

    def __post_init__(self) -> None:
        object.__setattr__(self, "begin", _check_finite("begin", self.begin))
        object.__setattr__(self, "end", _check_finite("end", self.end))
        if self.begin > self.end:
            raise InvalidBounds(
                f"begin > end ({self.begin!r} > {self.end!r})"
            )

    @property
    def duration(self) -> float:
        return self.end - self.begin

    @property
    def is_instant(self) -> bool:
        return self.begin == self.end

    def contains_point(self, x: float) -> bool:
        return self.begin <= x <= self.end


# An operation that may yield no interval (empty reliable part) returns None.
MaybeInterval = DeterminateInterval | None


@dataclass(frozen=True)
class UncertainInterval:
    """Four boundary values (pb, rb, re, pe) in canonical form.

    Invariants, checked at construction:

    * pb <= rb and re <= pe (each boundary range is a nonempty interval);
    * pb <= pe (the family of determinate intervals is nonempty);
    * pb <= re and rb <= pe (canonical form: every stored begin pairs with
      at least one legal end and vice versa, so the stored ranges are the
      effective ones).
    """

    pb: JulianDay
    rb: JulianDay
    re: JulianDay
    pe: JulianDay

    def __post_init__(self) -> None:
        for name in ("pb", "rb", "re", "pe"):
            object.__setattr__(self, name, _check_finite(name, getattr(self, name)))
        pb, rb, re, pe = self.pb, self.rb, self.re, self.pe
        values = f"(pb={pb!r}, rb={rb!r}, re={re!r}, pe={pe!r})"
        if pb > rb:
            raise InvalidBounds(f"pb > rb in {values}")
        if re > pe:
            raise InvalidBounds(f"re > pe in {values}")
        if pb > pe:
            raise InvalidBounds(f"pb > pe in {values}")
        if rb > pe:
            raise InvalidBounds(f"rb > pe in {values}")
        if pb > re:
            raise InvalidBounds(f"pb > re in {values}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.pb, self.rb, self.re, self.pe)


class OperandKind(enum.Enum):
    """How an operand takes part in relation classification.

    A duration-0 interval doubles as a time instant, and the stored values
    alone cannot tell the two readings apart; callers declare the intent.
    INSTANT is only valid for instant-shaped operands (pb == re, rb == pe).
    """

    INTERVAL = "interval"
    INSTANT = "instant"


def make_uncertain(pb: float, rb: float, re: float, pe: float) -> UncertainInterval:
    """Validate and build an uncertain interval from its four boundary values."""
    return UncertainInterval(pb, rb, re, pe)


def possible_interval(w: UncertainInterval) -> DeterminateInterval:
    """Union of all determinate intervals in w: the span [pb, pe]."""
    return DeterminateInterval(w.pb, w.pe)


def reliable_interval(w: UncertainInterval) -> MaybeInterval:
    """Intersection of all determinate intervals in w: [rb, re], or None when rb > re."""
    if w.rb > w.re:
        return None
    return DeterminateInterval(w.rb, w.re)


def is_determinate(w: UncertainInterval) -> bool:
    """True when both boundary ranges are single points (only one member)."""
    return w.pb == w.rb and w.re == w.pe


def is_instant_shaped(w: UncertainInterval) -> bool:
    """True when begin and end ranges coincide (the shape of an uncertain instant)."""
    return w.pb == w.re and w.rb == w.pe


def from_determinate(d: DeterminateInterval) -> UncertainInterval:
    """Embed a determinate interval as an uncertain one with zero-width ranges."""
    return UncertainInterval(d.begin, d.begin, d.end, d.end)
