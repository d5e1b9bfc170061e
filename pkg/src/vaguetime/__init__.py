"""Uncertain time intervals and the machinery to describe, compare, and query them.

An uncertain interval is the set of determinate intervals whose begin falls
in one range and whose end falls in another.  The package classifies each
of the 13 Allen relations between two such intervals as reliable, possible,
or impossible; matches records against relation-set conditions; grounds
calendar expressions in Julian days; and loads/serializes interval
descriptions written with the HuTime/OWL-Time RDF vocabulary.
"""

from .allen import (
    AllenRelation,
    KindMismatch,
    RELATIONS,
    RelationProfile,
    RelationState,
    classify,
    classify_instant,
    holds,
    impossible,
    in_relation,
    oracle_profile,
    possible,
    profile,
    relation_of,
    reliable,
)
from .calendar import (
    CalendarDate,
    CalendarPeriod,
    CalendarSystem,
    Granularity,
    InvalidDate,
    from_julian_day,
    parse_iso,
    period_bounds,
    to_julian_day,
)
from .core import (
    DeterminateInterval,
    InvalidBounds,
    JulianDay,
    MaybeInterval,
    OperandKind,
    UncertainInterval,
    from_determinate,
    is_determinate,
    is_instant_shaped,
    make_uncertain,
    possible_interval,
    reliable_interval,
)
from .errors import VaguetimeError
from .ontology import (
    ResolvedInterval,
    TemporalDocument,
    emit_turtle,
    parse_turtle,
    resolve,
    resolve_all,
)
from .retrieval import (
    MatchClass,
    MatchResult,
    RecordError,
    match,
    possible_set,
    preset,
    query,
)

__version__ = "0.1.0"

__all__ = [
    "AllenRelation",
    "CalendarDate",
    "CalendarPeriod",
    "CalendarSystem",
    "DeterminateInterval",
    "Granularity",
    "InvalidBounds",
    "InvalidDate",
    "JulianDay",
    "KindMismatch",
    "MatchClass",
    "MatchResult",
    "MaybeInterval",
    "OperandKind",
    "RELATIONS",
    "RecordError",
    "RelationProfile",
    "RelationState",
    "ResolvedInterval",
    "TemporalDocument",
    "UncertainInterval",
    "VaguetimeError",
    "classify",
    "classify_instant",
    "emit_turtle",
    "from_determinate",
    "from_julian_day",
    "holds",
    "impossible",
    "in_relation",
    "is_determinate",
    "is_instant_shaped",
    "make_uncertain",
    "match",
    "oracle_profile",
    "parse_iso",
    "parse_turtle",
    "period_bounds",
    "possible",
    "possible_interval",
    "possible_set",
    "preset",
    "profile",
    "query",
    "relation_of",
    "reliable",
    "reliable_interval",
    "resolve",
    "resolve_all",
    "to_julian_day",
]
