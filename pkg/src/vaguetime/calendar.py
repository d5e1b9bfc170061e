"""Calendar dates, calendar periods, and Julian-day conversion.

Supports the proleptic Gregorian and proleptic Julian calendars with
astronomical year numbering (year 0 is 1 BCE, -1 is 2 BCE, ...).  The
Julian day is a continuous real-valued day count with day 0 starting at
noon of Julian-calendar January 1, 4713 BCE (year -4712), so calendar
midnights fall on half-integer values.

Conversions use plain date arithmetic (epoch-anchored day counts per
calendar cycle), no lookup tables.  A calendar period (day, month, year or
decade) expands to the determinate interval from its first midnight to the
first midnight of the following period.
"""

from __future__ import annotations

import enum
import math
import re as _re
from dataclasses import dataclass

from .core import DeterminateInterval, JulianDay
from .errors import VaguetimeError


class InvalidDate(VaguetimeError):
    """Calendar date fields do not name a real date."""


class ParseError(VaguetimeError):
    """Text is not a supported calendar expression."""

    def __init__(self, reason: str, position: int = 0):
        super().__init__(f"{reason} (at position {position})")
        self.reason = reason
        self.position = position


class CalendarSystem(enum.Enum):
    GREGORIAN = "gregorian"
    JULIAN = "julian"

    def __str__(self) -> str:
        return self.value


# Calendar-id registry for calendar URIs ("<id>/<granularity>/<anchor>").
# Which calendars the published ids denote is not formally specified; both
# default to Gregorian and callers may pass their own mapping.
DEFAULT_CALENDAR_REGISTRY: dict[str, CalendarSystem] = {
    "101.1": CalendarSystem.GREGORIAN,
    "101.2": CalendarSystem.GREGORIAN,
}


class Granularity(enum.Enum):
    DAY = "day"
    MONTH = "month"
    YEAR = "year"
    DECADE = "decade"

    def __str__(self) -> str:
        return self.value


_DAYS_IN_MONTH = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)

# Midnight starting fixed day 1 (Gregorian 0001-01-01) is JD 1721425.5.
_JD_OFFSET = 1721424.5


def is_leap_year(year: int, system: CalendarSystem) -> bool:
    if system is CalendarSystem.GREGORIAN:
        return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)
    return year % 4 == 0


def days_in_month(year: int, month: int, system: CalendarSystem) -> int:
    if month == 2 and is_leap_year(year, system):
        return 29
    return _DAYS_IN_MONTH[month - 1]


@dataclass(frozen=True)
class CalendarDate:
    year: int
    month: int
    day: int
    system: CalendarSystem = CalendarSystem.GREGORIAN

    def __post_init__(self) -> None:
        if not 1 <= self.month <= 12:
            raise InvalidDate(f"month {self.month} out of range 1..12")
        if not 1 <= self.day <= days_in_month(self.year, self.month, self.system):
            raise InvalidDate(
                f"day {self.day} out of range for "
                f"{self.system} {self.year:05d}-{self.month:02d}"
            )

    def __str__(self) -> str:
        sign_year = f"{self.year:04d}" if self.year >= 0 else f"-{-self.year:04d}"
        return f"{sign_year}-{self.month:02d}-{self.day:02d}"


@dataclass(frozen=True)
class CalendarPeriod:
    """A day, month, year, or decade anchored at its first calendar date."""

    granularity: Granularity
    year: int
    month: int = 1
    day: int = 1
    system: CalendarSystem = CalendarSystem.GREGORIAN

    def __post_init__(self) -> None:
        if self.granularity is Granularity.DECADE and self.year % 10 != 0:
            raise InvalidDate(f"decade anchor {self.year} is not a multiple of 10")
        # Validates month/day ranges for the anchor.
        CalendarDate(self.year, self.month, self.day, self.system)

    def start_date(self) -> CalendarDate:
        return CalendarDate(self.year, self.month, self.day, self.system)

    def __str__(self) -> str:
        sign_year = f"{self.year:04d}" if self.year >= 0 else f"-{-self.year:04d}"
        if self.granularity is Granularity.DAY:
            return f"{sign_year}-{self.month:02d}-{self.day:02d}"
        if self.granularity is Granularity.MONTH:
            return f"{sign_year}-{self.month:02d}"
        if self.granularity is Granularity.YEAR:
            return sign_year
        return f"{sign_year}s"


def _fixed_from_gregorian(year: int, month: int, day: int) -> int:
    y = year - 1
    rd = 365 * y + y // 4 - y // 100 + y // 400 + (367 * month - 362) // 12 + day
    if month > 2:
        rd += -1 if is_leap_year(year, CalendarSystem.GREGORIAN) else -2
    return rd


def _fixed_from_julian(year: int, month: int, day: int) -> int:
    y = year - 1
    rd = -2 + 365 * y + y // 4 + (367 * month - 362) // 12 + day
    if month > 2:
        rd += -1 if year % 4 == 0 else -2
    return rd


def _fixed_from_date(d: CalendarDate) -> int:
    if d.system is CalendarSystem.GREGORIAN:
        return _fixed_from_gregorian(d.year, d.month, d.day)
    return _fixed_from_julian(d.year, d.month, d.day)


def _gregorian_from_fixed(rd: int) -> CalendarDate:
    d0 = rd - 1
    n400, d1 = divmod(d0, 146097)
    n100, d2 = divmod(d1, 36524)
    n4, d3 = divmod(d2, 1461)
    n1 = d3 // 365
    year = 400 * n400 + 100 * n100 + 4 * n4 + n1
    if n100 != 4 and n1 != 4:
        year += 1
    prior = rd - _fixed_from_gregorian(year, 1, 1)
    if rd < _fixed_from_gregorian(year, 3, 1):
        correction = 0
    else:
        correction = 1 if is_leap_year(year, CalendarSystem.GREGORIAN) else 2
    month = (12 * (prior + correction) + 373) // 367
    day = rd - _fixed_from_gregorian(year, month, 1) + 1
    return CalendarDate(year, month, day, CalendarSystem.GREGORIAN)


def _julian_from_fixed(rd: int) -> CalendarDate:
    year = (4 * (rd + 1) + 1464) // 1461
    prior = rd - _fixed_from_julian(year, 1, 1)
    if rd < _fixed_from_julian(year, 3, 1):
        correction = 0
    else:
        correction = 1 if year % 4 == 0 else 2
    month = (12 * (prior + correction) + 373) // 367
    day = rd - _fixed_from_julian(year, month, 1) + 1
    return CalendarDate(year, month, day, CalendarSystem.JULIAN)


def to_julian_day(d: CalendarDate, fraction_of_day: float = 0.0) -> JulianDay:
    """JD of the given date; fraction 0.0 is midnight starting the day, 0.5 noon."""
    if not 0.0 <= fraction_of_day <= 1.0:
        raise InvalidDate(f"fraction_of_day {fraction_of_day!r} outside [0, 1]")
    return _fixed_from_date(d) + _JD_OFFSET + fraction_of_day


def from_julian_day(
    jd: JulianDay, system: CalendarSystem = CalendarSystem.GREGORIAN
) -> tuple[CalendarDate, float]:
    """Date and fraction-of-day of a JD; inverse of `to_julian_day`."""
    if not math.isfinite(jd):
        raise InvalidDate(f"Julian day must be finite, got {jd!r}")
    moment = jd - _JD_OFFSET
    rd = math.floor(moment)
    fraction = moment - rd
    if system is CalendarSystem.GREGORIAN:
        return _gregorian_from_fixed(rd), fraction
    return _julian_from_fixed(rd), fraction


def _next_period_start(p: CalendarPeriod) -> CalendarDate:
    if p.granularity is Granularity.DAY:
        if p.day < days_in_month(p.year, p.month, p.system):
            return CalendarDate(p.year, p.month, p.day + 1, p.system)
        if p.month < 12:
            return CalendarDate(p.year, p.month + 1, 1, p.system)
        return CalendarDate(p.year + 1, 1, 1, p.system)
    if p.granularity is Granularity.MONTH:
        if p.month < 12:
            return CalendarDate(p.year, p.month + 1, 1, p.system)
        return CalendarDate(p.year + 1, 1, 1, p.system)
    if p.granularity is Granularity.YEAR:
        return CalendarDate(p.year + 1, 1, 1, p.system)
    return CalendarDate(p.year + 10, 1, 1, p.system)


def period_bounds(p: CalendarPeriod) -> DeterminateInterval:
    """[first midnight of the period, first midnight of the next period]."""
    return DeterminateInterval(
        to_julian_day(p.start_date()), to_julian_day(_next_period_start(p))
    )


_DECADE_RE = _re.compile(r"^(-?\d+)s$")
_YEAR_RE = _re.compile(r"^(-?\d+)$")
_MONTH_RE = _re.compile(r"^(-?\d+)-(\d{2})$")
_DAY_RE = _re.compile(r"^(-?\d+)-(\d{2})-(\d{2})$")


def parse_iso(
    text: str, system: CalendarSystem = CalendarSystem.GREGORIAN
) -> CalendarPeriod:
    """Parse YYYY, YYYY-MM, YYYY-MM-DD, or a YYY0s decade into a period.

    Negative years use a leading minus (astronomical numbering).
    """
    text = text.strip()
    if not text:
        raise ParseError("empty calendar expression")
    try:
        if m := _DECADE_RE.match(text):
            year = int(m.group(1))
            if year % 10 != 0:
                raise ParseError(f"decade {text!r} must end in a 0 year")
            return CalendarPeriod(Granularity.DECADE, year, system=system)
        if m := _YEAR_RE.match(text):
            return CalendarPeriod(Granularity.YEAR, int(m.group(1)), system=system)
        if m := _MONTH_RE.match(text):
            year, month = int(m.group(1)), int(m.group(2))
            if not 1 <= month <= 12:
                raise ParseError(
                    f"month {month} out of range", text.rfind(m.group(2))
                )
            return CalendarPeriod(Granularity.MONTH, year, month, system=system)
        if m := _DAY_RE.match(text):
            year, month, day = int(m.group(1)), int(m.group(2)), int(m.group(3))
            if not 1 <= month <= 12:
                raise ParseError(f"month {month} out of range", len(m.group(1)) + 1)
            if not 1 <= day <= days_in_month(year, month, system):
                raise ParseError(
                    f"day {day} out of range", len(m.group(1)) + len(m.group(2)) + 2
                )
            return CalendarPeriod(Granularity.DAY, year, month, day, system=system)
    except InvalidDate as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(
        f"{text!r} is not a supported calendar expression "
        "(YYYY, YYYY-MM, YYYY-MM-DD or YYY0s)"
    )


def format_julian_day(
    jd: JulianDay, system: CalendarSystem = CalendarSystem.GREGORIAN
) -> str:
    """Render a JD as date plus clock time to the minute, e.g. -4712-01-01T12:00."""
    date, fraction = from_julian_day(jd, system)
    minutes = round(fraction * 24 * 60)
    if minutes == 24 * 60:  # rounded up across midnight
        date, _ = from_julian_day(math.floor(jd - _JD_OFFSET) + 1 + _JD_OFFSET, system)
        minutes = 0
    return f"{date}T{minutes // 60:02d}:{minutes % 60:02d}"
