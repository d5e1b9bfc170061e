"""Static timeline rendering: one track per interval, solid and dotted parts.

The reliable span of each interval is drawn solid; the remainder of the
possible span is dotted (an interval with an empty reliable span is all
dots).  Output is a deterministic function of the input: no timestamps, no
randomness, stable float formatting.
"""

from __future__ import annotations

from . import calendar as cal
from .core import reliable_interval
from .ontology import ResolvedInterval

_LEFT_MARGIN = 170
_RIGHT_MARGIN = 30
_TOP_MARGIN = 24
_ROW_HEIGHT = 26
_AXIS_SPACE = 40

# Tick steps in years, coarsening until few enough ticks fit.
_YEAR_STEPS = (1, 2, 5, 10, 20, 25, 50, 100, 200, 250, 500, 1000, 2000, 5000)


def _label(res_id: str) -> str:
    if "://" in res_id:
        tail = res_id.rstrip("/").rsplit("/", 1)[-1]
        return tail.rsplit("#", 1)[-1] or res_id
    return res_id


def _span(resolved: list[ResolvedInterval]) -> tuple[float, float]:
    lo = min(item.interval.pb for item in resolved)
    hi = max(item.interval.pe for item in resolved)
    if lo == hi:
        lo -= 0.5
        hi += 0.5
    return lo, hi


def _year_ticks(jd_lo: float, jd_hi: float, max_ticks: int) -> list[tuple[float, str]]:
    """Tick positions at round Gregorian year starts covering [jd_lo, jd_hi]."""
    year_lo = cal.from_julian_day(jd_lo)[0].year
    year_hi = cal.from_julian_day(jd_hi)[0].year + 1
    span = max(1, year_hi - year_lo)
    step = _YEAR_STEPS[-1]
    for candidate in _YEAR_STEPS:
        if span / candidate <= max_ticks:
            step = candidate
            break
    first = (year_lo // step) * step
    ticks = []
    year = first
    while year <= year_hi + step:
        jd = cal.to_julian_day(cal.CalendarDate(year, 1, 1))
        if jd_lo <= jd <= jd_hi:
            ticks.append((jd, str(year)))
        year += step
    return ticks


def _month_ticks(jd_lo: float, jd_hi: float) -> list[tuple[float, str]]:
    date = cal.from_julian_day(jd_lo)[0]
    year, month = date.year, date.month
    ticks = []
    while True:
        jd = cal.to_julian_day(cal.CalendarDate(year, month, 1))
        if jd > jd_hi:
            return ticks
        if jd >= jd_lo:
            ticks.append((jd, f"{year:04d}-{month:02d}"))
        month += 1
        if month > 12:
            month = 1
            year += 1


def _ticks(jd_lo: float, jd_hi: float, max_ticks: int = 10) -> list[tuple[float, str]]:
    if (jd_hi - jd_lo) / 365.2425 < 3.0:
        ticks = _month_ticks(jd_lo, jd_hi)
        if len(ticks) <= max_ticks:
            return ticks
        return ticks[:: max(1, (len(ticks) + max_ticks - 1) // max_ticks)]
    return _year_ticks(jd_lo, jd_hi, max_ticks)


def render_svg(resolved: list[ResolvedInterval], width: int = 900) -> str:
    if not resolved:
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" width="10" height="10"></svg>'
        )
    jd_lo, jd_hi = _span(resolved)
    plot_width = width - _LEFT_MARGIN - _RIGHT_MARGIN
    scale = plot_width / (jd_hi - jd_lo)

    def x(jd: float) -> float:
        return _LEFT_MARGIN + (jd - jd_lo) * scale

    height = _TOP_MARGIN + len(resolved) * _ROW_HEIGHT + _AXIS_SPACE
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" font-family="monospace" font-size="12">'
    ]
    for row, item in enumerate(resolved):
        w = item.interval
        y = _TOP_MARGIN + row * _ROW_HEIGHT + _ROW_HEIGHT // 2
        parts.append(
            f'<text x="6" y="{y + 4}" class="label">{_label(item.id)}</text>'
        )
        rel = reliable_interval(w)
        dotted: list[tuple[float, float]] = []
        if rel is None:
            dotted.append((w.pb, w.pe))
        else:
            if w.pb < rel.begin:
                dotted.append((w.pb, rel.begin))
            if rel.end < w.pe:
                dotted.append((rel.end, w.pe))
            parts.append(
                f'<line class="reliable" x1="{x(rel.begin):.2f}" y1="{y}" '
                f'x2="{x(rel.end):.2f}" y2="{y}" stroke="black" '
                'stroke-width="4"/>'
            )
        for lo, hi in dotted:
            if lo == hi:
                continue
            parts.append(
                f'<line class="possible" x1="{x(lo):.2f}" y1="{y}" '
                f'x2="{x(hi):.2f}" y2="{y}" stroke="black" stroke-width="2" '
                'stroke-dasharray="2,4"/>'
            )
    axis_y = _TOP_MARGIN + len(resolved) * _ROW_HEIGHT + 10
    parts.append(
        f'<line class="axis" x1="{_LEFT_MARGIN}" y1="{axis_y}" '
        f'x2="{width - _RIGHT_MARGIN}" y2="{axis_y}" stroke="black" '
        'stroke-width="1"/>'
    )
    for jd, label in _ticks(jd_lo, jd_hi):
        tick_x = x(jd)
        parts.append(
            f'<line class="tick" x1="{tick_x:.2f}" y1="{axis_y}" '
            f'x2="{tick_x:.2f}" y2="{axis_y + 5}" stroke="black" '
            'stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{tick_x:.2f}" y="{axis_y + 18}" '
            f'text-anchor="middle">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def render_ascii(resolved: list[ResolvedInterval], width: int = 100) -> str:
    if not resolved:
        return ""
    jd_lo, jd_hi = _span(resolved)
    label_width = min(24, max(len(_label(item.id)) for item in resolved))
    track_width = max(20, width - label_width - 2)
    scale = (track_width - 1) / (jd_hi - jd_lo)

    def col(jd: float) -> int:
        return round((jd - jd_lo) * scale)

    lines = []
    for item in resolved:
        w = item.interval
        cells = [" "] * track_width
        for c in range(col(w.pb), col(w.pe) + 1):
            cells[c] = "."
        rel = reliable_interval(w)
        if rel is not None:
            for c in range(col(rel.begin), col(rel.end) + 1):
                cells[c] = "="
        label = _label(item.id)[:label_width]
        lines.append(f"{label:<{label_width}} |{''.join(cells)}|")
    axis = [" "] * track_width
    labels_line = [" "] * (track_width + label_width + 2)
    for jd, text in _ticks(jd_lo, jd_hi, max_ticks=8):
        c = col(jd)
        axis[c] = "+"
        start = label_width + 2 + max(0, min(c - len(text) // 2,
                                             track_width - len(text)))
        for i, ch in enumerate(text):
            labels_line[start + i] = ch
    lines.append(f"{'':<{label_width}} |{''.join(axis)}|")
    lines.append("".join(labels_line).rstrip())
    return "\n".join(lines) + "\n"
